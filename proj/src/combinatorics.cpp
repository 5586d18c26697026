#include "sicrank/combinatorics.hpp"

#include "sicrank/column_lp.hpp"
#include "sicrank/mwis.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace sicrank {

namespace {

template <typename W>
void require_nonnegative(const Graph& g, const std::vector<W>& w)
{
    if (w.size() != g.size())
        throw std::invalid_argument("weight vector length " + std::to_string(w.size()) + " does not match n = " +
                                    std::to_string(g.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] < W{0})
            throw std::invalid_argument("negative weight at vertex " + std::to_string(i));
}

struct BronKerbosch {
    const Graph& comp;
    std::size_t cap;
    IndependentSetFamily& out;

    void run(Bitset& r, Bitset p, Bitset x)
    {
        if (p.none() && x.none()) {
            if (out.sets.size() >= cap)
                throw CapExceeded("maximal_independent_sets: more than " + std::to_string(cap) + " sets",
                                  out.sets.size());
            out.sets.push_back(r);
            return;
        }
        std::size_t pivot = Bitset::npos;
        std::size_t best = 0;
        (p | x).for_each([&](std::size_t u) {
            const std::size_t c = (p & comp.neighbors(u)).count();
            if (pivot == Bitset::npos || c > best) {
                pivot = u;
                best = c;
            }
        });
        Bitset todo = p;
        todo.subtract(comp.neighbors(pivot));
        todo.for_each([&](std::size_t v) {
            r.set(v);
            run(r, p & comp.neighbors(v), x & comp.neighbors(v));
            r.reset(v);
            p.reset(v);
            x.set(v);
        });
    }
};

// Slack for the tie-break pass; rounding makes residual targets inexact in double.
template <typename W>
W slack(const W&)
{
    return W{0};
}

template <>
double slack(const double& target)
{
    return 1e-9 * (1.0 + target);
}

template <typename W>
WeightedSet<W> lex_smallest_optimum(const Graph& g, const std::vector<W>& w)
{
    require_nonnegative(g, w);
    detail::MwisSearch<W> search(g, w);
    const W target = search.solve_all().value;

    WeightedSet<W> out{Bitset(g.size()), W{0}};
    Bitset allowed(g.size());
    allowed.set_all();
    W need = target;
    const W eps = slack(target);
    for (std::size_t v = 0; v < g.size() && eps < need; ++v) {
        if (!allowed.test(v) || !(W{0} < w[v]))
            continue;
        Bitset rest = allowed;
        rest.subtract(g.neighbors(v));
        for (std::size_t u = 0; u <= v; ++u)
            rest.reset(u);
        const W remaining = need - w[v];
        const W got = search.solve(rest, remaining - eps).value;
        if (!(got < remaining - eps)) {
            out.set.set(v);
            out.value += w[v];
            need = remaining;
            allowed = rest;
        } else {
            allowed.reset(v);
        }
    }
    return out;
}

} // namespace

IndependentSetFamily maximal_independent_sets(const Graph& g, std::size_t cap)
{
    IndependentSetFamily out;
    out.graph_n = g.size();
    const Graph comp = g.complement();
    BronKerbosch bk{comp, cap, out};
    Bitset r(g.size());
    Bitset p(g.size());
    p.set_all();
    bk.run(r, p, Bitset(g.size()));
    return out;
}

WeightedSet<Rational> max_weight_independent_set(const Graph& g, const RationalWeights& w)
{
    return lex_smallest_optimum(g, w);
}

WeightedSet<double> max_weight_independent_set(const Graph& g, const RealWeights& w)
{
    return lex_smallest_optimum(g, w);
}

Rational weighted_independence_number(const Graph& g, const RationalWeights& w)
{
    require_nonnegative(g, w);
    return exact_max_weight_search(g, w).value;
}

double weighted_independence_number(const Graph& g, const RealWeights& w)
{
    require_nonnegative(g, w);
    detail::MwisSearch<double> search(g, w);
    return search.solve_all().value;
}

std::size_t independence_number(const Graph& g)
{
    std::vector<std::int64_t> ones(g.size(), 1);
    detail::MwisSearch<std::int64_t> search(g, ones);
    return static_cast<std::size_t>(search.solve_all().value);
}

std::size_t clique_number(const Graph& g) { return independence_number(g.complement()); }

std::size_t greedy_coloring_count(const Graph& g)
{
    std::vector<std::size_t> colour(g.size(), 0);
    std::size_t used = 0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        std::vector<bool> taken(used + 1, false);
        for (std::size_t u = 0; u < v; ++u)
            if (g.adjacent(u, v))
                taken[colour[u]] = true;
        std::size_t c = 0;
        while (taken[c])
            ++c;
        colour[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

Bitset extend_to_maximal(const Graph& g, Bitset set)
{
    Bitset blocked(g.size());
    set.for_each([&](std::size_t v) { blocked |= g.neighbors(v); });
    for (std::size_t v = 0; v < g.size(); ++v)
        if (!set.test(v) && !blocked.test(v)) {
            set.set(v);
            blocked |= g.neighbors(v);
        }
    return set;
}

WeightedSet<Rational> exact_max_weight_search(const Graph& g, const RationalWeights& y)
{
    const std::size_t n = g.size();
    mpz_class lcm = 1;
    for (const auto& q : y)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.raw().get_den_mpz_t());
    std::vector<std::int64_t> scaled(n, 0);
    mpz_class total = 0;
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i) {
        mpz_class p = y[i].raw().get_num() * (lcm / y[i].raw().get_den());
        total += p;
        if (!p.fits_slong_p())
            fits = false;
        else
            scaled[i] = p.get_si();
    }
    if (fits && total < (mpz_class(1) << 62)) {
        detail::MwisSearch<std::int64_t> search(g, scaled);
        auto r = search.solve_all();
        Rational value;
        r.set.for_each([&](std::size_t v) { value += y[v]; });
        return {r.set, value};
    }
    detail::MwisSearch<Rational> search(g, y);
    auto r = search.solve_all();
    return {r.set, r.value};
}

FractionalColoring fractional_chromatic_certified(const Graph& g, const std::optional<RationalWeights>& weights)
{
    const std::size_t n = g.size();
    RationalWeights w = weights ? *weights : RationalWeights(n, Rational(1));
    require_nonnegative(g, w);

    FractionalColoring out;
    if (n == 0)
        return out;

    using Lp = ColumnLp<Rational>;
    Lp lp(w);
    // Surplus columns keep the duals nonnegative; singletons form the start basis.
    for (std::size_t i = 0; i < n; ++i)
        lp.add_column({{i, Rational(-1)}}, Rational(0));
    std::vector<std::size_t> basis;
    std::vector<Bitset> column_sets(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
        Bitset s(n);
        s.set(i);
        basis.push_back(lp.add_column({{i, Rational(1)}}, Rational(1)));
        column_sets.push_back(s);
    }
    lp.set_basis(basis);

    while (true) {
        lp.optimize();
        ++out.pricing_rounds;
        RationalWeights y = lp.duals();
        for (auto& v : y)
            if (v.sign() < 0)
                v = Rational(0);
        auto best = exact_max_weight_search(g, y);
        if (!(Rational(1) < best.value))
            break;
        Bitset col = extend_to_maximal(g, best.set);
        std::vector<Lp::Entry> entries;
        col.for_each([&](std::size_t v) { entries.push_back({v, Rational(1)}); });
        lp.add_column(std::move(entries), Rational(1));
        column_sets.push_back(col);
        ++out.columns_generated;
    }

    out.value = lp.objective();
    out.dual = lp.duals();
    Rational dual_value;
    for (std::size_t i = 0; i < n; ++i) {
        if (out.dual[i].sign() < 0)
            throw std::logic_error("fractional_chromatic: negative dual at optimum");
        dual_value += w[i] * out.dual[i];
    }
    if (dual_value != out.value)
        throw std::logic_error("fractional_chromatic: primal " + out.value.to_string() + " != dual " +
                               dual_value.to_string());

    std::map<std::vector<std::size_t>, std::pair<Bitset, Rational>> merged;
    for (std::size_t c = n; c < lp.columns(); ++c) {
        const Rational z = lp.value(c);
        if (z.sign() <= 0)
            continue;
        Bitset s = extend_to_maximal(g, column_sets[c]);
        auto key = s.to_vector();
        auto [it, inserted] = merged.emplace(key, std::make_pair(s, z));
        if (!inserted)
            it->second.second += z;
    }
    for (auto& [key, entry] : merged)
        out.cover.push_back(std::move(entry));
    return out;
}

Rational fractional_chromatic(const Graph& g, const std::optional<RationalWeights>& w)
{
    return fractional_chromatic_certified(g, w).value;
}

} // namespace sicrank
