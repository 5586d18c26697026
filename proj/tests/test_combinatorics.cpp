#include "doctest.h"

#include "sicrank/combinatorics.hpp"
#include "sicrank/graph6.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace sicrank;

namespace {

std::vector<Bitset> all_independent_sets(const Graph& g)
{
    std::vector<Bitset> out;
    const std::size_t n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Bitset s(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s.set(i);
        if (g.is_independent(s))
            out.push_back(s);
    }
    return out;
}

std::vector<Bitset> brute_maximal(const Graph& g)
{
    auto all = all_independent_sets(g);
    std::vector<Bitset> out;
    for (const auto& s : all) {
        bool maximal = true;
        for (std::size_t v = 0; v < g.size() && maximal; ++v)
            if (!s.test(v) && !g.neighbors(v).intersects(s))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

template <typename W>
W brute_alpha(const Graph& g, const std::vector<W>& w)
{
    W best{0};
    for (const auto& s : all_independent_sets(g)) {
        W sum{0};
        s.for_each([&](std::size_t v) { sum += w[v]; });
        if (best < sum)
            best = sum;
    }
    return best;
}

std::set<std::vector<std::size_t>> as_sorted(const std::vector<Bitset>& sets)
{
    std::set<std::vector<std::size_t>> out;
    for (const auto& s : sets)
        out.insert(s.to_vector());
    return out;
}

// Verifies a fractional colouring certificate against every independent set.
void check_certificate(const Graph& g, const RationalWeights& w, const FractionalColoring& fc)
{
    const std::size_t n = g.size();
    std::vector<Rational> covered(n, Rational(0));
    Rational primal;
    for (const auto& [set, z] : fc.cover) {
        CHECK(g.is_independent(set));
        CHECK(z.sign() > 0);
        primal += z;
        set.for_each([&](std::size_t v) { covered[v] += z; });
    }
    CHECK(primal == fc.value);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(w[i] <= covered[i]);
    Rational dual;
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(fc.dual[i].sign() >= 0);
        dual += w[i] * fc.dual[i];
    }
    CHECK(dual == fc.value);
    if (n <= 14)
        for (const auto& s : all_independent_sets(g)) {
            Rational sum;
            s.for_each([&](std::size_t v) { sum += fc.dual[v]; });
            CHECK(sum <= Rational(1));
        }
}

} // namespace

TEST_CASE("maximal independent sets")
{
    auto k3 = maximal_independent_sets(complete_graph(3));
    CHECK(as_sorted(k3.sets) == std::set<std::vector<std::size_t>>{{0}, {1}, {2}});
    auto c5 = maximal_independent_sets(cycle_graph(5));
    CHECK(c5.sets.size() == 5);
    for (const auto& s : c5.sets)
        CHECK(s.count() == 2);
    CHECK(maximal_independent_sets(Graph(0)).sets.size() == 1);
    CHECK_THROWS_AS(maximal_independent_sets(Graph(3), 0), CapExceeded);
    try {
        maximal_independent_sets(cycle_graph(9), 3);
    } catch (const CapExceeded& e) {
        CHECK(e.partial_count() == 3);
    }

    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const Graph g = test::random_graph(1 + rng() % 10, 0.35, rng);
        CHECK(as_sorted(maximal_independent_sets(g).sets) == as_sorted(brute_maximal(g)));
    }
}

TEST_CASE("maximal independent sets of products are products")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const Graph g = test::random_graph(1 + rng() % 6, 0.4, rng);
        const Graph f = test::random_graph(1 + rng() % 6, 0.4, rng);
        const Graph p = disjunctive_product(g, f);
        const auto mg = maximal_independent_sets(g).sets;
        const auto mf = maximal_independent_sets(f).sets;
        std::set<std::vector<std::size_t>> products;
        for (const auto& i : mg)
            for (const auto& j : mf) {
                std::vector<std::size_t> s;
                i.for_each([&](std::size_t u) { j.for_each([&](std::size_t v) { s.push_back(u * f.size() + v); }); });
                std::sort(s.begin(), s.end());
                products.insert(s);
            }
        CHECK(as_sorted(maximal_independent_sets(p).sets) == products);
    }
}

TEST_CASE("max weight independent set")
{
    const Graph c5 = cycle_graph(5);
    auto r = max_weight_independent_set(c5, RationalWeights(5, Rational(1)));
    CHECK(r.value == Rational(2));
    CHECK(r.set.to_vector() == std::vector<std::size_t>{0, 2});
    auto z = max_weight_independent_set(c5, RationalWeights(5, Rational(0)));
    CHECK(z.value == Rational(0));
    CHECK(z.set.none());
    CHECK_THROWS_AS(max_weight_independent_set(c5, RationalWeights{1, 1, -1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(max_weight_independent_set(c5, RationalWeights{1, 1}), std::invalid_argument);

    const Graph yo = decode_graph6("L??G]OxhAgkOc`");
    const RationalWeights ones(13, Rational(1));
    CHECK(brute_alpha(yo, ones) == Rational(5));
    CHECK(max_weight_independent_set(yo, ones).value == Rational(5));
    CHECK(independence_number(yo) == 5);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 80; ++t) {
        const Graph g = test::random_graph(1 + rng() % 13, 0.3, rng);
        const auto w = test::random_weights(g.size(), rng);
        const auto res = max_weight_independent_set(g, w);
        const Rational best = brute_alpha(g, w);
        CHECK(res.value == best);
        CHECK(g.is_independent(res.set));
        CHECK(weighted_independence_number(g, w) == best);
        // lexicographically smallest optimum among sets without zero weights
        Bitset lex;
        bool have = false;
        for (const auto& s : all_independent_sets(g)) {
            Rational sum;
            bool zero = false;
            s.for_each([&](std::size_t v) {
                sum += w[v];
                zero = zero || w[v].sign() == 0;
            });
            if (sum == best && !zero && (!have || lex_less(s, lex))) {
                lex = s;
                have = true;
            }
        }
        CHECK(res.set == lex);

        std::vector<double> wd;
        for (const auto& q : w)
            wd.push_back(q.to_double());
        CHECK(max_weight_independent_set(g, wd).value == doctest::Approx(best.to_double()));
    }
}

TEST_CASE("independence and clique numbers")
{
    CHECK(independence_number(ar_graph(4)) == 4);
    CHECK(independence_number(complete_graph(6)) == 1);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(decode_graph6(test::kCatalogGraph6[2])) == 4); // H
    CHECK(clique_number(decode_graph6(test::kCatalogGraph6[4])) == 3); // BBCr
    const Graph yo = decode_graph6("L??G]OxhAgkOc`");
    CHECK(independence_number(disjunctive_product(yo, ar_graph(2))) == 10);
    CHECK(independence_number(Graph(0)) == 0);
}

TEST_CASE("fractional chromatic number: known values")
{
    CHECK(fractional_chromatic(cycle_graph(5)) == Rational(5, 2));
    CHECK(fractional_chromatic(ar_graph(3)) == Rational(8, 3));
    CHECK(fractional_chromatic(decode_graph6("L??G]OxhAgkOc`")) == Rational(35, 11));
    CHECK(fractional_chromatic(complete_graph(4)) == Rational(4));
    CHECK(fractional_chromatic(Graph(3)) == Rational(1));
    CHECK(fractional_chromatic(Graph(0)) == Rational(0));
    CHECK(fractional_chromatic(cycle_graph(5), RationalWeights(5, Rational(0))) == Rational(0));
}

TEST_CASE("fractional chromatic certificates")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const Graph g = test::random_graph(1 + rng() % 12, 0.45, rng);
        const auto w = (t % 2) ? test::random_weights(g.size(), rng) : RationalWeights(g.size(), Rational(1));
        const auto fc = fractional_chromatic_certified(g, w);
        check_certificate(g, w, fc);
        // cover uses maximal sets only
        for (const auto& [s, z] : fc.cover)
            for (std::size_t v = 0; v < g.size(); ++v)
                if (!s.test(v))
                    CHECK(g.neighbors(v).intersects(s));
    }
}

TEST_CASE("vertex-transitive graphs attain n / alpha")
{
    for (std::size_t r = 2; r <= 6; ++r) {
        const Graph g = ar_graph(r);
        CHECK(fractional_chromatic(g) == Rational(static_cast<long>(g.size()), static_cast<long>(independence_number(g))));
    }
    for (std::size_t len = 5; len <= 11; len += 2) {
        const Graph g = cycle_graph(len);
        CHECK(fractional_chromatic(g) == Rational(static_cast<long>(len), static_cast<long>(independence_number(g))));
    }
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        const Graph g = test::random_graph(1 + rng() % 10, 0.4, rng);
        const Rational chi = fractional_chromatic(g);
        CHECK(Rational(static_cast<long>(g.size()), static_cast<long>(independence_number(g))) <= chi);
    }
}

TEST_CASE("clique / fractional / greedy sandwich")
{
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        const Graph g = test::random_graph(1 + rng() % 12, 0.5, rng);
        const Rational chi = fractional_chromatic(g);
        CHECK(Rational(static_cast<long>(clique_number(g))) <= chi);
        CHECK(chi <= Rational(static_cast<long>(greedy_coloring_count(g))));
    }
}

TEST_CASE("product multiplicativity")
{
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        const Graph g = test::random_graph(1 + rng() % 7, 0.45, rng);
        const Graph f = test::random_graph(1 + rng() % 7, 0.45, rng);
        const auto wg = test::random_weights(g.size(), rng);
        const auto wf = test::random_weights(f.size(), rng);
        RationalWeights wp;
        for (const auto& a : wg)
            for (const auto& b : wf)
                wp.push_back(a * b);
        const Graph p = disjunctive_product(g, f);
        CHECK(weighted_independence_number(p, wp) ==
              weighted_independence_number(g, wg) * weighted_independence_number(f, wf));
        CHECK(fractional_chromatic(p, wp) == fractional_chromatic(g, wg) * fractional_chromatic(f, wf));
    }
}
