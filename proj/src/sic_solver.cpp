#include "sicrank/sic_solver.hpp"

#include "sicrank/column_lp.hpp"
#include "sicrank/combinatorics.hpp"
#include "sicrank/mwis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace sicrank {

namespace {

constexpr double kSeparationTol = 1e-9;
constexpr int kGridBits = 40;

double weighted_alpha(const Graph& g, std::span<const double> w)
{
    detail::MwisSearch<double> search(g, w);
    return search.solve_all().value;
}

// Floors each weight onto the grid 2^-kGridBits so exact alpha runs in int64.
std::vector<std::int64_t> to_grid(std::span<const double> w)
{
    std::vector<std::int64_t> out;
    for (double x : w)
        out.push_back(static_cast<std::int64_t>(std::floor(std::max(0.0, x) * std::ldexp(1.0, kGridBits))));
    return out;
}

std::vector<double> from_grid(std::span<const std::int64_t> w)
{
    std::vector<double> out;
    for (auto x : w)
        out.push_back(std::ldexp(static_cast<double>(x), -kGridBits));
    return out;
}

// Scales w so alpha(G, w) <= 1 holds exactly.
std::vector<double> polish(const Graph& g, std::span<const double> w)
{
    std::vector<double> cur(w.begin(), w.end());
    for (int attempt = 0; attempt < 60; ++attempt) {
        auto grid = to_grid(cur);
        detail::MwisSearch<std::int64_t> search(g, grid);
        const std::int64_t alpha = search.solve_all().value;
        const std::int64_t one = std::int64_t{1} << kGridBits;
        if (alpha <= one)
            return from_grid(grid);
        const double scale = static_cast<double>(one) / static_cast<double>(alpha) * (1.0 - 1e-14);
        cur = from_grid(grid);
        for (auto& x : cur)
            x *= scale;
    }
    throw std::logic_error("sic_ratio: weight polish did not terminate");
}

} // namespace

MinEigen min_eigen(const ProjectiveRepresentation& pr, std::span<const double> w, double cluster_width)
{
    if (w.size() != pr.projectors.size())
        throw std::invalid_argument("min_eigen: weight vector length does not match the PR");
    const auto d = static_cast<Eigen::Index>(pr.dimension);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] != 0.0)
            m += w[k] * pr.projectors[k];
    const auto eig = hermitian_eigen(m);
    MinEigen out;
    out.value = eig.values[0];
    for (Eigen::Index i = 0; i < eig.values.size() && eig.values[i] <= out.value + cluster_width; ++i)
        out.vectors.push_back(eig.vectors.col(i));
    return out;
}

SicCertificate sic_ratio(const ProjectiveRepresentation& pr, const SicOptions& opts)
{
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    const Graph& g = pr.graph;
    const std::size_t n = g.size();
    if (!(opts.gap > 0.0))
        throw std::invalid_argument("sic_ratio: gap must be positive");

    SicCertificate cert;
    if (n == 0) {
        cert.status = "converged";
        return cert;
    }

    auto cut_of = [&](const ComplexVector& x) {
        std::vector<double> c(n);
        for (std::size_t k = 0; k < n; ++k)
            c[k] = (x.adjoint() * pr.projectors[k] * x)(0, 0).real();
        return c;
    };
    auto dot = [](const std::vector<double>& a, std::span<const double> b) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k)
            s += a[k] * b[k];
        return s;
    };

    using Lp = ColumnLp<double>;
    std::vector<double> rhs(n + 1, 0.0);
    rhs[n] = 1.0;
    Lp lp(rhs);
    for (std::size_t k = 0; k < n; ++k)
        lp.add_column({{k, -1.0}}, 0.0);
    std::vector<std::size_t> basis;
    std::vector<std::pair<std::size_t, Bitset>> set_columns;
    for (std::size_t k = 0; k < n; ++k) {
        Bitset s(n);
        s.set(k);
        const std::size_t col = lp.add_column({{k, 1.0}}, 1.0);
        basis.push_back(col);
        set_columns.emplace_back(col, s);
    }
    std::size_t last_cut = 0;
    auto add_cut = [&](const std::vector<double>& c) {
        std::vector<Lp::Entry> e;
        for (std::size_t k = 0; k < n; ++k)
            if (c[k] != 0.0)
                e.push_back({k, -c[k]});
        e.push_back({n, 1.0});
        ++cert.cuts;
        last_cut = lp.add_column(std::move(e), 0.0);
        return last_cut;
    };

    std::vector<double> best_w;
    double lower = -std::numeric_limits<double>::infinity();
    auto consider = [&](std::span<const double> w, double f, double alpha) {
        if (!(alpha > 0.0))
            return;
        const double lb = f / alpha;
        if (lb > lower) {
            lower = lb;
            best_w.assign(w.begin(), w.end());
            for (auto& x : best_w)
                x /= alpha;
        }
    };

    std::vector<double> w0 = opts.initial_weights.value_or(std::vector<double>(n, 1.0));
    if (w0.size() != n)
        throw std::invalid_argument("sic_ratio: initial weights have the wrong length");
    for (auto& x : w0)
        x = std::max(0.0, x);
    if (std::all_of(w0.begin(), w0.end(), [](double x) { return x == 0.0; }))
        w0.assign(n, 1.0);
    {
        const auto me = min_eigen(pr, w0, opts.cluster_width);
        consider(w0, me.value, weighted_alpha(g, w0));
        basis.push_back(add_cut(cut_of(me.vectors.front())));
        for (std::size_t i = 1; i < me.vectors.size(); ++i)
            add_cut(cut_of(me.vectors[i]));
    }
    lp.set_basis(basis);
    const std::vector<std::size_t> start_basis = basis;

    double upper = std::numeric_limits<double>::infinity();
    std::vector<double> w_lp(n);
    while (true) {
        try {
            lp.optimize();
        } catch (const std::runtime_error&) {
            // Round-off made the basis singular; restart from singletons plus the latest cut.
            std::vector<std::size_t> fresh(start_basis.begin(), start_basis.end() - 1);
            fresh.push_back(last_cut);
            lp.set_basis(fresh);
            lp.optimize();
            ++cert.recoveries;
        }
        ++cert.iterations;
        const auto& y = lp.duals();
        for (std::size_t k = 0; k < n; ++k)
            w_lp[k] = std::max(0.0, y[k]);
        const double t_lp = y[n];
        upper = std::min(upper, lp.objective());

        if (upper - lower <= opts.gap) {
            cert.status = "converged";
            break;
        }
        if (opts.stop_above && lower > *opts.stop_above) {
            cert.status = "stop_above";
            break;
        }
        if (opts.stop_below && upper <= *opts.stop_below) {
            cert.status = "stop_below";
            break;
        }
        if (cert.cuts >= opts.max_cuts) {
            cert.status = "cut_cap";
            break;
        }
        if (std::chrono::duration<double>(Clock::now() - start).count() > opts.max_seconds) {
            cert.status = "time_cap";
            break;
        }

        bool progress = false;
        detail::MwisSearch<double> search(g, w_lp);
        const auto sep = search.solve_all();
        if (sep.value > 1.0 + kSeparationTol) {
            const Bitset s = extend_to_maximal(g, sep.set);
            std::vector<Lp::Entry> e;
            s.for_each([&](std::size_t v) { e.push_back({v, 1.0}); });
            set_columns.emplace_back(lp.add_column(std::move(e), 1.0), s);
            progress = true;
        }

        bool cut_added = false;
        if (!best_w.empty() && opts.stabilization > 0.0) {
            std::vector<double> wq(n);
            for (std::size_t k = 0; k < n; ++k)
                wq[k] = opts.stabilization * best_w[k] + (1.0 - opts.stabilization) * w_lp[k];
            const auto me = min_eigen(pr, wq, opts.cluster_width);
            consider(wq, me.value, weighted_alpha(g, wq));
            for (const auto& x : me.vectors) {
                auto c = cut_of(x);
                if (t_lp > dot(c, w_lp) + 1e-12) {
                    add_cut(c);
                    cut_added = true;
                }
            }
        }
        const auto me = min_eigen(pr, w_lp, opts.cluster_width);
        consider(w_lp, me.value, sep.value);
        if (!cut_added)
            for (const auto& x : me.vectors) {
                auto c = cut_of(x);
                if (t_lp > dot(c, w_lp) + 1e-12) {
                    add_cut(c);
                    cut_added = true;
                }
            }
        if (!progress && !cut_added) {
            // Nothing separates the LP point: it is optimal up to round-off.
            upper = std::max(lower, std::min(upper, t_lp));
            cert.status = "converged";
            break;
        }
    }

    cert.weights = polish(g, best_w);
    const auto me = min_eigen(pr, cert.weights, opts.cluster_width);
    cert.eta_lower = me.value;
    cert.eta_upper = std::max(upper, cert.eta_lower);
    cert.witness_vectors = me.vectors;
    for (const auto& [col, s] : set_columns) {
        double sum = 0.0;
        s.for_each([&](std::size_t v) { sum += cert.weights[v]; });
        if (sum >= 1.0 - 1e-7)
            cert.active_sets.push_back(s);
    }
    cert.set_constraints = set_columns.size();
    cert.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    return cert;
}

Rational exact_alpha(const Graph& g, std::span<const double> w)
{
    RationalWeights q;
    for (double x : w)
        q.push_back(Rational::from_double(x));
    return weighted_independence_number(g, q);
}

WitnessGap witness_gap(const ProjectiveRepresentation& pr, std::span<const double> w)
{
    for (double x : w)
        if (x < 0.0)
            throw std::invalid_argument("witness_gap: negative weight");
    WitnessGap out;
    out.lhs = min_eigen(pr, w).value;
    out.rhs = weighted_alpha(pr.graph, w);
    return out;
}

DimensionRelation check_dimension_relation(std::size_t r, const Rational& chi_f, double eta, std::size_t d, double tol)
{
    DimensionRelation out;
    out.slack = static_cast<double>(r) * chi_f.to_double() - eta * static_cast<double>(d);
    out.holds = out.slack >= -tol;
    return out;
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const SicCertificate& c)
{
    nlohmann::json j;
    nlohmann::json w = nlohmann::json::array();
    for (double x : c.weights)
        w.push_back(format_double(x));
    j["weights"] = w;
    j["eta_lower"] = format_double(c.eta_lower);
    j["eta_upper"] = format_double(c.eta_upper);
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& s : c.active_sets)
        sets.push_back(s.to_vector());
    j["active_sets"] = sets;
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& v : c.witness_vectors) {
        nlohmann::json e = nlohmann::json::array();
        for (Eigen::Index k = 0; k < v.size(); ++k)
            e.push_back({format_double(v[k].real()), format_double(v[k].imag())});
        vecs.push_back(e);
    }
    j["witness_vectors"] = vecs;
    j["iterations"] = c.iterations;
    j["cuts"] = c.cuts;
    j["set_constraints"] = c.set_constraints;
    j["wall_time"] = format_double(c.wall_time);
    j["recoveries"] = c.recoveries;
    j["status"] = c.status;
    return j;
}

} // namespace sicrank
