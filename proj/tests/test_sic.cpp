#include "doctest.h"

#include "sicrank/combinatorics.hpp"
#include "sicrank/constructions.hpp"
#include "sicrank/sic_solver.hpp"
#include "test_support.hpp"

#include <random>

using namespace sicrank;

namespace {

constexpr double kGap = 1e-8;

// max over independent sets of sum w, by subset enumeration (w may be negative)
double brute_alpha(const Graph& g, std::span<const double> w)
{
    const std::size_t n = g.size();
    double best = 0.0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        double s = 0.0;
        for (std::size_t u = 0; u < n && ok; ++u) {
            if (!(mask >> u & 1))
                continue;
            s += w[u];
            for (std::size_t v = u + 1; v < n; ++v)
                if ((mask >> v & 1) && g.adjacent(u, v))
                    ok = false;
        }
        if (ok)
            best = std::max(best, s);
    }
    return best;
}

double lambda_min(const ProjectiveRepresentation& pr, std::span<const double> w)
{
    const auto d = static_cast<Eigen::Index>(pr.dimension);
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < w.size(); ++k)
        m += w[k] * pr.projectors[k];
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
}

void check_certificate(const ProjectiveRepresentation& pr, const SicCertificate& c)
{
    CHECK(c.status == "converged");
    CHECK(c.converged(kGap));
    CHECK(c.eta_lower <= c.eta_upper);
    REQUIRE(c.weights.size() == pr.projectors.size());
    for (double x : c.weights)
        CHECK(x >= 0.0);
    CHECK(exact_alpha(pr.graph, c.weights) <= Rational(1));
    CHECK(std::abs(lambda_min(pr, c.weights) - c.eta_lower) <= 1e-10);
    CHECK_FALSE(c.witness_vectors.empty());
    for (const auto& s : c.active_sets) {
        double sum = 0.0;
        bool independent = true;
        s.for_each([&](std::size_t u) {
            sum += c.weights[u];
            s.for_each([&](std::size_t v) { independent = independent && !pr.graph.adjacent(u, v); });
        });
        CHECK(independent);
        CHECK(sum <= 1.0 + 1e-9);
        CHECK(sum >= 1.0 - 1e-7);
    }
}

ProjectiveRepresentation random_sub_pr(std::mt19937_64& rng, std::size_t max_n)
{
    const auto rays = test::yu_oh_rays();
    std::vector<std::size_t> idx(rays.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t n = 2 + rng() % (max_n - 1);
    std::vector<ComplexVector> sub;
    for (std::size_t i = 0; i < n; ++i)
        sub.push_back(rays[idx[i]]);
    return pr_from_rays(sub);
}

} // namespace

TEST_CASE("cycle and basis PRs have ratio 1")
{
    for (std::size_t k = 2; k <= 5; ++k) {
        const auto pr = cycle_pr(k);
        const auto c = sic_ratio(pr);
        CHECK(std::abs(c.eta_lower - 1.0) <= kGap);
        CHECK(std::abs(c.eta_upper - 1.0) <= kGap);
        check_certificate(pr, c);
    }
    for (std::size_t d = 1; d <= 6; ++d) {
        const auto c = sic_ratio(basis_pr(d));
        CHECK(std::abs(c.eta_lower - 1.0) <= kGap);
        check_certificate(basis_pr(d), c);
    }
    CHECK(std::abs(sic_ratio(ar_pr(3)).eta_lower - 1.0) <= kGap);
}

TEST_CASE("YO ratio")
{
    const auto pr = pr_from_rays(test::yu_oh_rays());
    const auto c = sic_ratio(pr);
    check_certificate(pr, c);
    CHECK(c.eta_lower == doctest::Approx(35.0 / 33.0).epsilon(1e-9));
    CHECK(c.eta_upper >= 35.0 / 33.0 - 1e-12);

    const auto gap = witness_gap(pr, c.weights);
    CHECK(gap.violated());
    CHECK(gap.rhs <= 1.0);
    CHECK(gap.lhs / gap.rhs >= 35.0 / 33.0 - kGap);
}

TEST_CASE("catalog rays reach the listed ratios")
{
    const auto cat = Catalog::builtin();
    for (const char* name : {"H", "X"}) {
        const auto e = cat.entry(name);
        const auto pr = catalog_rank1_pr(e);
        REQUIRE(pr);
        const auto c = sic_ratio(*pr);
        check_certificate(*pr, c);
        CHECK(c.eta_lower >= e.table1->eta.to_double() - 1e-6);
    }
}

TEST_CASE("witness gap")
{
    const auto pr = cycle_pr(2);
    const std::vector<double> ones(5, 1.0);
    auto g = witness_gap(pr, ones);
    CHECK(g.lhs == doctest::Approx(2.0));
    CHECK(g.rhs == 2.0);
    CHECK_FALSE(g.violated());
    const std::vector<double> zero(5, 0.0);
    g = witness_gap(pr, zero);
    CHECK(g.lhs == 0.0);
    CHECK(g.rhs == 0.0);
    const std::vector<double> neg{1, 1, -1, 1, 1};
    CHECK_THROWS_AS(witness_gap(pr, neg), std::invalid_argument);
}

TEST_CASE("dimension relation")
{
    auto r = check_dimension_relation(1, Rational(35, 11), 35.0 / 33.0, 3);
    CHECK(r.holds);
    CHECK(std::abs(r.slack) < 1e-12);
    r = check_dimension_relation(2, Rational(5, 2), 1.0, 5);
    CHECK(r.holds);
    CHECK(r.slack == 0.0);
    r = check_dimension_relation(1, Rational(3), 1.2, 3);
    CHECK_FALSE(r.holds);
    CHECK(r.slack == doctest::Approx(-0.6));
}

TEST_CASE("minimum eigenvalue is concave with cut supergradients")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int t = 0; t < 20; ++t) {
        const auto pr = random_sub_pr(rng, 13);
        const std::size_t n = pr.projectors.size();
        std::vector<double> a(n), b(n), mid(n);
        for (std::size_t k = 0; k < n; ++k) {
            a[k] = unit(rng);
            b[k] = unit(rng);
            mid[k] = 0.5 * (a[k] + b[k]);
        }
        CHECK(lambda_min(pr, mid) >= 0.5 * (lambda_min(pr, a) + lambda_min(pr, b)) - 1e-12);

        const auto me = min_eigen(pr, a);
        for (const auto& x : me.vectors) {
            std::vector<double> g(n);
            for (std::size_t k = 0; k < n; ++k)
                g[k] = (x.adjoint() * pr.projectors[k] * x)(0, 0).real();
            double at_a = 0.0, at_b = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                at_a += g[k] * a[k];
                at_b += g[k] * b[k];
            }
            CHECK(at_a == doctest::Approx(me.value).epsilon(1e-9));
            CHECK(lambda_min(pr, b) <= at_b + 1e-12);
        }
    }
}

TEST_CASE("negative weights never beat the optimum")
{
    std::mt19937_64 rng(11);
    const double grid[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int t = 0; t < 4; ++t) {
        const auto pr = random_sub_pr(rng, 6);
        const std::size_t n = pr.projectors.size();
        const double eta = sic_ratio(pr).eta_upper;
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k)
            total *= 5;
        double best = -1e300;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<double> w(n);
            std::size_t c = code;
            for (std::size_t k = 0; k < n; ++k, c /= 5)
                w[k] = grid[c % 5];
            const double a = brute_alpha(pr.graph, w);
            if (a <= 0.0)
                continue;
            best = std::max(best, lambda_min(pr, w) / a);
        }
        CHECK(best <= eta + 1e-9);
    }
}

TEST_CASE("tensor products are super-multiplicative")
{
    const auto yo = pr_from_rays(test::yu_oh_rays());
    const double eta_yo = sic_ratio(yo).eta_lower;
    const auto c = sic_ratio(tensor_pr(yo, ar_pr(2)));
    CHECK(c.eta_lower >= eta_yo * 1.0 - 2 * kGap);

    const auto h = *catalog_rank1_pr(Catalog::builtin().entry("H"));
    const double eta_h = sic_ratio(h).eta_lower;
    CHECK(sic_ratio(tensor_pr(h, ar_pr(2))).eta_lower >= eta_h - 2 * kGap);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 5; ++t) {
        const auto a = random_sub_pr(rng, 7);
        const auto b = random_sub_pr(rng, 5);
        const double ea = sic_ratio(a).eta_lower;
        const double eb = sic_ratio(b).eta_lower;
        CHECK(sic_ratio(tensor_pr(a, b)).eta_upper >= ea * eb - 2 * kGap);
    }
}

TEST_CASE("solver options")
{
    const auto pr = pr_from_rays(test::yu_oh_rays());
    SicOptions bad;
    bad.gap = 0.0;
    CHECK_THROWS_AS(sic_ratio(pr, bad), std::invalid_argument);

    SicOptions warm;
    warm.initial_weights = sic_ratio(pr).weights;
    const auto c = sic_ratio(pr, warm);
    CHECK(c.converged(kGap));
    CHECK(c.eta_lower == doctest::Approx(35.0 / 33.0).epsilon(1e-9));

    SicOptions below;
    below.stop_below = 1.0;
    const auto cyc = sic_ratio(cycle_pr(3), below);
    CHECK(cyc.eta_upper <= 1.0 + kGap);

    SicOptions above;
    above.stop_above = 1.0;
    const auto yo_above = sic_ratio(pr, above);
    CHECK(yo_above.eta_lower > 1.0);
    CHECK(exact_alpha(pr.graph, yo_above.weights) <= Rational(1));
}

TEST_CASE("certificate JSON")
{
    const auto pr = pr_from_rays(test::yu_oh_rays());
    const auto c = sic_ratio(pr);
    const auto j = to_json(c);
    CHECK(std::stod(j["eta_lower"].get<std::string>()) == c.eta_lower);
    CHECK(std::stod(j["eta_upper"].get<std::string>()) == c.eta_upper);
    REQUIRE(j["weights"].size() == 13);
    for (std::size_t k = 0; k < 13; ++k)
        CHECK(std::stod(j["weights"][k].get<std::string>()) == c.weights[k]);
    CHECK(j["status"] == "converged");
    CHECK(j["active_sets"].size() == c.active_sets.size());
    CHECK(format_double(0.1) == "0.10000000000000001");
}
