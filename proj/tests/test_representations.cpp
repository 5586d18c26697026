#include "doctest.h"

#include "sicrank/graph6.hpp"
#include "sicrank/isomorphism.hpp"
#include "sicrank/representations.hpp"
#include "test_support.hpp"

#include <random>

using namespace sicrank;

namespace {

ComplexMatrix diag(std::initializer_list<double> entries)
{
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(entries.size()),
                                          static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (double x : entries) {
        m(i, i) = x;
        ++i;
    }
    return m;
}

void check_exact_pr(const ProjectiveRepresentation& pr, const Graph& expected, std::size_t r)
{
    const auto rep = validate_pr(pr);
    CHECK(rep.passed);
    CHECK(rep.idempotency == 0.0);
    CHECK(rep.hermiticity == 0.0);
    CHECK(rep.edge_orthogonality == 0.0);
    CHECK(rep.sum_identity_distance == 0.0);
    CHECK(rep.sum_scale == static_cast<double>(r));
    // trace counting: c d = r n
    CHECK(rep.sum_scale * static_cast<double>(pr.dimension) == static_cast<double>(r * pr.graph.size()));
    CHECK(pr.graph == expected);
    CHECK(exclusivity_graph(pr.projectors, kValidationTol) == expected);
    for (const auto& p : pr.projectors)
        for (Eigen::Index i = 0; i < p.rows(); ++i)
            for (Eigen::Index j = 0; j < p.cols(); ++j)
                CHECK((p(i, j) == Complex(0.0) || p(i, j) == Complex(1.0)));
}

ComplexMatrix random_unitary(std::size_t d, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    ComplexMatrix a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            a(i, j) = Complex(normal(rng), normal(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    return qr.householderQ();
}

} // namespace

TEST_CASE("cycle PR")
{
    const auto pr = cycle_pr(2);
    CHECK(pr.dimension == 5);
    CHECK(pr.rank == 2);
    CHECK(pr.projectors[0] == diag({1, 1, 0, 0, 0}));
    CHECK(pr.projectors[1] == diag({0, 0, 1, 1, 0}));
    for (std::size_t r = 2; r <= 6; ++r)
        check_exact_pr(cycle_pr(r), cycle_graph(2 * r + 1), r);
    CHECK(cycle_pr(5).dimension == 11);
    CHECK_THROWS_AS(cycle_pr(1), std::invalid_argument);
}

TEST_CASE("AR PR")
{
    for (std::size_t r = 2; r <= 6; ++r) {
        const auto pr = ar_pr(r);
        CHECK(pr.dimension == 3 * r - 1);
        check_exact_pr(pr, ar_graph(r), r);
    }
    const long offsets[] = {2, 3};
    CHECK(exclusivity_graph(ar_pr(2).projectors, kValidationTol) == circulant_graph(5, offsets));
    CHECK(ar_pr(3).projectors[6] == diag({1, 0, 0, 0, 0, 0, 1, 1}));
}

TEST_CASE("AR basis PR")
{
    auto index_of = [](const ComplexMatrix& p) {
        for (Eigen::Index i = 0; i < p.rows(); ++i)
            if (p(i, i) == Complex(1.0))
                return static_cast<std::size_t>(i);
        return std::size_t{99};
    };
    const auto pr2 = ar_basis_pr(2);
    std::vector<std::size_t> idx;
    for (const auto& p : pr2.projectors)
        idx.push_back(index_of(p));
    CHECK(idx == std::vector<std::size_t>{0, 0, 1, 1, 2});
    const auto pr3 = ar_basis_pr(3);
    idx.clear();
    for (const auto& p : pr3.projectors)
        idx.push_back(index_of(p));
    CHECK(idx == std::vector<std::size_t>{0, 0, 0, 1, 1, 1, 2, 2});
    for (std::size_t r = 2; r <= 8; ++r) {
        const auto pr = ar_basis_pr(r);
        const auto rep = validate_pr(pr);
        CHECK(pr.dimension == 3);
        CHECK(rep.passed);
        CHECK(rep.idempotency == 0.0);
        CHECK(rep.edge_orthogonality == 0.0);
    }
}

TEST_CASE("validation catches faults")
{
    auto pr = cycle_pr(2);
    pr.projectors[0](2, 2) = 0.1;
    auto rep = validate_pr(pr);
    CHECK_FALSE(rep.passed);
    CHECK(rep.idempotency == doctest::Approx(0.09).epsilon(1e-12));

    auto wrong_rank = cycle_pr(2);
    wrong_rank.rank = 1;
    CHECK_FALSE(validate_pr(wrong_rank).passed);

    auto wrong_edge = cycle_pr(2);
    wrong_edge.graph = complete_graph(5);
    CHECK_FALSE(validate_pr(wrong_edge).passed);

    CHECK_THROWS_AS(make_pr(complete_graph(2), {diag({1, 0}), diag({1, 0})}, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_pr(complete_graph(3), {diag({1, 0}), diag({0, 1})}, 1), std::invalid_argument);
}

TEST_CASE("exclusivity graph")
{
    const std::vector<ComplexMatrix> same{diag({1, 0}), diag({1, 0})};
    CHECK(exclusivity_graph(same, 1e-9).edge_count() == 0);
    const auto rep = exclusivity_report(cycle_pr(3).projectors, 1e-9);
    CHECK(rep.graph == cycle_graph(7));
    CHECK(rep.max_accepted == 0.0);
    CHECK(rep.min_rejected == 1.0);
    const std::vector<ComplexMatrix> mixed{diag({1, 0}), diag({1, 0, 0})};
    CHECK_THROWS_AS(exclusivity_graph(mixed, 1e-9), std::invalid_argument);
}

TEST_CASE("rays")
{
    const auto yo = pr_from_rays(test::yu_oh_rays());
    CHECK(yo.graph.size() == 13);
    CHECK(yo.graph.edge_count() == 24);
    CHECK(are_isomorphic(yo.graph, decode_graph6(test::kCatalogGraph6[1])));

    const auto k3 = basis_pr(3);
    CHECK(k3.graph == complete_graph(3));
    std::vector<ComplexVector> basis;
    for (int i = 0; i < 3; ++i)
        basis.push_back(ComplexVector::Unit(3, i));
    CHECK(pr_from_rays(basis).graph == complete_graph(3));

    std::vector<ComplexVector> bad{ComplexVector::Zero(3)};
    CHECK_THROWS_AS(pr_from_rays(bad), std::invalid_argument);
    std::vector<ComplexVector> mismatch{ComplexVector::Unit(3, 0), ComplexVector::Unit(2, 0)};
    CHECK_THROWS_AS(pr_from_rays(mismatch), std::invalid_argument);
}

TEST_CASE("ray JSON tokens")
{
    const auto j = nlohmann::json::parse(R"([[1, "1/2", [0, -1]], ["q^1", "-q^2", "q^3"]])");
    const auto rays = rays_from_json(j);
    REQUIRE(rays.size() == 2);
    CHECK(rays[0][1] == Complex(0.5));
    CHECK(rays[0][2] == Complex(0.0, -1.0));
    const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    CHECK(std::abs(rays[1][0] - q) < 1e-15);
    CHECK(std::abs(rays[1][1] + q * q) < 1e-15);
    CHECK(rays[1][2] == Complex(1.0));
    // 1 + q + q^2 = 0
    CHECK(std::abs(Complex(1.0) + rays[1][0] - rays[1][1]) < 1e-15);

    CHECK_THROWS_AS(rays_from_json(nlohmann::json::parse(R"([["1/0"]])")), std::invalid_argument);
    CHECK_THROWS_AS(rays_from_json(nlohmann::json::parse(R"([["q^x"]])")), std::invalid_argument);
    CHECK_THROWS_AS(rays_from_json(nlohmann::json::parse(R"([[[1, 2, 3]]])")), std::invalid_argument);
    CHECK_THROWS_AS(rays_from_json(nlohmann::json::parse(R"({"a": 1})")), std::invalid_argument);

    const auto back = rays_from_json(rays_to_json(rays));
    for (std::size_t i = 0; i < rays.size(); ++i)
        CHECK(back[i] == rays[i]);
}

TEST_CASE("tensor PR")
{
    const auto k4 = tensor_pr(basis_pr(2), basis_pr(2));
    CHECK(k4.dimension == 4);
    CHECK(k4.rank == 1);
    CHECK(k4.graph == complete_graph(4));
    CHECK(validate_pr(k4).passed);

    const auto yo = pr_from_rays(test::yu_oh_rays());
    const auto big = tensor_pr(yo, ar_pr(2));
    CHECK(big.projectors.size() == 65);
    CHECK(big.dimension == 15);
    CHECK(big.rank == 2);
    CHECK(validate_pr(big).passed);
    CHECK(exclusivity_graph(big.projectors, 1e-9) == disjunctive_product(yo.graph, ar_graph(2)));
    CHECK(tensor_pr(yo, ar_pr(3)).dimension == 24);

    // random rotated sub-PRs
    std::mt19937_64 rng(41);
    const auto rays = test::yu_oh_rays();
    for (int t = 0; t < 10; ++t) {
        auto pick = [&]() {
            const ComplexMatrix u = random_unitary(3, rng);
            std::vector<ComplexVector> sub;
            for (const auto& r : rays)
                if (rng() % 2)
                    sub.push_back(u * r);
            if (sub.empty())
                sub.push_back(u * rays[0]);
            return pr_from_rays(sub);
        };
        const auto a = pick();
        const auto b = pick();
        const auto ab = tensor_pr(a, b);
        CHECK(exclusivity_graph(ab.projectors, 1e-9) == disjunctive_product(a.graph, b.graph));
        CHECK(validate_pr(ab).passed);
    }
}

TEST_CASE("induced PR")
{
    const auto pr = cycle_pr(3);
    const std::vector<std::size_t> keep{0, 1, 2};
    const auto sub = induced_pr(pr, keep);
    CHECK(sub.graph == induced_subgraph(cycle_graph(7), keep));
    CHECK(validate_pr(sub).passed);
}

TEST_CASE("Hermitian eigensolver contract")
{
    std::mt19937_64 rng(43);
    std::normal_distribution<double> normal;
    for (std::size_t d : {1u, 2u, 5u, 17u, 40u, 64u}) {
        ComplexMatrix a(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                a(i, j) = Complex(normal(rng), normal(rng));
        const ComplexMatrix m = a + a.adjoint();
        const auto eig = hermitian_eigen(m);
        const ComplexMatrix rec = eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
        CHECK(max_abs(m - rec) <= 1e-10);
        CHECK(max_abs(eig.vectors.adjoint() * eig.vectors -
                      ComplexMatrix::Identity(a.rows(), a.cols())) <= 1e-10);
        for (Eigen::Index i = 1; i < eig.values.size(); ++i)
            CHECK(eig.values[i - 1] <= eig.values[i]);
        // determinism
        CHECK(hermitian_eigen(m).values == eig.values);
    }
}

TEST_CASE("projector ray")
{
    ComplexVector v(3);
    v << Complex(0, 1), 2, -1;
    const ComplexVector u = projector_ray(ray_projector(v));
    CHECK(std::abs(u.norm() - 1.0) < 1e-12);
    CHECK(max_abs(ray_projector(u) - ray_projector(v)) < 1e-12);
}
