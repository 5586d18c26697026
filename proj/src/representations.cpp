#include "sicrank/representations.hpp"

#include "sicrank/rational.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sicrank {

namespace {

ComplexMatrix diagonal_projector(std::size_t d, std::span<const std::size_t> support)
{
    ComplexMatrix p = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t k : support)
        p(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 1.0;
    return p;
}

Complex parse_entry(const nlohmann::json& e)
{
    if (e.is_number())
        return {e.get<double>(), 0.0};
    if (e.is_array()) {
        if (e.size() != 2)
            throw std::invalid_argument("ray entry: complex pair must be [re, im]");
        const Complex re = parse_entry(e[0]);
        const Complex im = parse_entry(e[1]);
        if (re.imag() != 0.0 || im.imag() != 0.0)
            throw std::invalid_argument("ray entry: nested complex values are not allowed");
        return {re.real(), im.real()};
    }
    if (!e.is_string())
        throw std::invalid_argument("ray entry: expected number, [re, im] or string");
    std::string s = e.get<std::string>();
    double sign = 1.0;
    std::string body = s;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        sign = body[0] == '-' ? -1.0 : 1.0;
        body.erase(0, 1);
    }
    if (body.rfind("q^", 0) == 0) {
        std::size_t used = 0;
        long k = 0;
        try {
            k = std::stol(body.substr(2), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != body.size() - 2)
            throw std::invalid_argument("ray entry: malformed phase token '" + s + "'");
        const long m = ((k % 3) + 3) % 3;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / 3.0;
        if (m == 0)
            return {sign, 0.0};
        return {sign * std::cos(angle), sign * std::sin(angle)};
    }
    if (body == "q")
        return {sign * -0.5, sign * std::sqrt(3.0) / 2.0};
    return {Rational::parse(s).to_double(), 0.0};
}

} // namespace

ValidationReport validate_pr(const ProjectiveRepresentation& pr)
{
    ValidationReport rep;
    const std::size_t n = pr.graph.size();
    const auto d = static_cast<Eigen::Index>(pr.dimension);
    rep.shapes_match = pr.projectors.size() == n;
    for (const auto& p : pr.projectors)
        rep.shapes_match = rep.shapes_match && p.rows() == d && p.cols() == d;
    if (!rep.shapes_match)
        return rep;

    rep.sum = ComplexMatrix::Zero(d, d);
    for (const auto& p : pr.projectors) {
        rep.idempotency = std::max(rep.idempotency, max_abs(p * p - p));
        rep.hermiticity = std::max(rep.hermiticity, hermiticity_residual(p));
        const auto eig = hermitian_eigen(p);
        std::size_t rank = 0;
        for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
            const double v = eig.values[k];
            rep.spectrum = std::max(rep.spectrum, std::min(std::fabs(v), std::fabs(v - 1.0)));
            if (v > 0.5)
                ++rank;
        }
        rep.ranks.push_back(rank);
        rep.ranks_match = rep.ranks_match && rank == pr.rank;
        rep.sum += p;
    }
    for (auto [u, v] : pr.graph.edges())
        rep.edge_orthogonality = std::max(rep.edge_orthogonality, max_abs(pr.projectors[u] * pr.projectors[v]));
    if (d > 0) {
        rep.sum_scale = rep.sum.trace().real() / static_cast<double>(d);
        rep.sum_identity_distance = max_abs(rep.sum - rep.sum_scale * ComplexMatrix::Identity(d, d));
    }
    const double tol = pr.tolerance;
    rep.passed = rep.ranks_match && rep.idempotency <= tol && rep.hermiticity <= tol && rep.spectrum <= tol &&
                 rep.edge_orthogonality <= tol;
    return rep;
}

ProjectiveRepresentation make_pr(Graph graph, std::vector<ComplexMatrix> projectors, std::size_t rank, double tol)
{
    ProjectiveRepresentation pr;
    pr.dimension = projectors.empty() ? 0 : static_cast<std::size_t>(projectors.front().rows());
    pr.graph = std::move(graph);
    pr.projectors = std::move(projectors);
    pr.rank = rank;
    pr.tolerance = tol;
    const auto rep = validate_pr(pr);
    if (!rep.passed) {
        if (!rep.shapes_match)
            throw std::invalid_argument("make_pr: projector count or shape mismatch");
        throw std::invalid_argument("make_pr: validation failed (idempotency " + std::to_string(rep.idempotency) +
                                    ", edge orthogonality " + std::to_string(rep.edge_orthogonality) +
                                    ", ranks match " + (rep.ranks_match ? "yes" : "no") + ")");
    }
    return pr;
}

ExclusivityReport exclusivity_report(std::span<const ComplexMatrix> projectors, double tol)
{
    const std::size_t n = projectors.size();
    for (const auto& p : projectors)
        if (p.rows() != p.cols() || p.rows() != projectors.front().rows())
            throw std::invalid_argument("exclusivity_graph: projectors must be square with equal dimensions");
    ExclusivityReport rep;
    rep.min_rejected = std::numeric_limits<double>::infinity();
    GraphBuilder b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = max_abs(projectors[i] * projectors[j]);
            if (r <= tol) {
                b.add_edge(i, j);
                rep.max_accepted = std::max(rep.max_accepted, r);
            } else {
                rep.min_rejected = std::min(rep.min_rejected, r);
            }
        }
    rep.graph = std::move(b).build();
    return rep;
}

Graph exclusivity_graph(std::span<const ComplexMatrix> projectors, double tol)
{
    return exclusivity_report(projectors, tol).graph;
}

ProjectiveRepresentation pr_from_rays(std::span<const ComplexVector> rays, double tol)
{
    std::vector<ComplexMatrix> ps;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].size() != rays.front().size())
            throw std::invalid_argument("pr_from_rays: ray " + std::to_string(i) + " has a different dimension");
        if (rays[i].squaredNorm() == 0.0)
            throw std::invalid_argument("pr_from_rays: ray " + std::to_string(i) + " is zero");
        ps.push_back(ray_projector(rays[i]));
    }
    Graph g = exclusivity_graph(ps, tol);
    return make_pr(std::move(g), std::move(ps), 1, tol);
}

ProjectiveRepresentation basis_pr(std::size_t d)
{
    std::vector<ComplexMatrix> ps;
    for (std::size_t k = 0; k < d; ++k) {
        const std::size_t s[] = {k};
        ps.push_back(diagonal_projector(d, s));
    }
    return make_pr(complete_graph(d), std::move(ps), 1);
}

ProjectiveRepresentation cycle_pr(std::size_t r)
{
    if (r < 2)
        throw std::invalid_argument("cycle_pr: r must be at least 2");
    const std::size_t d = 2 * r + 1;
    std::vector<ComplexMatrix> ps;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::size_t> s;
        for (std::size_t t = 0; t < r; ++t)
            s.push_back((j * r + t) % d);
        ps.push_back(diagonal_projector(d, s));
    }
    return make_pr(cycle_graph(d), std::move(ps), r);
}

ProjectiveRepresentation ar_pr(std::size_t r)
{
    if (r < 2)
        throw std::invalid_argument("ar_pr: r must be at least 2");
    const std::size_t d = 3 * r - 1;
    std::vector<ComplexMatrix> ps;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::size_t> s;
        for (std::size_t t = 0; t < r; ++t)
            s.push_back((j + t) % d);
        ps.push_back(diagonal_projector(d, s));
    }
    return make_pr(ar_graph(r), std::move(ps), r);
}

ProjectiveRepresentation ar_basis_pr(std::size_t r)
{
    if (r < 2)
        throw std::invalid_argument("ar_basis_pr: r must be at least 2");
    std::vector<ComplexMatrix> ps;
    for (std::size_t v = 0; v < 3 * r - 1; ++v) {
        const std::size_t s[] = {v / r};
        ps.push_back(diagonal_projector(3, s));
    }
    return make_pr(ar_graph(r), std::move(ps), 1);
}

ProjectiveRepresentation tensor_pr(const ProjectiveRepresentation& a, const ProjectiveRepresentation& b)
{
    ProjectiveRepresentation out;
    out.graph = disjunctive_product(a.graph, b.graph);
    out.dimension = a.dimension * b.dimension;
    out.rank = a.rank * b.rank;
    out.tolerance = std::max(a.tolerance, b.tolerance);
    out.projectors.reserve(a.projectors.size() * b.projectors.size());
    for (const auto& pa : a.projectors)
        for (const auto& pb : b.projectors)
            out.projectors.push_back(kronecker(pa, pb));
    return out;
}

ProjectiveRepresentation induced_pr(const ProjectiveRepresentation& pr, std::span<const std::size_t> keep)
{
    ProjectiveRepresentation out;
    out.graph = induced_subgraph(pr.graph, keep);
    out.dimension = pr.dimension;
    out.rank = pr.rank;
    out.tolerance = pr.tolerance;
    for (std::size_t v : keep)
        out.projectors.push_back(pr.projectors[v]);
    return out;
}

std::vector<ComplexVector> rays_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("rays: expected a JSON array of vectors");
    std::vector<ComplexVector> rays;
    for (const auto& r : j) {
        if (!r.is_array() || r.empty())
            throw std::invalid_argument("rays: each ray must be a non-empty array");
        ComplexVector v(static_cast<Eigen::Index>(r.size()));
        for (std::size_t k = 0; k < r.size(); ++k)
            v[static_cast<Eigen::Index>(k)] = parse_entry(r[k]);
        rays.push_back(std::move(v));
    }
    return rays;
}

nlohmann::json rays_to_json(std::span<const ComplexVector> rays)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : rays) {
        nlohmann::json r = nlohmann::json::array();
        for (Eigen::Index k = 0; k < v.size(); ++k) {
            if (v[k].imag() == 0.0)
                r.push_back(v[k].real());
            else
                r.push_back({v[k].real(), v[k].imag()});
        }
        out.push_back(std::move(r));
    }
    return out;
}

ComplexVector projector_ray(const ComplexMatrix& p)
{
    const auto eig = hermitian_eigen(p);
    ComplexVector v = eig.vectors.col(eig.values.size() - 1);
    Eigen::Index big = 0;
    v.cwiseAbs().maxCoeff(&big);
    const Complex phase = std::abs(v[big]) > 0 ? std::conj(v[big]) / std::abs(v[big]) : Complex(1.0);
    return v * phase;
}

} // namespace sicrank
