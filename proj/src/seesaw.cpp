#include "sicrank/seesaw.hpp"

#include "sicrank/sic_solver.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <type_traits>

namespace sicrank {

namespace {

constexpr std::size_t kBurnIn = 10;
constexpr std::size_t kHistogramBins = 17;

template <typename M>
double constraint_residual(const M& m, const std::vector<Edge>& edges)
{
    double r = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        r = std::max(r, std::abs(m(i, i) - 1.0));
    for (auto [u, v] : edges)
        r = std::max(r, std::abs(m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v))));
    return r;
}

template <typename M>
void impose_constraints(M& m, const std::vector<Edge>& edges)
{
    m.diagonal().setOnes();
    for (auto [u, v] : edges) {
        m(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) = 0.0;
        m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u)) = 0.0;
    }
}

// Nearest PSD matrix of rank <= d in Frobenius norm.
template <typename M>
M low_rank_psd(const M& m, std::size_t d)
{
    Eigen::SelfAdjointEigenSolver<M> es((m + m.adjoint()) / 2.0);
    const Eigen::Index n = m.rows();
    const auto k = static_cast<Eigen::Index>(std::min<std::size_t>(d, static_cast<std::size_t>(n)));
    M v = es.eigenvectors().rightCols(k);
    Eigen::VectorXd lam = es.eigenvalues().tail(k).cwiseMax(0.0);
    return v * lam.asDiagonal() * v.adjoint();
}

template <typename M>
M random_gram(Eigen::Index n, std::size_t d, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    M x(static_cast<Eigen::Index>(d), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            if constexpr (std::is_same_v<typename M::Scalar, double>) {
                x(i, j) = normal(rng);
            } else {
                const double re = normal(rng);
                x(i, j) = Complex(re, normal(rng));
            }
        }
        x.col(j).normalize();
    }
    return x.adjoint() * x;
}

template <typename M>
SeesawRun alternate(const Graph& g, std::size_t d, std::uint64_t seed, const GramSearchConfig& cfg)
{
    const auto edges = g.edges();
    std::mt19937_64 rng(seed);
    M m = random_gram<M>(static_cast<Eigen::Index>(g.size()), d, rng);
    impose_constraints(m, edges);

    SeesawRun run;
    run.residual = std::numeric_limits<double>::infinity();
    M best;
    for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
        M p = low_rank_psd(m, d);
        const double res = constraint_residual(p, edges);
        run.trace.push_back(res);
        ++run.iterations;
        if (it > kBurnIn && res > run.trace[it - 1])
            ++run.monotonicity_violations;
        if (res < run.residual) {
            run.residual = res;
            best = p;
        }
        if (res < cfg.convergence_tol)
            break;
        m = std::move(p);
        impose_constraints(m, edges);
    }
    run.gram = best.template cast<Complex>();
    run.found = run.residual < cfg.success_tol;
    return run;
}

template <typename M>
M factor_gram(const M& gram, std::size_t d, double tol)
{
    if (gram.rows() != gram.cols())
        throw std::invalid_argument("gram_to_vectors: matrix is not square");
    Eigen::SelfAdjointEigenSolver<M> es((gram + gram.adjoint()) / 2.0);
    const Eigen::Index n = gram.rows();
    const auto k = static_cast<Eigen::Index>(std::min<std::size_t>(d, static_cast<std::size_t>(n)));
    const Eigen::VectorXd& lam = es.eigenvalues();
    if (n > 0 && lam[0] < -tol)
        throw std::invalid_argument("gram_to_vectors: matrix is not positive semidefinite");
    for (Eigen::Index i = 0; i < n - k; ++i)
        if (lam[i] > tol)
            throw std::invalid_argument("gram_to_vectors: numerical rank exceeds d = " + std::to_string(d));
    M vecs = M::Zero(static_cast<Eigen::Index>(d), n);
    const M top = es.eigenvectors().rightCols(k);
    for (Eigen::Index i = 0; i < k; ++i)
        vecs.row(i) = std::sqrt(std::max(0.0, lam[n - k + i])) * top.col(i).adjoint();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double norm = vecs.col(j).norm();
        if (norm == 0.0)
            throw std::invalid_argument("gram_to_vectors: zero diagonal entry");
        vecs.col(j) /= norm;
    }
    return vecs;
}

// Groups each vertex's r lifted vectors into one rank-r projector.
template <typename M>
std::vector<ComplexMatrix> group_projectors(const M& vecs, std::size_t n, std::size_t d, std::size_t r)
{
    const auto dd = static_cast<Eigen::Index>(d);
    const auto rr = static_cast<Eigen::Index>(r);
    std::vector<ComplexMatrix> out;
    for (Eigen::Index v = 0; v < static_cast<Eigen::Index>(n); ++v) {
        const M block = vecs.middleCols(v * rr, rr);
        Eigen::HouseholderQR<M> qr(block);
        const M q = qr.householderQ() * M::Identity(dd, rr);
        out.push_back((q * q.adjoint()).template cast<Complex>());
    }
    return out;
}

std::size_t histogram_bin(double residual)
{
    if (!(residual > 0.0))
        return kHistogramBins - 1;
    const double k = std::floor(-std::log10(residual));
    if (k < 0.0)
        return 0;
    return std::min(static_cast<std::size_t>(k), kHistogramBins - 1);
}

} // namespace

void check_config(const GramSearchConfig& cfg)
{
    if (cfg.d < 1 || cfg.r < 1 || cfg.restarts < 1)
        throw std::invalid_argument("seesaw: d, r and restarts must be at least 1");
    if (!(cfg.convergence_tol > 0.0))
        throw std::invalid_argument("seesaw: convergence_tol must be positive");
    if (cfg.r > cfg.d)
        throw std::invalid_argument("seesaw: rank exceeds dimension");
}

SeesawRun seesaw_run(const Graph& g, std::size_t d, std::uint64_t seed, const GramSearchConfig& cfg)
{
    if (d < 1)
        throw std::invalid_argument("seesaw_run: d must be at least 1");
    return cfg.complex ? alternate<ComplexMatrix>(g, d, seed, cfg) : alternate<RealMatrix>(g, d, seed, cfg);
}

RealMatrix gram_to_vectors(const RealMatrix& gram, std::size_t d, double tol) { return factor_gram(gram, d, tol); }

ComplexMatrix gram_to_vectors(const ComplexMatrix& gram, std::size_t d, double tol) { return factor_gram(gram, d, tol); }

SeesawResult find_pr(const Graph& g, const GramSearchConfig& cfg)
{
    check_config(cfg);
    const Graph lifted = clique_expansion(g, cfg.r);

    SeesawResult out;
    out.complex = cfg.complex;
    out.histogram.assign(kHistogramBins, 0);
    out.best_residual = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < cfg.restarts; ++i) {
        const std::uint64_t seed = cfg.seed + i;
        SeesawRun run = seesaw_run(lifted, cfg.d, seed, cfg);
        out.restarts.push_back({i, seed, run.residual, run.iterations});
        ++out.histogram[histogram_bin(run.residual)];
        out.monotonicity_violations += run.monotonicity_violations;
        if (run.residual < out.best_residual) {
            out.best_residual = run.residual;
            out.best_restart = i;
        }
        if (!run.found)
            continue;

        std::vector<ComplexMatrix> projectors;
        try {
            if (cfg.complex)
                projectors = group_projectors(gram_to_vectors(run.gram, cfg.d, cfg.validation_tol), g.size(), cfg.d, cfg.r);
            else
                projectors = group_projectors(gram_to_vectors(RealMatrix(run.gram.real()), cfg.d, cfg.validation_tol),
                                              g.size(), cfg.d, cfg.r);
        } catch (const std::invalid_argument&) {
            continue;
        }
        try {
            out.pr = make_pr(g, std::move(projectors), cfg.r, cfg.validation_tol);
        } catch (const std::invalid_argument&) {
            continue;
        }
        out.found = true;
        out.gram = run.gram;
        out.best_residual = run.residual;
        out.best_restart = i;
        return out;
    }
    out.disclaimer = kEvidenceDisclaimer;
    return out;
}

SeesawResult find_pr(const Graph& g, std::size_t r, std::size_t d, GramSearchConfig cfg)
{
    cfg.r = r;
    cfg.d = d;
    return find_pr(g, cfg);
}

nlohmann::json to_json(const SeesawResult& r, bool include_gram)
{
    nlohmann::json j;
    j["status"] = r.found ? "found" : "not_found";
    j["best_residual"] = format_double(r.best_residual);
    j["best_restart"] = r.best_restart;
    j["restarts_run"] = r.restarts.size();
    j["residual_histogram"] = r.histogram;
    j["monotonicity_violations"] = r.monotonicity_violations;
    nlohmann::json rs = nlohmann::json::array();
    for (const auto& s : r.restarts)
        rs.push_back({{"index", s.index},
                      {"seed", s.seed},
                      {"residual", format_double(s.residual)},
                      {"iterations", s.iterations}});
    j["restarts"] = rs;
    if (!r.found)
        j["disclaimer"] = r.disclaimer;
    auto entry = [&](const Complex& z) -> nlohmann::json {
        if (r.complex)
            return {format_double(z.real()), format_double(z.imag())};
        return format_double(z.real());
    };
    auto matrix = [&](const ComplexMatrix& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (Eigen::Index k = 0; k < m.cols(); ++k)
                row.push_back(entry(m(i, k)));
            rows.push_back(row);
        }
        return rows;
    };
    j["mode"] = r.complex ? "complex" : "real";
    if (include_gram && r.gram)
        j["gram"] = matrix(*r.gram);
    if (include_gram && r.pr) {
        nlohmann::json ps = nlohmann::json::array();
        for (const auto& p : r.pr->projectors)
            ps.push_back(matrix(p));
        j["projectors"] = ps;
    }
    return j;
}

} // namespace sicrank
