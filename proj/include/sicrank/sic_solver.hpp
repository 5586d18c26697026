#pragma once

#include "sicrank/bitset.hpp"
#include "sicrank/linalg.hpp"
#include "sicrank/rational.hpp"
#include "sicrank/representations.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sicrank {

struct SicOptions {
    double gap = 1e-8;
    std::size_t max_cuts = 2000;
    double max_seconds = 300.0;
    /// Eigenvalues within this distance of lambda_min each contribute a cut.
    double cluster_width = 1e-7;
    /// Weight of the incumbent in the in-out query point (0 = plain Kelley).
    double stabilization = 0.5;
    /// Optional starting point; only its direction matters.
    std::optional<std::vector<double>> initial_weights;
    /// Stop as soon as the certified lower bound exceeds this value.
    std::optional<double> stop_above;
    /// Stop as soon as the upper bound drops to this value or below.
    std::optional<double> stop_below;
};

/// Two-sided bounds on the SIC ratio of a PR. `weights` satisfy
/// alpha(G, w) <= 1 exactly (checked in rational arithmetic), and
/// eta_lower = lambda_min(sum_k w_k P_k).
struct SicCertificate {
    std::vector<double> weights;
    double eta_lower = 0.0;
    double eta_upper = 0.0;
    std::vector<ComplexVector> witness_vectors;
    std::vector<Bitset> active_sets;
    std::size_t iterations = 0;
    std::size_t cuts = 0;
    std::size_t set_constraints = 0;
    /// Times the LP basis was rebuilt after a numerically singular refactor.
    std::size_t recoveries = 0;
    double wall_time = 0.0;
    /// "converged", "cut_cap", "time_cap", "stop_above" or "stop_below".
    std::string status;

    bool converged(double gap) const { return eta_upper - eta_lower <= gap; }
};

SicCertificate sic_ratio(const ProjectiveRepresentation& pr, const SicOptions& opts = {});

/// lambda_min of sum_k w_k P_k together with the eigenvectors whose
/// eigenvalues lie within `cluster_width` of it.
struct MinEigen {
    double value = 0.0;
    std::vector<ComplexVector> vectors;
};
MinEigen min_eigen(const ProjectiveRepresentation& pr, std::span<const double> w, double cluster_width = 1e-7);

/// lhs = min over states of sum_k w_k tr(rho P_k); rhs = alpha(G, w).
struct WitnessGap {
    double lhs = 0.0;
    double rhs = 0.0;
    bool violated() const { return lhs > rhs; }
};
WitnessGap witness_gap(const ProjectiveRepresentation& pr, std::span<const double> w);

/// Whether r * chi_f >= eta * d, with slack r * chi_f - eta * d.
struct DimensionRelation {
    bool holds = false;
    double slack = 0.0;
};
DimensionRelation check_dimension_relation(std::size_t r, const Rational& chi_f, double eta, std::size_t d,
                                           double tol = 1e-9);

/// Exact alpha(G, w) for double weights (each weight read as its exact binary value).
Rational exact_alpha(const Graph& g, std::span<const double> w);

nlohmann::json to_json(const SicCertificate& c);

/// Shortest round-trip-safe decimal (17 significant digits).
std::string format_double(double x);

} // namespace sicrank
