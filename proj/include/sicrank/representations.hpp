#pragma once

#include "sicrank/graph.hpp"
#include "sicrank/linalg.hpp"

#include "json.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sicrank {

inline constexpr double kValidationTol = 1e-9;
inline constexpr double kNumericExclusivityTol = 1e-7;

/// One projector per vertex of `graph`, all of rank `rank` in dimension `dimension`.
struct ProjectiveRepresentation {
    Graph graph;
    std::vector<ComplexMatrix> projectors;
    std::size_t dimension = 0;
    std::size_t rank = 0;
    double tolerance = kValidationTol;
};

struct ValidationReport {
    double idempotency = 0.0;        // max ||P^2 - P||
    double hermiticity = 0.0;        // max ||P - P^dagger||
    double edge_orthogonality = 0.0; // max ||P_i P_j|| over edges
    double spectrum = 0.0;           // max distance of an eigenvalue from {0, 1}
    std::vector<std::size_t> ranks;
    bool ranks_match = true;
    bool shapes_match = true;
    ComplexMatrix sum;
    double sum_scale = 0.0;          // tr(sum) / d
    double sum_identity_distance = 0.0;
    bool passed = false;
};

ValidationReport validate_pr(const ProjectiveRepresentation& pr);

/// Builds a PR and throws std::invalid_argument if it fails validation.
ProjectiveRepresentation make_pr(Graph graph, std::vector<ComplexMatrix> projectors, std::size_t rank,
                                 double tol = kValidationTol);

struct ExclusivityReport {
    Graph graph;
    double max_accepted = 0.0; // largest ||P_i P_j|| counted as an edge
    double min_rejected = 0.0; // smallest ||P_i P_j|| not counted (infinity if none)
};

ExclusivityReport exclusivity_report(std::span<const ComplexMatrix> projectors, double tol);
Graph exclusivity_graph(std::span<const ComplexMatrix> projectors, double tol);

/// Rank-1 PR of the exclusivity graph of the (unnormalized) rays.
ProjectiveRepresentation pr_from_rays(std::span<const ComplexVector> rays, double tol = kValidationTol);

ProjectiveRepresentation basis_pr(std::size_t d);
ProjectiveRepresentation cycle_pr(std::size_t r);
ProjectiveRepresentation ar_pr(std::size_t r);
ProjectiveRepresentation ar_basis_pr(std::size_t r);

/// Projectors a_u (x) b_v at index u * |b| + v; graph is the disjunctive product.
ProjectiveRepresentation tensor_pr(const ProjectiveRepresentation& a, const ProjectiveRepresentation& b);

/// The PR restricted to `keep` (in that order); graph is the induced subgraph.
ProjectiveRepresentation induced_pr(const ProjectiveRepresentation& pr, std::span<const std::size_t> keep);

/// Ray list <-> JSON. Entries: number, [re, im], "p/q", or "q^k" / "-q^k"
/// for exp(2 pi i k / 3).
std::vector<ComplexVector> rays_from_json(const nlohmann::json& j);
nlohmann::json rays_to_json(std::span<const ComplexVector> rays);

/// Unit vector spanning a rank-1 projector.
ComplexVector projector_ray(const ComplexMatrix& p);

} // namespace sicrank
