#pragma once

#include "sicrank/graph.hpp"
#include "sicrank/rational.hpp"
#include "sicrank/representations.hpp"
#include "sicrank/sic_solver.hpp"

#include "json.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicrank {

/// 2 (chi_f(G) - omega(G)).
Rational kappa(const Graph& g);

struct ConstructionPlan {
    std::string graph_id;
    Rational chi_f;
    std::size_t omega = 0;
    Rational kappa;
    std::vector<std::size_t> admissible_ranks;
    std::map<std::size_t, std::size_t> k_table;
    std::map<std::size_t, std::size_t> sic_dimension;
    /// Empty unless the plan is empty because kappa is outside (0, 1).
    std::string reason;

    bool empty() const { return admissible_ranks.empty(); }
};

/// Ranks r < 1/kappa with the smallest k_r >= r chi_f / (1 - r kappa).
ConstructionPlan theorem2_plan(const Graph& g, std::string graph_id = {});

struct Theorem2Construction {
    std::size_t r = 0;
    std::size_t k = 0;
    Graph graph;
    std::optional<ProjectiveRepresentation> pr;
};

/// G v C_{2k_r+1}, plus the tensor of `rank1` with cycle_pr(k_r) when given.
Theorem2Construction theorem2_graph(const Graph& g, std::size_t r,
                                    const std::optional<ProjectiveRepresentation>& rank1 = std::nullopt);

/// 2 r omega(G) + 1.
std::size_t lemma1_lower_bound(const Graph& g, std::size_t r);

/// Bracket on the minimal dimension of a rank-r PR.
struct DimensionBounds {
    std::string graph_id;
    std::size_t r = 0;
    std::size_t lower = 0;
    std::optional<std::size_t> upper;
    std::vector<std::string> notes;
};

/// Bounds for G v C_{2k+1}: the analytic bound at rank r, and at rank k the
/// dimension (2k+1) d of the tensor construction when a rank-1 PR of G in
/// dimension d is known.
std::vector<DimensionBounds> theorem2_dimension_bounds(const Graph& g, std::size_t r,
                                                       std::optional<std::size_t> rank1_dimension);

struct RemovalStep {
    std::size_t vertex = 0; // index in the original PR
    double eta_lower = 0.0;
    double eta_upper = 0.0;
    std::size_t remaining = 0;
};

struct ReductionOptions {
    double threshold = 1.0;
    double gap = 1e-8;
    /// Candidates whose lower bounds differ by at most this count as tied.
    double tie_tol = 1e-7;
    SicOptions solver;
};

struct ReductionResult {
    ProjectiveRepresentation pr;
    std::vector<std::size_t> kept; // original indices, ascending
    std::vector<RemovalStep> log;
    SicCertificate initial;
    SicCertificate final_certificate;
};

/// Greedy removal of the projector whose deletion keeps the SIC ratio
/// highest, while it stays above the threshold.
ReductionResult reduce_pr(const ProjectiveRepresentation& pr, const ReductionOptions& opts = {});

struct Table1Metadata {
    std::size_t vertices = 0;
    Rational chi_f;
    std::size_t omega = 0;
    Rational eta;
    bool eta_is_lower_bound = false;
    Rational inverse_kappa;
    std::vector<std::size_t> k;
    /// (rank, sic dimension) pair quoted alongside the table, if any.
    std::optional<std::pair<std::size_t, std::size_t>> dimension_check;
};

struct CatalogEntry {
    std::string name;
    std::optional<std::string> graph6;
    Graph graph;
    std::optional<std::vector<ComplexVector>> rays;
    std::optional<Table1Metadata> table1;
    std::string provenance;
};

struct ProductMetadata {
    std::string graph;
    std::size_t ar = 0;
    std::size_t rank = 0;
    std::size_t vertices = 0;
    Rational chi_f;
    Rational eta;
    std::size_t dimension = 0;
    std::optional<std::size_t> reduced_vertices;
    std::optional<Rational> reduced_chi_f;
    std::optional<Rational> reduced_eta;
};

/// Rank-1 PR from the entry's rays, relabeled onto the entry's graph.
std::optional<ProjectiveRepresentation> catalog_rank1_pr(const CatalogEntry& e);

class Catalog {
public:
    /// The catalog compiled into the library.
    static Catalog builtin();
    static Catalog from_json(const nlohmann::json& j);
    static Catalog from_file(const std::string& path);

    /// Named graphs, plus generated "AR(r)" and "C(l)". Throws std::out_of_range for unknown names.
    CatalogEntry entry(std::string_view name) const;
    std::vector<std::string> names() const;
    const std::vector<ProductMetadata>& products() const { return products_; }

private:
    std::vector<CatalogEntry> entries_;
    std::vector<ProductMetadata> products_;
};

} // namespace sicrank
