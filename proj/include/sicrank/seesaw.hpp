#pragma once

#include "sicrank/graph.hpp"
#include "sicrank/linalg.hpp"
#include "sicrank/representations.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sicrank {

inline constexpr const char* kEvidenceDisclaimer =
    "evidence, not proof: no representation was found within the restart budget";

struct GramSearchConfig {
    std::size_t d = 3;
    std::size_t r = 1;
    std::size_t restarts = 200;
    std::size_t max_iterations = 3000;
    double convergence_tol = 1e-10;
    /// A run counts as found below this residual, before validation.
    double success_tol = 1e-8;
    double validation_tol = 1e-7;
    std::uint64_t seed = 0;
    /// Search over complex Hermitian Gram matrices instead of real symmetric ones.
    bool complex = false;
};

void check_config(const GramSearchConfig& cfg);

/// One alternating-projection run on the Gram matrix of g.
struct SeesawRun {
    bool found = false;
    /// Best iterate; real unless the search ran in complex mode.
    ComplexMatrix gram;
    double residual = 0.0;
    std::size_t iterations = 0;
    std::vector<double> trace;
    /// Increases of the residual after the burn-in (logged, not fatal).
    std::size_t monotonicity_violations = 0;
};

SeesawRun seesaw_run(const Graph& g, std::size_t d, std::uint64_t seed, const GramSearchConfig& cfg);

/// Unit vectors (as columns of a d x n matrix) realizing the Gram matrix.
/// Throws std::invalid_argument if the numerical rank exceeds d.
RealMatrix gram_to_vectors(const RealMatrix& gram, std::size_t d, double tol);
ComplexMatrix gram_to_vectors(const ComplexMatrix& gram, std::size_t d, double tol);

struct RestartSummary {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    double residual = 0.0;
    std::size_t iterations = 0;
};

struct SeesawResult {
    bool found = false;
    bool complex = false;
    std::optional<ComplexMatrix> gram;
    std::optional<ProjectiveRepresentation> pr;
    double best_residual = 0.0;
    std::size_t best_restart = 0;
    std::vector<RestartSummary> restarts;
    /// Final residuals per decade: bin k counts residuals in [10^-(k+1), 10^-k);
    /// bin 0 also takes residuals >= 1 and the last bin everything smaller.
    std::vector<std::size_t> histogram;
    std::size_t monotonicity_violations = 0;
    std::string disclaimer;
};

/// Searches for a rank-r PR of g in dimension d via the clique expansion.
SeesawResult find_pr(const Graph& g, const GramSearchConfig& cfg);
SeesawResult find_pr(const Graph& g, std::size_t r, std::size_t d, GramSearchConfig cfg);

nlohmann::json to_json(const SeesawResult& r, bool include_gram = true);

} // namespace sicrank
