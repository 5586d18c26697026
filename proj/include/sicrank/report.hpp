#pragma once

#include "sicrank/constructions.hpp"
#include "sicrank/seesaw.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sicrank {

inline constexpr int kReportSchemaVersion = 1;

struct ReportDocument {
    nlohmann::json json;
    /// Offending cells, e.g. "YO.k_2: computed 23, expected 24".
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

ReportDocument run_table1_report(const Catalog& catalog);

struct Table3Config {
    std::uint64_t seed = 0;
    std::size_t restarts = 200;
    double gap = 1e-8;
    double eta_tol = 1e-6;
    bool reduce = true;
};

ReportDocument run_table3_report(const Catalog& catalog, const Table3Config& cfg);

/// Seesaw search for a rank-1 PR of g in dimension d. When `min_eta` is
/// given, found PRs whose certified ratio falls below it are rejected and
/// the search continues with a doubled restart budget on fresh seeds.
struct Rank1Search {
    std::optional<ProjectiveRepresentation> pr;
    std::optional<SicCertificate> certificate;
    std::vector<SeesawResult> attempts;
};
Rank1Search search_rank1_pr(const Graph& g, std::size_t d, std::uint64_t seed, std::size_t restarts,
                            std::optional<double> min_eta = std::nullopt, std::size_t max_attempts = 4);

} // namespace sicrank
