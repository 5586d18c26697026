#include "sicrank/report.hpp"

#include "sicrank/combinatorics.hpp"

#include <chrono>
#include <stdexcept>

namespace sicrank {

namespace {

using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

class Cells {
public:
    Cells(std::string prefix, std::vector<std::string>& failures) : prefix_(std::move(prefix)), failures_(failures) {}

    void compare(const std::string& name, const std::string& computed, const std::string& expected, bool pass,
                 bool binding = true)
    {
        cells_.push_back({{"cell", name}, {"computed", computed}, {"expected", expected}, {"pass", pass},
                          {"binding", binding}});
        if (binding && !pass)
            failures_.push_back(prefix_ + "." + name + ": computed " + computed + ", expected " + expected);
    }

    template <typename T>
    void exact(const std::string& name, const T& computed, const T& expected)
    {
        compare(name, to_text(computed), to_text(expected), computed == expected);
    }

    void at_least(const std::string& name, double computed, double expected, double tol)
    {
        compare(name, format_double(computed), ">= " + format_double(expected) + " - " + format_double(tol),
                computed >= expected - tol);
    }

    void fail(const std::string& name, const std::string& why)
    {
        cells_.push_back({{"cell", name}, {"error", why}, {"pass", false}, {"binding", true}});
        failures_.push_back(prefix_ + "." + name + ": " + why);
    }

    json take() { return std::move(cells_); }

private:
    static std::string to_text(const Rational& q) { return q.to_string(); }
    static std::string to_text(std::size_t v) { return std::to_string(v); }
    static std::string to_text(const std::vector<std::size_t>& v)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + std::to_string(v[i]);
        return s + "]";
    }

    std::string prefix_;
    std::vector<std::string>& failures_;
    json cells_ = json::array();
};

json seesaw_summary(const SeesawResult& r)
{
    json j = to_json(r, false);
    j.erase("restarts");
    return j;
}

} // namespace

Rank1Search search_rank1_pr(const Graph& g, std::size_t d, std::uint64_t seed, std::size_t restarts,
                            std::optional<double> min_eta, std::size_t max_attempts)
{
    Rank1Search out;
    std::uint64_t next_seed = seed;
    std::size_t budget = restarts;
    for (std::size_t a = 0; a < max_attempts; ++a) {
        GramSearchConfig cfg;
        cfg.d = d;
        cfg.r = 1;
        cfg.restarts = budget;
        cfg.seed = next_seed;
        auto res = find_pr(g, cfg);
        next_seed += budget;
        budget *= 2;
        if (res.found) {
            auto cert = sic_ratio(*res.pr);
            if (!min_eta || cert.eta_lower >= *min_eta) {
                out.pr = *res.pr;
                out.certificate = std::move(cert);
                out.attempts.push_back(std::move(res));
                return out;
            }
        }
        out.attempts.push_back(std::move(res));
    }
    return out;
}

ReportDocument run_table1_report(const Catalog& catalog)
{
    const auto t0 = std::chrono::steady_clock::now();
    ReportDocument doc;
    json rows = json::array();
    for (const auto& name : catalog.names()) {
        const auto e = catalog.entry(name);
        if (!e.table1)
            continue;
        const auto& meta = *e.table1;
        const auto t_row = std::chrono::steady_clock::now();
        Cells cells(name, doc.failures);
        const auto plan = theorem2_plan(e.graph, name);

        cells.exact("vertices", e.graph.size(), meta.vertices);
        cells.exact("omega", plan.omega, meta.omega);
        cells.exact("chi_f", plan.chi_f, meta.chi_f);
        if (plan.kappa.sign() > 0)
            cells.exact("inverse_kappa", plan.kappa.reciprocal(), meta.inverse_kappa);
        else
            cells.fail("inverse_kappa", "kappa = " + plan.kappa.to_string() + " is not positive");
        std::vector<std::size_t> ks;
        for (auto r : plan.admissible_ranks)
            ks.push_back(plan.k_table.at(r));
        cells.exact("k", ks, meta.k);
        for (std::size_t i = 0; i < std::max(ks.size(), meta.k.size()); ++i) {
            const std::string label = "k_" + std::to_string(i + 1);
            const std::string c = i < ks.size() ? std::to_string(ks[i]) : "--";
            const std::string p = i < meta.k.size() ? std::to_string(meta.k[i]) : "--";
            cells.compare(label, c, p, c == p);
        }
        if (meta.dimension_check) {
            const auto [r, dim] = *meta.dimension_check;
            const auto it = plan.sic_dimension.find(r);
            if (it == plan.sic_dimension.end())
                cells.fail("sic_dimension_" + std::to_string(r), "rank not admissible");
            else
                cells.exact("sic_dimension_" + std::to_string(r), it->second, dim);
        }
        json row = {{"graph", name},
                    {"vertices", e.graph.size()},
                    {"omega", plan.omega},
                    {"chi_f", plan.chi_f.to_string()},
                    {"kappa", plan.kappa.to_string()},
                    {"admissible_ranks", plan.admissible_ranks}};
        json dims = json::object();
        for (auto [r, dim] : plan.sic_dimension)
            dims[std::to_string(r)] = dim;
        row["sic_dimension"] = dims;
        if (auto pr = catalog_rank1_pr(e)) {
            const auto cert = sic_ratio(*pr);
            cells.at_least("eta", cert.eta_lower, meta.eta.to_double(), 1e-6);
            row["eta_lower"] = format_double(cert.eta_lower);
            row["eta_upper"] = format_double(cert.eta_upper);
        }
        row["eta_expected"] = meta.eta.to_string();
        row["eta_expected_is_lower_bound"] = meta.eta_is_lower_bound;
        row["cells"] = cells.take();
        row["seconds"] = format_double(seconds_since(t_row));
        rows.push_back(std::move(row));
    }
    doc.json = {{"schema_version", kReportSchemaVersion},
                {"command", "report table1"},
                {"rows", rows},
                {"failures", doc.failures},
                {"passed", doc.passed()},
                {"seconds", format_double(seconds_since(t0))}};
    return doc;
}

ReportDocument run_table3_report(const Catalog& catalog, const Table3Config& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    ReportDocument doc;
    json rows = json::array();
    for (const auto& p : catalog.products()) {
        const auto t_row = std::chrono::steady_clock::now();
        const std::string label = p.graph + " v AR(" + std::to_string(p.ar) + ")";
        Cells cells(label, doc.failures);
        json row = {{"graph", label}, {"rank", p.rank}};

        const auto e = catalog.entry(p.graph);
        const Graph product = disjunctive_product(e.graph, ar_graph(p.ar));
        cells.exact("vertices", product.size(), p.vertices);
        cells.exact("chi_f", fractional_chromatic(product), p.chi_f);

        const std::size_t ar_dim = 3 * p.ar - 1;
        if (p.dimension % ar_dim != 0) {
            cells.fail("dimension", "listed dimension is not a multiple of " + std::to_string(ar_dim));
            row["cells"] = cells.take();
            rows.push_back(std::move(row));
            continue;
        }
        const std::size_t factor_dim = p.dimension / ar_dim;
        std::optional<ProjectiveRepresentation> factor = catalog_rank1_pr(e);
        if (factor) {
            row["factor_source"] = "catalog rays";
        } else {
            const double min_eta = p.eta.to_double() - cfg.eta_tol;
            auto search = search_rank1_pr(e.graph, factor_dim, cfg.seed, cfg.restarts, min_eta);
            json attempts = json::array();
            for (const auto& a : search.attempts)
                attempts.push_back(seesaw_summary(a));
            row["factor_source"] = "seesaw-derived";
            row["factor_search"] = attempts;
            factor = search.pr;
        }
        if (!factor) {
            cells.fail("factor_pr", "no rank-1 PR of " + p.graph + " in dimension " + std::to_string(factor_dim) +
                                        " reaching the target ratio was found (" + kEvidenceDisclaimer + ")");
            row["cells"] = cells.take();
            rows.push_back(std::move(row));
            continue;
        }
        const auto pr = tensor_pr(*factor, ar_pr(p.ar));
        const auto val = validate_pr(pr);
        cells.compare("tensor_pr_valid", val.passed ? "pass" : "fail", "pass", val.passed);
        cells.exact("dimension", pr.dimension, p.dimension);
        SicOptions opts;
        opts.gap = cfg.gap;
        const auto cert = sic_ratio(pr, opts);
        cells.at_least("eta", cert.eta_lower, p.eta.to_double(), cfg.eta_tol);
        row["eta_lower"] = format_double(cert.eta_lower);
        row["eta_upper"] = format_double(cert.eta_upper);
        row["eta_expected"] = p.eta.to_string();
        row["solver_status"] = cert.status;

        if (cfg.reduce && p.reduced_vertices) {
            const auto red = reduce_pr(pr);
            bool above = true;
            for (const auto& s : red.log)
                above = above && s.eta_lower > 1.0;
            cells.compare("reduction_shrinks", std::to_string(red.kept.size()), "< " + std::to_string(pr.projectors.size()),
                          red.kept.size() < pr.projectors.size());
            cells.compare("reduction_eta_above_one", above ? "yes" : "no", "yes", above);
            const Rational red_chi = fractional_chromatic(red.pr.graph);
            cells.compare("reduced_vertices", std::to_string(red.kept.size()), std::to_string(*p.reduced_vertices),
                          red.kept.size() == *p.reduced_vertices, false);
            cells.compare("reduced_chi_f", red_chi.to_string(), p.reduced_chi_f->to_string(),
                          red_chi == *p.reduced_chi_f, false);
            cells.compare("reduced_eta", format_double(red.final_certificate.eta_lower),
                          format_double(p.reduced_eta->to_double()),
                          std::abs(red.final_certificate.eta_lower - p.reduced_eta->to_double()) <= 1e-6, false);
            json log = json::array();
            for (const auto& s : red.log)
                log.push_back({{"removed", s.vertex},
                               {"eta_lower", format_double(s.eta_lower)},
                               {"remaining", s.remaining}});
            row["reduction"] = {{"kept", red.kept},
                                {"vertices", red.kept.size()},
                                {"chi_f", red_chi.to_string()},
                                {"eta_lower", format_double(red.final_certificate.eta_lower)},
                                {"expected_vertices", *p.reduced_vertices},
                                {"note", "comparison with the reference reduced size is non-binding; it depends on "
                                         "tie-breaking and on the starting PR"},
                                {"log", log}};
        }
        row["cells"] = cells.take();
        row["seconds"] = format_double(seconds_since(t_row));
        rows.push_back(std::move(row));
    }
    doc.json = {{"schema_version", kReportSchemaVersion},
                {"command", "report table3"},
                {"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"rows", rows},
                {"disclaimers",
                 {"lower-rank exclusion for these products is seesaw evidence, not proof, and is not rerun here"}},
                {"failures", doc.failures},
                {"passed", doc.passed()},
                {"seconds", format_double(seconds_since(t0))}};
    return doc;
}

} // namespace sicrank
