#include "sicrank/constructions.hpp"

#include "sicrank/catalog_data.hpp"
#include "sicrank/combinatorics.hpp"
#include "sicrank/graph6.hpp"
#include "sicrank/isomorphism.hpp"

#include <fstream>
#include <regex>
#include <stdexcept>

namespace sicrank {

Rational kappa(const Graph& g)
{
    return Rational(2) * (fractional_chromatic(g) - Rational(static_cast<long>(clique_number(g))));
}

ConstructionPlan theorem2_plan(const Graph& g, std::string graph_id)
{
    ConstructionPlan plan;
    plan.graph_id = std::move(graph_id);
    plan.chi_f = fractional_chromatic(g);
    plan.omega = clique_number(g);
    plan.kappa = Rational(2) * (plan.chi_f - Rational(static_cast<long>(plan.omega)));
    if (plan.kappa.sign() <= 0 || !(plan.kappa < Rational(1))) {
        plan.reason = "kappa = " + plan.kappa.to_string() + " is not in (0, 1)";
        return plan;
    }
    for (long r = 1; Rational(r) * plan.kappa < Rational(1); ++r) {
        const Rational bound = Rational(r) * plan.chi_f / (Rational(1) - Rational(r) * plan.kappa);
        const auto k = static_cast<std::size_t>(bound.ceil().to_int64());
        if (k <= static_cast<std::size_t>(r))
            throw std::logic_error("theorem2_plan: k_r <= r");
        const auto ur = static_cast<std::size_t>(r);
        plan.admissible_ranks.push_back(ur);
        plan.k_table[ur] = k;
        plan.sic_dimension[ur] = (2 * k + 1) * plan.omega;
    }
    return plan;
}

Theorem2Construction theorem2_graph(const Graph& g, std::size_t r, const std::optional<ProjectiveRepresentation>& rank1)
{
    const auto plan = theorem2_plan(g);
    const auto it = plan.k_table.find(r);
    if (it == plan.k_table.end())
        throw std::invalid_argument("theorem2_graph: rank " + std::to_string(r) + " is not admissible" +
                                    (plan.reason.empty() ? "" : " (" + plan.reason + ")"));
    Theorem2Construction out;
    out.r = r;
    out.k = it->second;
    const Graph cycle = cycle_graph(2 * out.k + 1);
    out.graph = disjunctive_product(g, cycle);
    if (rank1) {
        if (rank1->rank != 1 || rank1->projectors.size() != g.size())
            throw std::invalid_argument("theorem2_graph: supplied PR is not a rank-1 PR on the graph's vertices");
        for (auto [u, v] : g.edges())
            if (max_abs(rank1->projectors[u] * rank1->projectors[v]) > rank1->tolerance)
                throw std::invalid_argument("theorem2_graph: supplied PR is not orthogonal on every edge of the graph");
        ProjectiveRepresentation base = *rank1;
        base.graph = g;
        out.pr = tensor_pr(base, cycle_pr(out.k));
    }
    return out;
}

std::size_t lemma1_lower_bound(const Graph& g, std::size_t r) { return 2 * r * clique_number(g) + 1; }

std::vector<DimensionBounds> theorem2_dimension_bounds(const Graph& g, std::size_t r,
                                                       std::optional<std::size_t> rank1_dimension)
{
    const auto c = theorem2_graph(g, r);
    DimensionBounds low;
    low.r = r;
    low.lower = lemma1_lower_bound(g, r);
    low.notes.push_back("analytic lower bound 2 r omega + 1");
    DimensionBounds high;
    high.r = c.k;
    high.lower = lemma1_lower_bound(g, c.k);
    high.notes.push_back("analytic lower bound 2 k omega + 1");
    if (rank1_dimension) {
        high.upper = (2 * c.k + 1) * *rank1_dimension;
        high.notes.push_back("upper bound from the tensor of a rank-1 PR with the cycle PR");
        if (*high.upper < high.lower)
            throw std::logic_error("theorem2_dimension_bounds: upper bound below lower bound");
    }
    return {low, high};
}

ReductionResult reduce_pr(const ProjectiveRepresentation& pr, const ReductionOptions& opts)
{
    ReductionResult out;
    SicOptions base = opts.solver;
    base.gap = opts.gap;
    out.initial = sic_ratio(pr, base);
    if (!(out.initial.eta_lower > opts.threshold))
        throw std::invalid_argument("reduce_pr: initial SIC ratio " + format_double(out.initial.eta_lower) +
                                    " does not exceed the threshold");

    for (std::size_t v = 0; v < pr.projectors.size(); ++v)
        out.kept.push_back(v);
    out.pr = pr;
    SicCertificate current = out.initial;

    while (out.kept.size() > 1) {
        std::optional<std::size_t> best;
        SicCertificate best_cert;
        for (std::size_t pos = 0; pos < out.kept.size(); ++pos) {
            std::vector<std::size_t> keep;
            std::vector<double> start;
            for (std::size_t i = 0; i < out.kept.size(); ++i)
                if (i != pos) {
                    keep.push_back(i);
                    start.push_back(current.weights[i]);
                }
            const auto cand = induced_pr(out.pr, keep);
            SicOptions o = base;
            o.initial_weights = start;
            // A candidate can only win by beating the incumbent by more than tie_tol.
            o.stop_below = best ? std::max(opts.threshold, best_cert.eta_lower + opts.tie_tol) : opts.threshold;
            auto cert = sic_ratio(cand, o);
            if (!(cert.eta_lower > opts.threshold))
                continue;
            if (!best || cert.eta_lower > best_cert.eta_lower + opts.tie_tol) {
                best = pos;
                best_cert = std::move(cert);
            }
        }
        if (!best)
            break;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < out.kept.size(); ++i)
            if (i != *best)
                keep.push_back(i);
        const std::size_t removed = out.kept[*best];
        out.pr = induced_pr(out.pr, keep);
        out.kept.erase(out.kept.begin() + static_cast<std::ptrdiff_t>(*best));
        current = best_cert;
        out.log.push_back({removed, current.eta_lower, current.eta_upper, out.kept.size()});
    }
    out.final_certificate = current;
    return out;
}

namespace {

Table1Metadata parse_table1(const nlohmann::json& j)
{
    Table1Metadata m;
    m.vertices = j.at("vertices").get<std::size_t>();
    m.chi_f = Rational::parse(j.at("chi_f").get<std::string>());
    m.omega = j.at("omega").get<std::size_t>();
    m.eta = Rational::parse(j.at("eta").get<std::string>());
    m.eta_is_lower_bound = j.value("eta_is_lower_bound", false);
    m.inverse_kappa = Rational::parse(j.at("inverse_kappa").get<std::string>());
    m.k = j.at("k").get<std::vector<std::size_t>>();
    if (j.contains("dimension_check"))
        m.dimension_check = std::make_pair(j.at("dimension_check").at("rank").get<std::size_t>(),
                                           j.at("dimension_check").at("dimension").get<std::size_t>());
    return m;
}

} // namespace

std::optional<ProjectiveRepresentation> catalog_rank1_pr(const CatalogEntry& e)
{
    if (!e.rays)
        return std::nullopt;
    const auto raw = pr_from_rays(*e.rays);
    const auto iso = find_isomorphism(raw.graph, e.graph);
    if (!iso)
        throw std::runtime_error("catalog: rays of " + e.name + " do not realize its graph");
    std::vector<ComplexMatrix> ps(raw.projectors.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
        ps[(*iso)[i]] = raw.projectors[i];
    return make_pr(e.graph, std::move(ps), 1);
}

Catalog Catalog::builtin() { return from_json(nlohmann::json::parse(detail::kCatalogJson)); }

Catalog Catalog::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("catalog: cannot open " + path);
    return from_json(nlohmann::json::parse(in));
}

Catalog Catalog::from_json(const nlohmann::json& j)
{
    Catalog c;
    for (const auto& g : j.at("graphs")) {
        CatalogEntry e;
        e.name = g.at("name").get<std::string>();
        e.graph6 = g.at("graph6").get<std::string>();
        e.graph = decode_graph6(*e.graph6);
        if (g.contains("rays"))
            e.rays = rays_from_json(g.at("rays"));
        if (g.contains("table1")) {
            e.table1 = parse_table1(g.at("table1"));
            if (e.table1->vertices != e.graph.size())
                throw std::runtime_error("catalog: " + e.name + " has " + std::to_string(e.graph.size()) +
                                         " vertices but metadata says " + std::to_string(e.table1->vertices));
        }
        e.provenance = g.value("provenance", "");
        c.entries_.push_back(std::move(e));
    }
    if (j.contains("products"))
        for (const auto& p : j.at("products")) {
            ProductMetadata m;
            m.graph = p.at("graph").get<std::string>();
            m.ar = p.at("ar").get<std::size_t>();
            m.rank = p.at("rank").get<std::size_t>();
            m.vertices = p.at("vertices").get<std::size_t>();
            m.chi_f = Rational::parse(p.at("chi_f").get<std::string>());
            m.eta = Rational::parse(p.at("eta").get<std::string>());
            m.dimension = p.at("dimension").get<std::size_t>();
            if (p.contains("reduced")) {
                const auto& r = p.at("reduced");
                m.reduced_vertices = r.at("vertices").get<std::size_t>();
                m.reduced_chi_f = Rational::parse(r.at("chi_f").get<std::string>());
                m.reduced_eta = Rational::parse(r.at("eta").get<std::string>());
            }
            c.products_.push_back(std::move(m));
        }
    return c;
}

CatalogEntry Catalog::entry(std::string_view name) const
{
    for (const auto& e : entries_)
        if (e.name == name)
            return e;
    static const std::regex generated(R"((AR|C)\((\d+)\))");
    std::match_results<std::string_view::const_iterator> m;
    if (std::regex_match(name.begin(), name.end(), m, generated)) {
        const std::size_t p = std::stoul(m[2].str());
        CatalogEntry e;
        e.name = std::string(name);
        if (m[1] == "AR") {
            e.graph = ar_graph(p);
            e.provenance = "generated circulant on " + std::to_string(3 * p - 1) + " vertices";
        } else {
            e.graph = cycle_graph(p);
            e.provenance = "generated cycle";
        }
        return e;
    }
    throw std::out_of_range("catalog: unknown graph '" + std::string(name) + "'");
}

std::vector<std::string> Catalog::names() const
{
    std::vector<std::string> out;
    for (const auto& e : entries_)
        out.push_back(e.name);
    return out;
}

} // namespace sicrank
