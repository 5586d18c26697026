#include "sicrank/combinatorics.hpp"
#include "sicrank/constructions.hpp"
#include "sicrank/graph6.hpp"
#include "sicrank/isomorphism.hpp"
#include "sicrank/report.hpp"
#include "sicrank/seesaw.hpp"
#include "sicrank/sic_solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sicrank;
using nlohmann::json;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::size_t restarts = 200;
    double gap = 1e-8;
    bool json = false;
    std::string catalog;
};

// Raised when a command ran fine but a check it performs failed.
struct CheckFailed {};

Catalog load_catalog(const Globals& g) { return g.catalog.empty() ? Catalog::builtin() : Catalog::from_file(g.catalog); }

std::string read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// A catalog name ("YO", "AR(3)", "C(7)"), a file holding graph6 lines, or a graph6 string.
Graph resolve_graph(const Globals& glob, const std::string& text)
{
    try {
        return load_catalog(glob).entry(text).graph;
    } catch (const std::out_of_range&) {
    }
    if (std::filesystem::is_regular_file(text)) {
        std::ifstream in(text);
        const auto graphs = read_graph6_stream(in);
        if (graphs.empty())
            throw std::runtime_error(text + " holds no graph6 lines");
        return graphs.front();
    }
    return decode_graph6(text);
}

std::vector<ComplexVector> load_rays(const std::string& path)
{
    const json j = json::parse(read_text(path));
    return rays_from_json(j.is_object() ? j.at("rays") : j);
}

// PR sources: rays:FILE, catalog:NAME, basis:D, cycle:R, ar:R, ar-basis:R, and A*B for tensor products.
ProjectiveRepresentation resolve_pr(const Globals& glob, const std::string& spec)
{
    if (const auto star = spec.find('*'); star != std::string::npos)
        return tensor_pr(resolve_pr(glob, spec.substr(0, star)), resolve_pr(glob, spec.substr(star + 1)));
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("PR source '" + spec + "' lacks a kind prefix (rays:, catalog:, cycle:, ...)");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);
    if (kind == "rays")
        return pr_from_rays(load_rays(arg));
    if (kind == "catalog") {
        auto pr = catalog_rank1_pr(load_catalog(glob).entry(arg));
        if (!pr)
            throw std::invalid_argument("catalog entry " + arg + " carries no rays; find them with 'seesaw find'");
        return *pr;
    }
    const std::size_t n = std::stoul(arg);
    if (kind == "basis")
        return basis_pr(n);
    if (kind == "cycle")
        return cycle_pr(n);
    if (kind == "ar")
        return ar_pr(n);
    if (kind == "ar-basis")
        return ar_basis_pr(n);
    throw std::invalid_argument("unknown PR kind '" + kind + "'");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

RationalWeights parse_rational_weights(const std::string& text, std::size_t n)
{
    RationalWeights w;
    if (text.empty())
        return RationalWeights(n, Rational(1));
    for (const auto& t : split(text, ','))
        w.push_back(Rational::parse(t));
    if (w.size() != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
    return w;
}

std::vector<double> parse_real_weights(const std::string& text, std::size_t n)
{
    std::vector<double> w;
    for (const auto& q : parse_rational_weights(text, n))
        w.push_back(q.to_double());
    return w;
}

json edge_list(const Graph& g)
{
    json out = json::array();
    for (auto [u, v] : g.edges())
        out.push_back({u, v});
    return out;
}

json set_json(const Bitset& s) { return s.to_vector(); }

void emit(const Globals& glob, const json& j, const std::function<void()>& human)
{
    if (glob.json)
        std::cout << j.dump(2) << "\n";
    else
        human();
}

json matrix_json(const ComplexMatrix& m)
{
    json re = json::array(), im = json::array();
    bool complex = false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rr = json::array(), ri = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            rr.push_back(format_double(m(i, k).real()));
            ri.push_back(format_double(m(i, k).imag()));
            complex = complex || m(i, k).imag() != 0.0;
        }
        re.push_back(rr);
        im.push_back(ri);
    }
    json out = {{"re", re}};
    if (complex)
        out["im"] = im;
    return out;
}

json validation_json(const ValidationReport& r)
{
    return {{"passed", r.passed},
            {"idempotency", format_double(r.idempotency)},
            {"hermiticity", format_double(r.hermiticity)},
            {"edge_orthogonality", format_double(r.edge_orthogonality)},
            {"spectrum", format_double(r.spectrum)},
            {"ranks_match", r.ranks_match},
            {"shapes_match", r.shapes_match},
            {"sum_scale", format_double(r.sum_scale)},
            {"sum_identity_distance", format_double(r.sum_identity_distance)}};
}

json pr_summary(const ProjectiveRepresentation& pr)
{
    return {{"vertices", pr.projectors.size()},
            {"edges", pr.graph.edge_count()},
            {"dimension", pr.dimension},
            {"rank", pr.rank},
            {"graph6", encode_graph6(pr.graph)}};
}

void print_validation(const ValidationReport& r)
{
    std::printf("validation     %s\n", r.passed ? "passed" : "FAILED");
    std::printf("  idempotency  %.3g\n  hermiticity  %.3g\n  orthogonality %.3g\n  spectrum     %.3g\n",
                r.idempotency, r.hermiticity, r.edge_orthogonality, r.spectrum);
    std::printf("  ranks match  %s\n  sum          %.17g I (distance %.3g)\n", r.ranks_match ? "yes" : "no",
                r.sum_scale, r.sum_identity_distance);
}

void print_pr(const ProjectiveRepresentation& pr)
{
    std::printf("vertices %zu, edges %zu, dimension %zu, rank %zu\n", pr.projectors.size(), pr.graph.edge_count(),
                pr.dimension, pr.rank);
}

// ---- graph ----

void graph_commands(CLI::App& app, Globals& glob)
{
    auto* graph = app.add_subcommand("graph", "Graph utilities");
    graph->require_subcommand(1);

    static std::string g_text, f_text, edges_path;
    static std::size_t rank = 2;

    auto* info = graph->add_subcommand("info", "Size, degrees and clique/independence numbers");
    info->add_option("graph", g_text, "catalog name, graph6 string or file")->required();
    info->callback([&] {
        const Graph g = resolve_graph(glob, g_text);
        std::size_t dmin = g.size() ? g.size() : 0, dmax = 0;
        for (std::size_t v = 0; v < g.size(); ++v) {
            dmin = std::min(dmin, g.degree(v));
            dmax = std::max(dmax, g.degree(v));
        }
        const json j = {{"command", "graph info"},   {"vertices", g.size()},
                        {"edges", g.edge_count()},   {"min_degree", dmin},
                        {"max_degree", dmax},        {"alpha", independence_number(g)},
                        {"omega", clique_number(g)}, {"graph6", encode_graph6(g)}};
        emit(glob, j, [&] {
            std::printf("vertices %zu\nedges    %zu\ndegree   %zu..%zu\nalpha    %zu\nomega    %zu\ngraph6   %s\n",
                        g.size(), g.edge_count(), dmin, dmax, independence_number(g), clique_number(g),
                        encode_graph6(g).c_str());
        });
    });

    auto* product = graph->add_subcommand("product", "Disjunctive product G v F");
    product->add_option("g", g_text)->required();
    product->add_option("f", f_text)->required();
    product->callback([&] {
        const Graph p = disjunctive_product(resolve_graph(glob, g_text), resolve_graph(glob, f_text));
        emit(glob, {{"command", "graph product"}, {"vertices", p.size()}, {"edges", p.edge_count()}, {"graph6", encode_graph6(p)}},
             [&] { std::printf("%s\n", encode_graph6(p).c_str()); });
    });

    auto* expand = graph->add_subcommand("expand", "Replace every vertex by a clique");
    expand->add_option("graph", g_text)->required();
    expand->add_option("--rank,-r", rank, "clique size")->check(CLI::PositiveNumber);
    expand->callback([&] {
        const Graph e = clique_expansion(resolve_graph(glob, g_text), rank);
        emit(glob, {{"command", "graph expand"}, {"rank", rank}, {"vertices", e.size()}, {"graph6", encode_graph6(e)}},
             [&] { std::printf("%s\n", encode_graph6(e).c_str()); });
    });

    auto* encode = graph->add_subcommand("encode", "Edge list (first line n, then 'u v' lines) to graph6");
    encode->add_option("file", edges_path, "edge list file, '-' for stdin")->required();
    encode->callback([&] {
        std::ifstream file;
        std::istream* in = &std::cin;
        if (edges_path != "-") {
            file.open(edges_path);
            if (!file)
                throw std::runtime_error("cannot open " + edges_path);
            in = &file;
        }
        std::size_t n = 0;
        if (!(*in >> n))
            throw std::runtime_error("edge list must start with the vertex count");
        GraphBuilder b(n);
        std::size_t u, v;
        while (*in >> u >> v) {
            if (u >= n || v >= n)
                throw std::runtime_error("edge endpoint out of range");
            b.add_edge(u, v);
        }
        const Graph g = std::move(b).build();
        emit(glob, {{"command", "graph encode"}, {"graph6", encode_graph6(g)}},
             [&] { std::printf("%s\n", encode_graph6(g).c_str()); });
    });

    auto* decode = graph->add_subcommand("decode", "Print the edge list of a graph");
    decode->add_option("graph", g_text)->required();
    decode->callback([&] {
        const Graph g = resolve_graph(glob, g_text);
        emit(glob, {{"command", "graph decode"}, {"vertices", g.size()}, {"edges", edge_list(g)}}, [&] {
            std::printf("%zu\n", g.size());
            for (auto [u, v] : g.edges())
                std::printf("%zu %zu\n", u, v);
        });
    });
}

// ---- invariant ----

void invariant_commands(CLI::App& app, Globals& glob)
{
    auto* inv = app.add_subcommand("invariant", "Exact graph invariants");
    inv->require_subcommand(1);
    static std::string g_text, weights;

    auto* alpha = inv->add_subcommand("alpha", "Weighted independence number (exact)");
    alpha->add_option("graph", g_text)->required();
    alpha->add_option("--weights,-w", weights, "comma-separated rationals, default all 1");
    alpha->callback([&] {
        const Graph g = resolve_graph(glob, g_text);
        const auto w = parse_rational_weights(weights, g.size());
        const auto best = max_weight_independent_set(g, w);
        emit(glob, {{"command", "invariant alpha"}, {"alpha", best.value.to_string()}, {"set", set_json(best.set)}},
             [&] {
                 std::printf("alpha %s\nset  ", best.value.to_string().c_str());
                 best.set.for_each([](std::size_t v) { std::printf(" %zu", v); });
                 std::printf("\n");
             });
    });

    auto* omega = inv->add_subcommand("omega", "Clique number");
    omega->add_option("graph", g_text)->required();
    omega->callback([&] {
        const std::size_t w = clique_number(resolve_graph(glob, g_text));
        emit(glob, {{"command", "invariant omega"}, {"omega", w}}, [&] { std::printf("omega %zu\n", w); });
    });

    auto* chif = inv->add_subcommand("chif", "Weighted fractional chromatic number with certificate");
    chif->add_option("graph", g_text)->required();
    chif->add_option("--weights,-w", weights, "comma-separated rationals, default all 1");
    chif->callback([&] {
        const Graph g = resolve_graph(glob, g_text);
        const auto w = parse_rational_weights(weights, g.size());
        const auto fc = fractional_chromatic_certified(g, w);
        json cover = json::array();
        for (const auto& [set, z] : fc.cover)
            cover.push_back({{"set", set_json(set)}, {"weight", z.to_string()}});
        json dual = json::array();
        for (const auto& y : fc.dual)
            dual.push_back(y.to_string());
        emit(glob, {{"command", "invariant chif"}, {"chi_f", fc.value.to_string()}, {"cover", cover}, {"dual", dual}},
             [&] {
                 std::printf("chi_f %s\ncover (%zu sets)\n", fc.value.to_string().c_str(), fc.cover.size());
                 for (const auto& [set, z] : fc.cover) {
                     std::printf("  %-8s {", z.to_string().c_str());
                     set.for_each([](std::size_t v) { std::printf(" %zu", v); });
                     std::printf(" }\n");
                 }
             });
    });
}

// ---- pr ----

void pr_commands(CLI::App& app, Globals& glob)
{
    auto* prc = app.add_subcommand("pr", "Projective representations");
    prc->require_subcommand(1);
    static std::string spec, spec2, g_text;
    static bool show = false;
    const char* spec_help = "rays:FILE, catalog:NAME, basis:D, cycle:R, ar:R, ar-basis:R, or A*B";

    auto* verify = prc->add_subcommand("verify", "Validate a PR and compare its exclusivity graph");
    verify->add_option("pr", spec, spec_help)->required();
    verify->add_option("--graph,-g", g_text, "graph the PR should represent (up to isomorphism)");
    verify->callback([&] {
        auto pr = resolve_pr(glob, spec);
        const auto rep = validate_pr(pr);
        json j = {{"command", "pr verify"}, {"pr", pr_summary(pr)}, {"validation", validation_json(rep)}};
        bool ok = rep.passed;
        if (!g_text.empty()) {
            const Graph target = resolve_graph(glob, g_text);
            const bool iso = are_isomorphic(pr.graph, target);
            j["isomorphic_to_graph"] = iso;
            ok = ok && iso;
        }
        emit(glob, j, [&] {
            print_pr(pr);
            print_validation(rep);
            if (j.contains("isomorphic_to_graph"))
                std::printf("isomorphic to %s: %s\n", g_text.c_str(), j["isomorphic_to_graph"].get<bool>() ? "yes" : "NO");
        });
        if (!ok)
            throw CheckFailed{};
    });

    auto* construct = prc->add_subcommand("construct", "Build a PR and print it");
    construct->add_option("pr", spec, spec_help)->required();
    construct->add_flag("--projectors", show, "include the projector matrices");
    construct->callback([&] {
        const auto pr = resolve_pr(glob, spec);
        json j = {{"command", "pr construct"}, {"pr", pr_summary(pr)}, {"validation", validation_json(validate_pr(pr))}};
        if (show) {
            json ps = json::array();
            for (const auto& p : pr.projectors)
                ps.push_back(matrix_json(p));
            j["projectors"] = ps;
        }
        emit(glob, j, [&] {
            print_pr(pr);
            std::printf("graph6 %s\n", encode_graph6(pr.graph).c_str());
            if (show)
                for (std::size_t k = 0; k < pr.projectors.size(); ++k) {
                    std::printf("P%zu =\n", k);
                    std::cout << pr.projectors[k].real() << "\n";
                }
        });
    });

    auto* tensor = prc->add_subcommand("tensor", "Tensor product of two PRs");
    tensor->add_option("a", spec, spec_help)->required();
    tensor->add_option("b", spec2, spec_help)->required();
    tensor->callback([&] {
        const auto pr = tensor_pr(resolve_pr(glob, spec), resolve_pr(glob, spec2));
        const auto rep = validate_pr(pr);
        emit(glob, {{"command", "pr tensor"}, {"pr", pr_summary(pr)}, {"validation", validation_json(rep)}}, [&] {
            print_pr(pr);
            print_validation(rep);
        });
        if (!rep.passed)
            throw CheckFailed{};
    });
}

// ---- sic ----

void sic_commands(CLI::App& app, Globals& glob)
{
    auto* sic = app.add_subcommand("sic", "SIC ratio and witness evaluation");
    sic->require_subcommand(1);
    static std::string spec, weights;
    static double max_seconds = 300.0;

    auto* ratio = sic->add_subcommand("ratio", "Certified bounds on the SIC ratio");
    ratio->add_option("pr", spec)->required();
    ratio->add_option("--max-seconds", max_seconds);
    ratio->callback([&] {
        const auto pr = resolve_pr(glob, spec);
        SicOptions opts;
        opts.gap = glob.gap;
        opts.max_seconds = max_seconds;
        const auto cert = sic_ratio(pr, opts);
        json j = to_json(cert);
        j["command"] = "sic ratio";
        j["pr"] = pr_summary(pr);
        j["sic"] = cert.eta_lower > 1.0;
        emit(glob, j, [&] {
            print_pr(pr);
            std::printf("eta  in [%.17g, %.17g]  (%s, %zu iterations, %zu cuts, %.2f s)\n", cert.eta_lower,
                        cert.eta_upper, cert.status.c_str(), cert.iterations, cert.cuts, cert.wall_time);
            std::printf("SIC  %s\n", cert.eta_lower > 1.0 ? "yes (eta_lower > 1)" : "not certified");
        });
    });

    auto* witness = sic->add_subcommand("witness", "Evaluate the inequality sum w_k P_k >= alpha(G, w)");
    witness->add_option("pr", spec)->required();
    witness->add_option("--weights,-w", weights, "comma-separated nonnegative weights, default all 1");
    witness->callback([&] {
        const auto pr = resolve_pr(glob, spec);
        const auto w = parse_real_weights(weights, pr.projectors.size());
        const auto gap = witness_gap(pr, w);
        emit(glob,
             {{"command", "sic witness"},
              {"lhs", format_double(gap.lhs)},
              {"rhs", format_double(gap.rhs)},
              {"violated", gap.violated()}},
             [&] {
                 std::printf("min state value %.17g\nalpha(G, w)     %.17g\n%s\n", gap.lhs, gap.rhs,
                             gap.violated() ? "violated by every state" : "not violated by every state");
             });
    });
}

// ---- seesaw ----

void seesaw_commands(CLI::App& app, Globals& glob)
{
    auto* seesaw = app.add_subcommand("seesaw", "Gram-matrix search for PRs");
    seesaw->require_subcommand(1);
    static std::string g_text, save;
    static std::size_t d = 3, r = 1, max_iter = 3000;
    static bool gram = false, complex = false;

    auto* find = seesaw->add_subcommand("find", "Search for a rank-r PR in dimension d");
    find->add_option("graph", g_text)->required();
    find->add_option("--dim,-d", d)->check(CLI::PositiveNumber);
    find->add_option("--rank,-r", r)->check(CLI::PositiveNumber);
    find->add_option("--max-iterations", max_iter)->check(CLI::PositiveNumber);
    find->add_option("--save-rays", save, "write the found rank-1 PR as a rays file");
    find->add_flag("--complex", complex, "search complex Hermitian Gram matrices");
    find->add_flag("--gram", gram, "include the Gram matrix and projectors in JSON output");
    find->callback([&] {
        const Graph g = resolve_graph(glob, g_text);
        GramSearchConfig cfg;
        cfg.restarts = glob.restarts;
        cfg.seed = glob.seed;
        cfg.max_iterations = max_iter;
        cfg.complex = complex;
        const auto res = find_pr(g, r, d, cfg);
        json j = to_json(res, gram);
        j["command"] = "seesaw find";
        j["seed"] = glob.seed;
        j["dimension"] = d;
        j["rank"] = r;
        if (res.found && !save.empty()) {
            if (r != 1)
                throw std::invalid_argument("--save-rays needs rank 1");
            std::vector<ComplexVector> rays;
            for (const auto& p : res.pr->projectors)
                rays.push_back(projector_ray(p));
            std::ofstream(save) << json{{"rays", rays_to_json(rays)}, {"provenance", "seesaw-derived"}}.dump(1)
                                << "\n";
            j["saved"] = save;
        }
        emit(glob, j, [&] {
            if (res.found)
                std::printf("found on restart %zu (residual %.3g)\n", res.best_restart, res.best_residual);
            else
                std::printf("not found in %zu restarts (best residual %.3g)\n%s\n", res.restarts.size(),
                            res.best_residual, res.disclaimer.c_str());
            std::printf("residual histogram by decade:");
            for (auto c : res.histogram)
                std::printf(" %zu", c);
            std::printf("\n");
        });
    });
}

// ---- construct ----

void construct_commands(CLI::App& app, Globals& glob)
{
    auto* con = app.add_subcommand("construct", "Higher-rank constructions");
    con->require_subcommand(1);
    static std::string g_text, rays, spec;
    static std::size_t r = 1;
    static double threshold = 1.0;

    auto* plan = con->add_subcommand("plan", "Admissible ranks and cycle parameters");
    plan->add_option("graph", g_text)->required();
    plan->callback([&] {
        const auto p = theorem2_plan(resolve_graph(glob, g_text), g_text);
        json ranks = json::array();
        for (auto rr : p.admissible_ranks)
            ranks.push_back({{"r", rr}, {"k", p.k_table.at(rr)}, {"sic_dimension", p.sic_dimension.at(rr)}});
        json j = {{"command", "construct plan"},
                  {"graph", g_text},
                  {"chi_f", p.chi_f.to_string()},
                  {"omega", p.omega},
                  {"kappa", p.kappa.to_string()},
                  {"ranks", ranks}};
        if (!p.reason.empty())
            j["reason"] = p.reason;
        emit(glob, j, [&] {
            std::printf("chi_f %s, omega %zu, kappa %s\n", p.chi_f.to_string().c_str(), p.omega,
                        p.kappa.to_string().c_str());
            if (p.empty())
                std::printf("no admissible rank: %s\n", p.reason.c_str());
            else
                std::printf("%4s %6s %10s\n", "r", "k_r", "dimension");
            for (auto rr : p.admissible_ranks)
                std::printf("%4zu %6zu %10zu\n", rr, p.k_table.at(rr), p.sic_dimension.at(rr));
        });
    });

    auto* build = con->add_subcommand("build", "G v C_(2k+1) and, given rays, its tensor PR");
    build->add_option("graph", g_text)->required();
    build->add_option("--rank,-r", r)->check(CLI::PositiveNumber);
    build->add_option("--rays", rays, "rank-1 PR of the graph, in the graph's vertex order");
    build->callback([&] {
        const Graph g = resolve_graph(glob, g_text);
        std::optional<ProjectiveRepresentation> rank1;
        if (!rays.empty()) {
            auto pr = pr_from_rays(load_rays(rays));
            pr.graph = g;
            rank1 = pr;
        }
        const auto c = theorem2_graph(g, r, rank1);
        json j = {{"command", "construct build"},
                  {"r", c.r},
                  {"k", c.k},
                  {"vertices", c.graph.size()},
                  {"edges", c.graph.edge_count()},
                  {"lower_bound_dimension", lemma1_lower_bound(g, r)}};
        bool ok = true;
        if (c.pr) {
            const auto rep = validate_pr(*c.pr);
            j["pr"] = pr_summary(*c.pr);
            j["validation"] = validation_json(rep);
            ok = rep.passed;
        } else {
            j["graph6"] = encode_graph6(c.graph);
        }
        emit(glob, j, [&] {
            std::printf("k = %zu: product has %zu vertices, %zu edges\n", c.k, c.graph.size(), c.graph.edge_count());
            std::printf("no rank-%zu PR below dimension %zu\n", r, lemma1_lower_bound(g, r));
            if (c.pr) {
                print_pr(*c.pr);
                print_validation(validate_pr(*c.pr));
            }
        });
        if (!ok)
            throw CheckFailed{};
    });

    auto* reduce = con->add_subcommand("reduce", "Greedy projector removal keeping the ratio above a threshold");
    reduce->add_option("pr", spec)->required();
    reduce->add_option("--threshold", threshold);
    reduce->callback([&] {
        const auto pr = resolve_pr(glob, spec);
        ReductionOptions opts;
        opts.threshold = threshold;
        opts.gap = glob.gap;
        const auto red = reduce_pr(pr, opts);
        json log = json::array();
        for (const auto& s : red.log)
            log.push_back({{"removed", s.vertex},
                           {"eta_lower", format_double(s.eta_lower)},
                           {"eta_upper", format_double(s.eta_upper)},
                           {"remaining", s.remaining}});
        const Rational chi = fractional_chromatic(red.pr.graph);
        emit(glob,
             {{"command", "construct reduce"},
              {"initial_eta_lower", format_double(red.initial.eta_lower)},
              {"kept", red.kept},
              {"vertices", red.kept.size()},
              {"chi_f", chi.to_string()},
              {"eta_lower", format_double(red.final_certificate.eta_lower)},
              {"graph6", encode_graph6(red.pr.graph)},
              {"log", log}},
             [&] {
                 std::printf("start %zu projectors, eta >= %.10f\n", pr.projectors.size(), red.initial.eta_lower);
                 for (const auto& s : red.log)
                     std::printf("  drop %4zu -> %4zu left, eta >= %.10f\n", s.vertex, s.remaining, s.eta_lower);
                 std::printf("end   %zu projectors, chi_f %s, eta >= %.10f\n", red.kept.size(), chi.to_string().c_str(),
                             red.final_certificate.eta_lower);
             });
    });
}

// ---- report ----

void print_cells(const json& row)
{
    for (const auto& c : row["cells"]) {
        const bool pass = c["pass"];
        const bool binding = c["binding"];
        if (c.contains("error"))
            std::printf("    %-24s ERROR %s\n", c["cell"].get<std::string>().c_str(), c["error"].get<std::string>().c_str());
        else
            std::printf("    %-24s %-28s %-28s %s%s\n", c["cell"].get<std::string>().c_str(),
                        c["computed"].get<std::string>().c_str(), c["expected"].get<std::string>().c_str(),
                        pass ? "ok" : "MISMATCH", binding ? "" : " (non-binding)");
    }
}

void report_commands(CLI::App& app, Globals& glob)
{
    auto* rep = app.add_subcommand("report", "Recompute the reference tables");
    rep->require_subcommand(1);
    static bool no_reduce = false;

    auto finish = [&](const ReportDocument& doc) {
        emit(glob, doc.json, [&] {
            for (const auto& row : doc.json["rows"]) {
                std::printf("%s (%.2f s)\n", row["graph"].get<std::string>().c_str(),
                            std::stod(row.value("seconds", std::string("0"))));
                std::printf("    %-24s %-28s %-28s\n", "cell", "computed", "expected");
                print_cells(row);
                if (row.contains("reduction"))
                    std::printf("    reduced to %zu vertices (reference %zu, non-binding)\n",
                                row["reduction"]["vertices"].get<std::size_t>(),
                                row["reduction"]["expected_vertices"].get<std::size_t>());
            }
            if (doc.json.contains("disclaimers"))
                for (const auto& d : doc.json["disclaimers"])
                    std::printf("note: %s\n", d.get<std::string>().c_str());
            std::printf("%s\n", doc.passed() ? "all comparisons pass" : "MISMATCHES:");
            for (const auto& f : doc.failures)
                std::printf("  %s\n", f.c_str());
        });
        if (!doc.passed())
            throw CheckFailed{};
    };

    auto* t1 = rep->add_subcommand("table1", "Rank plans of the five base graphs");
    t1->callback([&, finish] { finish(run_table1_report(load_catalog(glob))); });

    auto* t3 = rep->add_subcommand("table3", "Rank-2 and rank-3 product PRs");
    t3->add_flag("--no-reduce", no_reduce, "skip the reduction heuristic");
    t3->callback([&, finish] {
        Table3Config cfg;
        cfg.seed = glob.seed;
        cfg.restarts = glob.restarts;
        cfg.gap = glob.gap;
        cfg.reduce = !no_reduce;
        finish(run_table3_report(load_catalog(glob), cfg));
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rank-r projective representations and state-independent contextuality"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals glob;
    app.add_option("--seed", glob.seed, "seesaw seed");
    app.add_option("--restarts", glob.restarts, "seesaw restart budget")->check(CLI::PositiveNumber);
    app.add_option("--gap", glob.gap, "SIC ratio optimality gap")->check(CLI::PositiveNumber);
    app.add_flag("--json", glob.json, "machine-readable output");
    app.add_option("--catalog", glob.catalog, "catalog JSON file (default: built in)")->check(CLI::ExistingFile);

    graph_commands(app, glob);
    invariant_commands(app, glob);
    pr_commands(app, glob);
    sic_commands(app, glob);
    seesaw_commands(app, glob);
    construct_commands(app, glob);
    report_commands(app, glob);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const CheckFailed&) {
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
