#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cogdim/construction.hpp"
#include "cogdim/exact_solver.hpp"
#include "cogdim/json_io.hpp"
#include "cogdim/threshold_cover.hpp"

using namespace cogdim;

namespace {

// status -> exit code mapping is fixed: ok=0, reject/unsat=1, undecided=2, error=3
int emit(const std::string& status, json payload) {
    payload["status"] = status;
    std::cout << payload.dump() << "\n";
    if (status == "ok") return 0;
    if (status == "reject" || status == "unsat") return 1;
    if (status == "undecided") return 2;
    return 3;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open graph file \"" + path + "\"");
    return parse_graph(in);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open file \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error("malformed-json", std::string("cannot parse \"") + path + "\": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw Error("io", "cannot write \"" + path + "\"");
    out << contents;
}

int run_gen(const std::string& family, const std::vector<long long>& params,
            const std::string& out_path) {
    Graph g = generate_family(family, params);
    if (!out_path.empty()) write_file(out_path, graph_to_edge_list(g));
    json payload{{"command", "gen"}, {"family", family}, {"params", params}, {"graph", graph_to_json(g)}};
    if (!out_path.empty()) payload["file"] = out_path;
    return emit("ok", payload);
}

int run_recognize(const std::string& graph_path, const std::string& family) {
    Graph g = load_graph(graph_path);
    RecognitionResult rec = family == "split" ? is_split(g) : recognize(g, family_from_name(family));
    json payload{{"command", "recognize"},
                 {"family", family},
                 {"member", rec.member},
                 {"certificate", certificate_to_json(rec.certificate)}};
    return emit(rec.member ? "ok" : "reject", payload);
}

// Derives the smallest mode-valid coloring by exhausting k = 1, 2, ...
Coloring derive_exact_coloring(const Graph& g, ColorMode mode, int size_limit) {
    if (g.vertex_count() > size_limit)
        throw Error("witness-required", "graph too large to derive an exact " + color_mode_name(mode) +
                                            " coloring; supply --coloring");
    for (int k = 1; k <= std::max(1, g.vertex_count()); ++k) {
        ExactColoringResult res = exact_coloring(g, mode, k);
        if (res.status == ExactColoringResult::Status::Sat) return res.coloring;
    }
    throw std::logic_error("no coloring up to n colors");
}

int run_construct(const std::string& graph_path, const std::string& method, const std::string& family,
                  const std::string& decomposition_path, const std::string& boxes_path,
                  const std::string& coloring_path, int root_bag, const std::vector<int>& roots,
                  int exact_color_limit) {
    Graph g = load_graph(graph_path);
    Representation rep;
    json witness_info = json::object();
    std::string witness_source = "none";

    if (method == "forest") {
        rep = forest_two_cographs(g, roots);
        if (!roots.empty()) witness_info["roots"] = roots;
    } else if (method == "path") {
        rep = path_two_thresholds(g);
    } else if (method == "cycle") {
        if (family.empty()) throw Error("missing-flag", "--method cycle needs --family");
        std::vector<int> order = cycle_order(g);
        Representation std_rep = cycle_representation(g.vertex_count(), family_from_name(family));
        rep.family = std_rep.family;
        rep.n = g.vertex_count();
        for (const Graph& f : std_rep.factors) {
            Graph mapped(rep.n);
            for (auto [a, b] : f.edges()) mapped.add_edge(order[a], order[b]);
            rep.factors.push_back(std::move(mapped));
        }
        witness_info["cycle_order"] = order;
    } else if (method == "treewidth") {
        TreeDecomposition dec;
        if (!decomposition_path.empty()) {
            dec = tree_decomposition_from_json(load_json(decomposition_path));
            witness_source = "supplied";
        } else {
            dec = heuristic_tree_decomposition(g);
            witness_source = "derived";
        }
        witness_info["decomposition"] = tree_decomposition_to_json(dec);
        witness_info["witnessed_width"] = dec.width();
        rep = treewidth_construction(g, dec, root_bag);
    } else if (method == "pathwidth") {
        PathDecomposition dec;
        if (!decomposition_path.empty()) {
            dec = path_decomposition_from_json(load_json(decomposition_path));
            witness_source = "supplied";
        } else {
            dec = sweep_path_decomposition(g);
            witness_source = "derived";
        }
        witness_info["decomposition"] = path_decomposition_to_json(dec);
        witness_info["witnessed_width"] = dec.width();
        rep = pathwidth_construction(g, dec);
    } else if (method == "box-chromatic") {
        if (boxes_path.empty()) throw Error("missing-flag", "--method box-chromatic needs --boxes");
        BoxRepresentation boxes = box_representation_from_json(load_json(boxes_path));
        Coloring coloring;
        if (!coloring_path.empty()) {
            coloring = coloring_from_json(load_json(coloring_path));
            witness_source = "supplied";
        } else {
            coloring = greedy_proper_coloring(g);
            witness_source = "derived";
        }
        witness_info["boxes"] = box_representation_to_json(boxes);
        witness_info["coloring"] = coloring_to_json(coloring);
        rep = box_chromatic_construction(g, boxes, coloring);
    } else if (method == "star" || method == "acyclic") {
        ColorMode mode = method == "star" ? ColorMode::Star : ColorMode::Acyclic;
        Coloring coloring;
        if (!coloring_path.empty()) {
            coloring = coloring_from_json(load_json(coloring_path));
            witness_source = "supplied";
        } else {
            coloring = derive_exact_coloring(g, mode, exact_color_limit);
            witness_source = "derived";
        }
        witness_info["coloring"] = coloring_to_json(coloring);
        rep = mode == ColorMode::Star ? star_coloring_construction(g, coloring)
                                      : acyclic_coloring_construction(g, coloring);
    } else {
        throw Error("unknown-method", "unknown construction method \"" + method + "\"");
    }

    VerifyResult check = verify_representation(g, rep);
    if (!check.accepted)
        return emit("error", json{{"command", "construct"},
                                  {"error_kind", "self-verification-failed"},
                                  {"clause", verify_clause_name(check.failed)}});
    json payload{{"command", "construct"},
                 {"representation", representation_to_json(rep)},
                 {"provenance", json{{"method", method},
                                     {"witness_source", witness_source},
                                     {"witness", witness_info},
                                     {"factor_count", rep.factors.size()}}}};
    return emit("ok", payload);
}

int run_verify(const std::string& graph_path, const std::string& rep_path) {
    Graph g = load_graph(graph_path);
    Representation rep = representation_from_json(load_json(rep_path));
    VerifyResult check = verify_representation(g, rep);
    json payload{{"command", "verify"}, {"accepted", check.accepted}};
    if (check.accepted) return emit("ok", payload);
    payload["clause"] = verify_clause_name(check.failed);
    if (check.factor_index >= 0) payload["factor"] = check.factor_index;
    if (check.offending_pair.first >= 0)
        payload["pair"] = json::array({check.offending_pair.first, check.offending_pair.second});
    payload["certificate"] = certificate_to_json(check.certificate);
    // a factor on the wrong vertex set is a malformed input, not a refutation
    return emit(check.failed == VerifyClause::VertexCount ? "error" : "reject", payload);
}

int run_dim(const std::string& graph_path, const std::string& family, int kmax,
            unsigned long long node_limit) {
    Graph g = load_graph(graph_path);
    SolveOptions options;
    options.node_limit = node_limit;
    DimensionResult res = exact_dimension(g, family_from_name(family), kmax, options);
    json payload{{"command", "dim"}, {"family", family}, {"kmax", kmax}, {"nodes", res.nodes}};
    if (res.status == DimensionResult::Status::Found) {
        payload["dimension"] = res.dimension;
        payload["witness"] = representation_to_json(res.witness);
        return emit("ok", payload);
    }
    if (res.status == DimensionResult::Status::AboveBound) {
        payload["dimension"] = nullptr;
        payload["greater_than"] = kmax;
        return emit("unsat", payload);
    }
    return emit("undecided", payload);
}

int run_th2(const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    ThresholdDim2Result res = threshold_dim_le2(g);
    json payload{{"command", "th2"},
                 {"threshold_dimension_le_2", res.le2},
                 {"certificate", certificate_to_json(res.certificate)},
                 {"aux_of_complement", auxiliary_graph_to_json(res.aux)}};
    return emit(res.le2 ? "ok" : "unsat", payload);
}

int run_bound(const std::string& graph_path, const std::string& boxes_path, int exact_color_limit) {
    Graph g = load_graph(graph_path);
    json rows = json::array();

    if (find_cycle(g).empty())
        rows.push_back(json{{"bound", "forest"}, {"family", "cograph"}, {"factors", 2}});

    TreeDecomposition tdec = heuristic_tree_decomposition(g);
    rows.push_back(json{{"bound", "treewidth-witness-plus-2"},
                        {"family", "cograph"},
                        {"witnessed_width", tdec.width()},
                        {"factors", tdec.width() + 2}});

    PathDecomposition pdec = sweep_path_decomposition(g);
    rows.push_back(json{{"bound", "pathwidth-witness-plus-1"},
                        {"family", "threshold"},
                        {"witnessed_width", pdec.width()},
                        {"factors", pdec.width() + 1}});

    bool cycle = true;
    try {
        cycle_order(g);
    } catch (const Error&) {
        cycle = false;
    }
    if (cycle) {
        int n = g.vertex_count();
        int cog = n <= 4 ? 1 : (n <= 6 ? 2 : 3);
        int th = n <= 3 ? 1 : (n == 4 ? 2 : 3);
        rows.push_back(json{{"bound", "cycle-table"}, {"family", "cograph"}, {"factors", cog}});
        rows.push_back(json{{"bound", "cycle-table"}, {"family", "threshold"}, {"factors", th}});
    }

    if (!boxes_path.empty()) {
        BoxRepresentation boxes = box_representation_from_json(load_json(boxes_path));
        WitnessCheck bcheck = validate_box_representation(g, boxes);
        if (!bcheck.accepted) throw Error("invalid-witness", "box representation rejected: " + bcheck.clause);
        Coloring coloring = greedy_proper_coloring(g);
        int chi = coloring.used_color_count();
        rows.push_back(json{{"bound", "chromatic-times-boxicity"},
                            {"family", "threshold"},
                            {"witness_colors", chi},
                            {"box_dimensions", boxes.k},
                            {"factors", chi * boxes.k}});
    }

    if (g.vertex_count() <= exact_color_limit) {
        Coloring star = derive_exact_coloring(g, ColorMode::Star, exact_color_limit);
        int chi_s = star.used_color_count();
        rows.push_back(json{{"bound", "alpha-star-chromatic"},
                            {"family", "cograph"},
                            {"witness_colors", chi_s},
                            {"factors", alpha(chi_s)}});
        Coloring acyc = derive_exact_coloring(g, ColorMode::Acyclic, exact_color_limit);
        int chi_a = acyc.used_color_count();
        rows.push_back(json{{"bound", "two-alpha-acyclic-chromatic"},
                            {"family", "cograph"},
                            {"witness_colors", chi_a},
                            {"factors", 2 * alpha(chi_a)}});
    }

    return emit("ok", json{{"command", "bound"}, {"rows", rows}});
}

int run_aux(const std::string& graph_path, bool use_complement, const std::string& out_base) {
    Graph g = load_graph(graph_path);
    AuxiliaryGraph aux = auxiliary_graph(use_complement ? complement(g) : g);
    if (!out_base.empty()) {
        write_file(out_base, graph_to_edge_list(aux.graph));
        std::string sidecar;
        for (size_t i = 0; i < aux.source_edges.size(); ++i)
            sidecar += std::to_string(i) + " " + std::to_string(aux.source_edges[i].first) + " " +
                       std::to_string(aux.source_edges[i].second) + "\n";
        write_file(out_base + ".map", sidecar);
    }
    json payload{{"command", "aux"}, {"complemented", use_complement}, {"aux", auxiliary_graph_to_json(aux)}};
    if (!out_base.empty()) payload["file"] = out_base;
    return emit("ok", payload);
}

int run_cnf(const std::string& graph_path, const std::string& family, int k, const std::string& out_path) {
    Graph g = load_graph(graph_path);
    std::ofstream out(out_path);
    if (!out) throw Error("io", "cannot write \"" + out_path + "\"");
    export_cnf(out, g, family_from_name(family), k);
    long long nonedges = static_cast<long long>(g.vertex_count()) * (g.vertex_count() - 1) / 2 - g.edge_count();
    return emit("ok", json{{"command", "cnf"}, {"family", family}, {"k", k}, {"file", out_path},
                           {"vars", nonedges * k}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructs, verifies and decides intersection representations of graphs "
                 "as cographs and threshold graphs"};
    app.require_subcommand(1);

    std::string graph_path, family, method, decomposition_path, boxes_path, coloring_path, out_path;
    std::vector<long long> gen_params;
    std::vector<int> roots;
    int kmax = 3, k = 2, root_bag = 0, exact_color_limit = 14;
    unsigned long long node_limit = 0;
    bool use_complement = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a named graph family");
    gen->add_option("family", family, "cycle|path|complete|star|grid|fig1_tree|fig4_outerplanar")->required();
    gen->add_option("params", gen_params, "family parameters");
    gen->add_option("--out", out_path, "write edge-list file");

    CLI::App* rec = app.add_subcommand("recognize", "recognize a graph family with a certificate");
    rec->add_option("graph", graph_path, "edge-list file")->required();
    rec->add_option("--family", family, "cograph|threshold|split")->required();

    CLI::App* con = app.add_subcommand("construct", "build a verified representation");
    con->add_option("graph", graph_path, "edge-list file")->required();
    con->add_option("--method", method, "forest|path|cycle|treewidth|pathwidth|box-chromatic|star|acyclic")->required();
    con->add_option("--family", family, "factor family (cycle method)");
    con->add_option("--decomposition", decomposition_path, "tree/path decomposition JSON witness");
    con->add_option("--boxes", boxes_path, "box representation JSON witness");
    con->add_option("--coloring", coloring_path, "coloring JSON witness");
    con->add_option("--root", root_bag, "root bag index (treewidth method)");
    con->add_option("--roots", roots, "per-component root vertices (forest method)");
    con->add_option("--exact-color-limit", exact_color_limit, "max n for deriving exact colorings");

    CLI::App* ver = app.add_subcommand("verify", "check a representation against a graph");
    ver->add_option("graph", graph_path, "edge-list file")->required();
    ver->add_option("representation", out_path, "representation JSON file")->required();

    CLI::App* dim = app.add_subcommand("dim", "exact intersection dimension up to a bound");
    dim->add_option("graph", graph_path, "edge-list file")->required();
    dim->add_option("--family", family, "cograph|threshold")->required();
    dim->add_option("--kmax", kmax, "largest factor count to try");
    dim->add_option("--node-limit", node_limit, "search node budget (0 = unlimited)");

    CLI::App* th2 = app.add_subcommand("th2", "decide threshold dimension <= 2 with a certificate");
    th2->add_option("graph", graph_path, "edge-list file")->required();

    CLI::App* bound = app.add_subcommand("bound", "witnessed upper-bound table");
    bound->add_option("graph", graph_path, "edge-list file")->required();
    bound->add_option("--boxes", boxes_path, "box representation JSON witness");
    bound->add_option("--exact-color-limit", exact_color_limit, "max n for exact colorings");

    CLI::App* aux = app.add_subcommand("aux", "export the edge-conflict auxiliary graph");
    aux->add_option("graph", graph_path, "edge-list file")->required();
    aux->add_flag("--complement", use_complement, "build the auxiliary graph of the complement");
    aux->add_option("--out", out_path, "edge-list output path (sidecar: <out>.map)");

    CLI::App* cnf = app.add_subcommand("cnf", "export the representability search as DIMACS CNF");
    cnf->add_option("graph", graph_path, "edge-list file")->required();
    cnf->add_option("--family", family, "cograph|threshold")->required();
    cnf->add_option("-k,--factors", k, "factor count");
    cnf->add_option("--out", out_path, "DIMACS output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return emit("error", json{{"error_kind", "usage"}, {"message", e.what()}});
    }

    try {
        if (gen->parsed()) return run_gen(family, gen_params, out_path);
        if (rec->parsed()) return run_recognize(graph_path, family);
        if (con->parsed())
            return run_construct(graph_path, method, family, decomposition_path, boxes_path,
                                 coloring_path, root_bag, roots, exact_color_limit);
        if (ver->parsed()) return run_verify(graph_path, out_path);
        if (dim->parsed()) return run_dim(graph_path, family, kmax, node_limit);
        if (th2->parsed()) return run_th2(graph_path);
        if (bound->parsed()) return run_bound(graph_path, boxes_path, exact_color_limit);
        if (aux->parsed()) return run_aux(graph_path, use_complement, out_path);
        if (cnf->parsed()) return run_cnf(graph_path, family, k, out_path);
    } catch (const WitnessError& e) {
        return emit("error", json{{"error_kind", e.kind()}, {"message", e.what()}, {"witness", e.witness()}});
    } catch (const Error& e) {
        return emit("error", json{{"error_kind", e.kind()}, {"message", e.what()}});
    } catch (const std::exception& e) {
        return emit("error", json{{"error_kind", "internal"}, {"message", e.what()}});
    }
    return 3;
}
