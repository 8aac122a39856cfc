#include "cogdim/json_io.hpp"

namespace cogdim {

namespace {

json edges_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return edges;
}

Graph graph_from_edges(int n, const json& edges) {
    Graph g(n);
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) throw Error("malformed-json", "edge must be a [u,v] pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

json cotree_node_to_json(const Cotree& tree, int id) {
    const Cotree::Node& node = tree.nodes[id];
    if (node.op == Cotree::Op::Leaf) return json{{"vertex", node.vertex}};
    json children = json::array();
    for (int c : node.children) children.push_back(cotree_node_to_json(tree, c));
    return json{{"op", node.op == Cotree::Op::Union ? "union" : "join"}, {"children", children}};
}

}  // namespace

json graph_to_json(const Graph& g) {
    return json{{"n", g.vertex_count()}, {"edges", edges_to_json(g)}};
}

json representation_to_json(const Representation& rep) {
    json factors = json::array();
    for (const Graph& f : rep.factors) factors.push_back(json{{"edges", edges_to_json(f)}});
    return json{{"family", family_name(rep.family)}, {"n", rep.n}, {"factors", factors}};
}

Representation representation_from_json(const json& j) {
    Representation rep;
    try {
        rep.family = family_from_name(j.at("family").get<std::string>());
        rep.n = j.at("n").get<int>();
        for (const auto& f : j.at("factors")) rep.factors.push_back(graph_from_edges(rep.n, f.at("edges")));
    } catch (const json::exception& e) {
        throw Error("malformed-json", std::string("representation JSON: ") + e.what());
    }
    return rep;
}

json certificate_to_json(const Certificate& cert) {
    json out{{"kind", certificate_kind_name(cert.kind)}};
    switch (cert.kind) {
        case CertificateKind::None:
            break;
        case CertificateKind::Bipartition:
            out["sides"] = json::array({cert.side_a, cert.side_b});
            break;
        case CertificateKind::SplitPartition:
            out["clique"] = cert.side_a;
            out["independent"] = cert.side_b;
            break;
        case CertificateKind::Cotree:
            out["tree"] = cert.cotree.root >= 0 ? cotree_node_to_json(cert.cotree, cert.cotree.root) : json();
            break;
        default:
            out["vertices"] = cert.vertices;
            break;
    }
    return out;
}

json tree_decomposition_to_json(const TreeDecomposition& dec) {
    json skeleton = json::array();
    for (auto [x, y] : dec.skeleton_edges) skeleton.push_back(json::array({x, y}));
    return json{{"bags", dec.bags}, {"skeleton_edges", skeleton}};
}

TreeDecomposition tree_decomposition_from_json(const json& j) {
    TreeDecomposition dec;
    try {
        dec.bags = j.at("bags").get<std::vector<std::vector<int>>>();
        for (const auto& e : j.at("skeleton_edges")) dec.skeleton_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    } catch (const json::exception& e) {
        throw Error("malformed-json", std::string("tree decomposition JSON: ") + e.what());
    }
    return dec;
}

json path_decomposition_to_json(const PathDecomposition& dec) { return json{{"bags", dec.bags}}; }

PathDecomposition path_decomposition_from_json(const json& j) {
    PathDecomposition dec;
    try {
        dec.bags = j.at("bags").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw Error("malformed-json", std::string("path decomposition JSON: ") + e.what());
    }
    return dec;
}

json box_representation_to_json(const BoxRepresentation& rep) {
    json intervals = json::object();
    for (size_t v = 0; v < rep.intervals.size(); ++v) {
        json dims = json::array();
        for (const auto& [lo, hi] : rep.intervals[v])
            dims.push_back(json::array({rational_to_string(lo), rational_to_string(hi)}));
        intervals[std::to_string(v)] = dims;
    }
    return json{{"k", rep.k}, {"intervals", intervals}};
}

BoxRepresentation box_representation_from_json(const json& j) {
    BoxRepresentation rep;
    auto endpoint = [](const json& v) {
        if (v.is_number_integer()) return Rational::make(v.get<long long>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
        throw Error("malformed-json", "interval endpoint must be an integer or a \"p/q\" string");
    };
    try {
        rep.k = j.at("k").get<int>();
        const json& intervals = j.at("intervals");
        rep.intervals.resize(intervals.size());
        for (auto it = intervals.begin(); it != intervals.end(); ++it) {
            size_t v = std::stoul(it.key());
            if (v >= rep.intervals.size()) throw Error("malformed-json", "interval vertex key out of range");
            for (const auto& dim : it.value())
                rep.intervals[v].emplace_back(endpoint(dim.at(0)), endpoint(dim.at(1)));
        }
    } catch (const json::exception& e) {
        throw Error("malformed-json", std::string("box representation JSON: ") + e.what());
    }
    return rep;
}

json coloring_to_json(const Coloring& coloring) {
    return json{{"mode", color_mode_name(coloring.mode)}, {"colors", coloring.colors}};
}

Coloring coloring_from_json(const json& j) {
    Coloring coloring;
    try {
        coloring.mode = color_mode_from_name(j.at("mode").get<std::string>());
        coloring.colors = j.at("colors").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw Error("malformed-json", std::string("coloring JSON: ") + e.what());
    }
    return coloring;
}

json witness_check_to_json(const WitnessCheck& check) {
    json out{{"accepted", check.accepted}};
    if (!check.accepted) {
        out["clause"] = check.clause;
        if (check.vertex >= 0) out["vertex"] = check.vertex;
        if (check.pair.first >= 0) out["pair"] = json::array({check.pair.first, check.pair.second});
        if (!check.witness.empty()) out["witness"] = check.witness;
    }
    return out;
}

json auxiliary_graph_to_json(const AuxiliaryGraph& aux) {
    json sources = json::array();
    for (auto [u, v] : aux.source_edges) sources.push_back(json::array({u, v}));
    return json{{"graph", graph_to_json(aux.graph)}, {"source_edges", sources}};
}

}  // namespace cogdim
