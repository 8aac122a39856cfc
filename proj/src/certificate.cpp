#include "cogdim/certificate.hpp"

#include <algorithm>

namespace cogdim {

std::string certificate_kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::None: return "none";
        case CertificateKind::InducedP4: return "induced-P4";
        case CertificateKind::InducedC4: return "induced-C4";
        case CertificateKind::Induced2K2: return "induced-2K2";
        case CertificateKind::InducedC5: return "induced-C5";
        case CertificateKind::OddCycle: return "odd-cycle";
        case CertificateKind::Bipartition: return "bipartition";
        case CertificateKind::Cotree: return "cotree";
        case CertificateKind::EliminationOrder: return "elimination-order";
        case CertificateKind::SplitPartition: return "split-partition";
    }
    return "none";
}

int Cotree::add_leaf(int vertex) {
    nodes.push_back(Node{Op::Leaf, vertex, {}});
    return static_cast<int>(nodes.size()) - 1;
}

int Cotree::add_internal(Op op, std::vector<int> children) {
    nodes.push_back(Node{op, -1, std::move(children)});
    return static_cast<int>(nodes.size()) - 1;
}

std::vector<int> Cotree::leaf_vertices(int node) const {
    std::vector<int> out;
    std::vector<int> stack{node};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        const Node& nd = nodes[id];
        if (nd.op == Op::Leaf)
            out.push_back(nd.vertex);
        else
            for (int c : nd.children) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph Cotree::evaluate(int n) const {
    Graph g(n);
    if (root < 0) return g;
    // post-order: a join node adds all pairs between the leaf sets of
    // distinct children; union nodes add nothing
    std::vector<int> order;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        order.push_back(id);
        for (int c : nodes[id].children) stack.push_back(c);
    }
    for (int id : order) {
        const Node& nd = nodes[id];
        if (nd.op != Op::Join) continue;
        std::vector<std::vector<int>> leafsets;
        for (int c : nd.children) leafsets.push_back(leaf_vertices(c));
        for (size_t i = 0; i < leafsets.size(); ++i)
            for (size_t j = i + 1; j < leafsets.size(); ++j)
                for (int u : leafsets[i])
                    for (int v : leafsets[j]) g.add_edge(u, v);
    }
    return g;
}

namespace {

bool distinct_in_range(const std::vector<int>& vs, int n) {
    std::vector<int> s = vs;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    return s.empty() || (s.front() >= 0 && s.back() < n);
}

// The pattern's required edges among the 4(+) vertices, everything else absent.
bool matches_exact_edges(const Graph& g, const std::vector<int>& vs,
                         const std::vector<std::pair<int, int>>& required) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            bool want = false;
            for (auto [a, b] : required)
                if ((a == static_cast<int>(i) && b == static_cast<int>(j)) ||
                    (a == static_cast<int>(j) && b == static_cast<int>(i)))
                    want = true;
            if (g.has_edge(vs[i], vs[j]) != want) return false;
        }
    return true;
}

}  // namespace

bool check_certificate(const Graph& g, const Certificate& cert) {
    const int n = g.vertex_count();
    switch (cert.kind) {
        case CertificateKind::None:
            return true;
        case CertificateKind::InducedP4:
            return cert.vertices.size() == 4 && distinct_in_range(cert.vertices, n) &&
                   matches_exact_edges(g, cert.vertices, {{0, 1}, {1, 2}, {2, 3}});
        case CertificateKind::InducedC4:
            return cert.vertices.size() == 4 && distinct_in_range(cert.vertices, n) &&
                   matches_exact_edges(g, cert.vertices, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        case CertificateKind::Induced2K2:
            return cert.vertices.size() == 4 && distinct_in_range(cert.vertices, n) &&
                   matches_exact_edges(g, cert.vertices, {{0, 1}, {2, 3}});
        case CertificateKind::InducedC5:
            return cert.vertices.size() == 5 && distinct_in_range(cert.vertices, n) &&
                   matches_exact_edges(g, cert.vertices, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        case CertificateKind::OddCycle: {
            const auto& c = cert.vertices;
            if (c.size() < 3 || c.size() % 2 == 0) return false;
            if (!distinct_in_range(c, n)) return false;
            for (size_t i = 0; i < c.size(); ++i)
                if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
            return true;
        }
        case CertificateKind::Bipartition: {
            std::vector<int> all = cert.side_a;
            all.insert(all.end(), cert.side_b.begin(), cert.side_b.end());
            if (static_cast<int>(all.size()) != n || !distinct_in_range(all, n)) return false;
            for (const auto* side : {&cert.side_a, &cert.side_b})
                for (size_t i = 0; i < side->size(); ++i)
                    for (size_t j = i + 1; j < side->size(); ++j)
                        if (g.has_edge((*side)[i], (*side)[j])) return false;
            return true;
        }
        case CertificateKind::SplitPartition: {
            std::vector<int> all = cert.side_a;
            all.insert(all.end(), cert.side_b.begin(), cert.side_b.end());
            if (static_cast<int>(all.size()) != n || !distinct_in_range(all, n)) return false;
            for (size_t i = 0; i < cert.side_a.size(); ++i)
                for (size_t j = i + 1; j < cert.side_a.size(); ++j)
                    if (!g.has_edge(cert.side_a[i], cert.side_a[j])) return false;
            for (size_t i = 0; i < cert.side_b.size(); ++i)
                for (size_t j = i + 1; j < cert.side_b.size(); ++j)
                    if (g.has_edge(cert.side_b[i], cert.side_b[j])) return false;
            return true;
        }
        case CertificateKind::EliminationOrder: {
            const auto& order = cert.vertices;
            if (static_cast<int>(order.size()) != n || !distinct_in_range(order, n)) return false;
            std::vector<char> removed(n, 0);
            int remaining = n;
            for (int v : order) {
                int deg = 0;
                for (int w : g.neighbors(v))
                    if (!removed[w]) ++deg;
                if (deg != 0 && deg != remaining - 1) return false;
                removed[v] = 1;
                --remaining;
            }
            return true;
        }
        case CertificateKind::Cotree: {
            if (cert.cotree.root < 0) return n == 0;
            std::vector<int> leaves = cert.cotree.leaf_vertices(cert.cotree.root);
            if (static_cast<int>(leaves.size()) != n || !distinct_in_range(leaves, n)) return false;
            return cert.cotree.evaluate(n) == g;
        }
    }
    return false;
}

}  // namespace cogdim
