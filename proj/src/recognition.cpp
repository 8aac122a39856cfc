#include "cogdim/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cogdim {

std::string family_name(RepFamily family) {
    return family == RepFamily::Cograph ? "cograph" : "threshold";
}

RepFamily family_from_name(const std::string& name) {
    if (name == "cograph") return RepFamily::Cograph;
    if (name == "threshold") return RepFamily::Threshold;
    throw Error("unknown-family", "unknown representation family \"" + name + "\"");
}

namespace {

// Components of g restricted to verts; adjacency complemented on demand.
std::vector<std::vector<int>> subset_components(const Graph& g, const std::vector<int>& verts,
                                                bool complemented) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(verts.size(), 0);
    for (size_t s = 0; s < verts.size(); ++s) {
        if (seen[s]) continue;
        std::vector<size_t> queue{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (size_t t = 0; t < verts.size(); ++t) {
                if (seen[t] || t == queue[qi]) continue;
                bool adj = g.has_edge(verts[queue[qi]], verts[t]);
                if (complemented) adj = !adj;
                if (adj) {
                    seen[t] = 1;
                    queue.push_back(t);
                }
            }
        std::sort(queue.begin(), queue.end());
        std::vector<int> comp;
        for (size_t idx : queue) comp.push_back(verts[idx]);
        comps.push_back(std::move(comp));
    }
    return comps;
}

// verts is connected and co-connected with >= 2 vertices, so it contains an
// induced P4; scan each edge as the middle edge.
Certificate find_p4_in_subset(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int b = verts[i], c = verts[j];
            if (!g.has_edge(b, c)) continue;
            for (int a : verts) {
                if (a == b || a == c || !g.has_edge(a, b) || g.has_edge(a, c)) continue;
                for (int d : verts) {
                    if (d == a || d == b || d == c) continue;
                    if (g.has_edge(d, c) && !g.has_edge(d, b) && !g.has_edge(a, d)) {
                        Certificate cert{CertificateKind::InducedP4, {a, b, c, d}, {}, {}, {}};
                        if (!check_certificate(g, cert))
                            throw std::logic_error("extracted P4 failed its own check");
                        return cert;
                    }
                }
            }
        }
    throw std::logic_error("connected, co-connected subset without a P4");
}

// Returns the cotree node id for verts, or -1 with p4 filled.
int decompose(const Graph& g, const std::vector<int>& verts, Cotree& tree, Certificate& p4) {
    if (verts.size() == 1) return tree.add_leaf(verts[0]);
    auto comps = subset_components(g, verts, false);
    if (comps.size() > 1) {
        std::vector<int> children;
        for (const auto& comp : comps) {
            int id = decompose(g, comp, tree, p4);
            if (id < 0) return -1;
            children.push_back(id);
        }
        return tree.add_internal(Cotree::Op::Union, std::move(children));
    }
    auto cocomps = subset_components(g, verts, true);
    if (cocomps.size() > 1) {
        std::vector<int> children;
        for (const auto& comp : cocomps) {
            int id = decompose(g, comp, tree, p4);
            if (id < 0) return -1;
            children.push_back(id);
        }
        return tree.add_internal(Cotree::Op::Join, std::move(children));
    }
    p4 = find_p4_in_subset(g, verts);
    return -1;
}

}  // namespace

RecognitionResult is_cograph(const Graph& g) {
    RecognitionResult result;
    Certificate cotree_cert;
    cotree_cert.kind = CertificateKind::Cotree;
    if (g.vertex_count() == 0) {
        result.member = true;
        result.certificate = cotree_cert;
        return result;
    }
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    Certificate p4;
    int root = decompose(g, all, cotree_cert.cotree, p4);
    if (root < 0) {
        result.member = false;
        result.certificate = p4;
        return result;
    }
    cotree_cert.cotree.root = root;
    if (!check_certificate(g, cotree_cert)) throw std::logic_error("cotree does not evaluate back to the input");
    result.member = true;
    result.certificate = cotree_cert;
    return result;
}

namespace {

// Classifies the four vertices of an alternating configuration
// (edges u-a and v-b, non-edges u-b and v-a) into P4 / C4 / 2K2.
Certificate classify_alternating(const Graph& g, int u, int a, int v, int b) {
    bool uv = g.has_edge(u, v), ab = g.has_edge(a, b);
    Certificate cert;
    if (!uv && !ab)
        cert = Certificate{CertificateKind::Induced2K2, {u, a, v, b}, {}, {}, {}};
    else if (uv && ab)
        cert = Certificate{CertificateKind::InducedC4, {a, u, v, b}, {}, {}, {}};
    else if (uv)
        cert = Certificate{CertificateKind::InducedP4, {a, u, v, b}, {}, {}, {}};
    else
        cert = Certificate{CertificateKind::InducedP4, {u, a, b, v}, {}, {}, {}};
    if (!check_certificate(g, cert)) throw std::logic_error("alternating-configuration witness failed its check");
    return cert;
}

}  // namespace

RecognitionResult is_threshold(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> removed(n, 0);
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> order;
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!removed[v] && (deg[v] == 0 || deg[v] == remaining - 1)) pick = v;
        if (pick < 0) break;
        removed[pick] = 1;
        --remaining;
        order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!removed[w]) --deg[w];
    }
    if (remaining == 0) {
        Certificate cert{CertificateKind::EliminationOrder, order, {}, {}, {}};
        if (!check_certificate(g, cert)) throw std::logic_error("elimination order failed its check");
        return RecognitionResult{true, cert};
    }
    // Stuck remainder: neighborhoods are not nested, so an alternating
    // configuration exists on four of its vertices.
    for (int u = 0; u < n; ++u) {
        if (removed[u]) continue;
        for (int v = u + 1; v < n; ++v) {
            if (removed[v]) continue;
            int a = -1, b = -1;
            for (int x = 0; x < n && a < 0; ++x)
                if (!removed[x] && x != v && g.has_edge(u, x) && !g.has_edge(v, x)) a = x;
            if (a < 0) continue;
            for (int x = 0; x < n && b < 0; ++x)
                if (!removed[x] && x != u && g.has_edge(v, x) && !g.has_edge(u, x)) b = x;
            if (b < 0) continue;
            return RecognitionResult{false, classify_alternating(g, u, a, v, b)};
        }
    }
    throw std::logic_error("stuck threshold elimination without an alternating configuration");
}

RecognitionResult is_split(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int x, int y) { return g.degree(x) > g.degree(y); });
    long long head = 0, tail = 0;
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(by_degree[i - 1]) >= i - 1) m = i;
    for (int i = 0; i < n; ++i)
        (i < m ? head : tail) += g.degree(by_degree[i]);
    if (n == 0 || head == static_cast<long long>(m) * (m - 1) + tail) {
        Certificate cert;
        cert.kind = CertificateKind::SplitPartition;
        cert.side_a.assign(by_degree.begin(), by_degree.begin() + m);
        cert.side_b.assign(by_degree.begin() + m, by_degree.end());
        std::sort(cert.side_a.begin(), cert.side_a.end());
        std::sort(cert.side_b.begin(), cert.side_b.end());
        if (!check_certificate(g, cert)) throw std::logic_error("split partition failed its check");
        return RecognitionResult{true, cert};
    }
    // Not split: locate an induced 2K2, C4 or C5.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int vs[4] = {a, b, c, d};
                    int edge_bits = 0, count = 0, degree[4] = {0, 0, 0, 0};
                    int bit = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j, ++bit)
                            if (g.has_edge(vs[i], vs[j])) {
                                edge_bits |= 1 << bit;
                                ++count;
                                ++degree[i];
                                ++degree[j];
                            }
                    if (count == 2 && degree[0] == 1 && degree[1] == 1 && degree[2] == 1 && degree[3] == 1) {
                        // two disjoint edges; list the one at vs[0] first
                        int mate0 = g.has_edge(a, b) ? b : (g.has_edge(a, c) ? c : d);
                        std::vector<int> rest;
                        for (int x : vs)
                            if (x != a && x != mate0) rest.push_back(x);
                        Certificate cert{CertificateKind::Induced2K2, {a, mate0, rest[0], rest[1]}, {}, {}, {}};
                        if (!check_certificate(g, cert)) throw std::logic_error("2K2 witness failed its check");
                        return RecognitionResult{false, cert};
                    }
                    if (count == 4 && degree[0] == 2 && degree[1] == 2 && degree[2] == 2 && degree[3] == 2) {
                        // 4-cycle: walk it from vs[0] through its smaller neighbor
                        int first = -1, last = -1;
                        for (int i = 1; i < 4; ++i)
                            if (g.has_edge(a, vs[i])) (first < 0 ? first : last) = vs[i];
                        int across = a;
                        for (int i = 1; i < 4; ++i)
                            if (vs[i] != first && vs[i] != last) across = vs[i];
                        Certificate cert{CertificateKind::InducedC4, {a, first, across, last}, {}, {}, {}};
                        if (!check_certificate(g, cert)) throw std::logic_error("C4 witness failed its check");
                        return RecognitionResult{false, cert};
                    }
                    if (count == 3) {
                        // induced P4? endpoints have degree 1
                        int ends[2], mids[2], ne = 0, nm = 0;
                        bool shape_ok = true;
                        for (int i = 0; i < 4; ++i) {
                            if (degree[i] == 1)
                                ends[std::min(ne++, 1)] = vs[i];
                            else if (degree[i] == 2)
                                mids[std::min(nm++, 1)] = vs[i];
                            else
                                shape_ok = false;
                        }
                        if (!shape_ok || ne != 2 || nm != 2) continue;
                        int p1 = std::min(ends[0], ends[1]);
                        int p4 = std::max(ends[0], ends[1]);
                        int p2 = g.has_edge(p1, mids[0]) ? mids[0] : mids[1];
                        int p3 = (p2 == mids[0]) ? mids[1] : mids[0];
                        // close the P4 into a C5 with a fifth vertex
                        for (int e = 0; e < n; ++e) {
                            if (e == p1 || e == p2 || e == p3 || e == p4) continue;
                            if (g.has_edge(e, p1) && g.has_edge(e, p4) && !g.has_edge(e, p2) &&
                                !g.has_edge(e, p3)) {
                                Certificate cert{CertificateKind::InducedC5, {p1, p2, p3, p4, e}, {}, {}, {}};
                                if (!check_certificate(g, cert)) throw std::logic_error("C5 witness failed its check");
                                return RecognitionResult{false, cert};
                            }
                        }
                    }
                }
    throw std::logic_error("non-split graph without a 2K2/C4/C5 witness");
}

RecognitionResult recognize(const Graph& g, RepFamily family) {
    return family == RepFamily::Cograph ? is_cograph(g) : is_threshold(g);
}

std::string verify_clause_name(VerifyClause clause) {
    switch (clause) {
        case VerifyClause::None: return "none";
        case VerifyClause::VertexCount: return "vertex-count";
        case VerifyClause::Supergraph: return "supergraph";
        case VerifyClause::Intersection: return "intersection";
        case VerifyClause::FamilyMembership: return "family-membership";
    }
    return "none";
}

VerifyResult verify_representation(const Graph& g, const Representation& rep) {
    if (rep.factors.empty()) throw Error("empty-representation", "representation must have at least one factor");
    VerifyResult result;
    for (size_t i = 0; i < rep.factors.size(); ++i)
        if (rep.factors[i].vertex_count() != g.vertex_count()) {
            result.failed = VerifyClause::VertexCount;
            result.factor_index = static_cast<int>(i);
            return result;
        }
    for (size_t i = 0; i < rep.factors.size(); ++i)
        for (auto [u, v] : g.edges())
            if (!rep.factors[i].has_edge(u, v)) {
                result.failed = VerifyClause::Supergraph;
                result.factor_index = static_cast<int>(i);
                result.offending_pair = {u, v};
                return result;
            }
    Graph meet = intersection_of(rep.factors);
    if (meet != g) {
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (meet.has_edge(u, v) != g.has_edge(u, v)) {
                    result.failed = VerifyClause::Intersection;
                    result.offending_pair = {u, v};
                    return result;
                }
    }
    for (size_t i = 0; i < rep.factors.size(); ++i) {
        RecognitionResult rec = recognize(rep.factors[i], rep.family);
        if (!rec.member) {
            result.failed = VerifyClause::FamilyMembership;
            result.factor_index = static_cast<int>(i);
            result.certificate = rec.certificate;
            return result;
        }
    }
    result.accepted = true;
    return result;
}

}  // namespace cogdim
