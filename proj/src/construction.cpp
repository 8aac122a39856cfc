#include "cogdim/construction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cogdim {

int alpha(int x) {
    if (x < 1) throw Error("bad-argument", "alpha is defined on positive integers");
    return x % 2 == 1 ? x : x - 1;
}

MatchingSchedule matching_schedule(int k) {
    if (k < 1) throw Error("bad-argument", "matching schedule needs at least one part");
    MatchingSchedule sched;
    sched.parts = k;
    int kk = k % 2 == 0 ? k : k + 1;  // dummy part = kk-1 when k is odd
    for (int r = 0; r < kk - 1; ++r) {
        std::vector<std::pair<int, int>> round;
        auto push = [&](int a, int b) {
            if (a >= k || b >= k) return;  // dummy: partner sits out this round
            round.emplace_back(std::min(a, b), std::max(a, b));
        };
        push(kk - 1, r);
        for (int i = 1; i <= kk / 2 - 1; ++i)
            push((r + i) % (kk - 1), (r - i + kk - 1) % (kk - 1));
        std::sort(round.begin(), round.end());
        sched.rounds.push_back(std::move(round));
    }
    return sched;
}

namespace {

struct RootedForest {
    std::vector<int> parent;   // parent of each vertex; root's parent = itself
    std::vector<int> depth;
    std::vector<int> tin, tout;  // subtree intervals
};

// Roots every component (chosen root or lowest index) and computes depths and
// subtree intervals.
RootedForest root_forest(const Graph& g, const std::vector<int>& roots) {
    const int n = g.vertex_count();
    RootedForest rf;
    rf.parent.assign(n, -1);
    rf.depth.assign(n, -1);
    rf.tin.assign(n, -1);
    rf.tout.assign(n, -1);

    std::vector<int> root_of_component(n, -1);
    auto comps = connected_components(g);
    std::vector<int> comp_of(n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<int> chosen(comps.size(), -1);
    for (int r : roots) {
        if (r < 0 || r >= n) throw Error("bad-root", "root vertex out of range");
        if (chosen[comp_of[r]] >= 0) throw Error("bad-root", "two roots in the same component");
        chosen[comp_of[r]] = r;
    }
    int timer = 0;
    for (size_t c = 0; c < comps.size(); ++c) {
        int root = chosen[c] >= 0 ? chosen[c] : comps[c].front();
        rf.parent[root] = root;
        rf.depth[root] = 0;
        // iterative DFS, children in ascending order
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            if (rf.tin[u] < 0) {
                rf.tin[u] = timer++;
                auto nbrs = g.neighbors(u);
                for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it)
                    if (*it != rf.parent[u]) {
                        rf.parent[*it] = u;
                        rf.depth[*it] = rf.depth[u] + 1;
                        stack.push_back(*it);
                    }
            } else {
                rf.tout[u] = timer;
                stack.pop_back();
            }
        }
    }
    return rf;
}

}  // namespace

Representation forest_two_cographs(const Graph& forest, const std::vector<int>& roots) {
    std::vector<int> cycle = find_cycle(forest);
    if (!cycle.empty()) throw WitnessError("not-a-forest", "input contains a cycle", cycle);
    const int n = forest.vertex_count();
    RootedForest rf = root_forest(forest, roots);

    Graph odd_factor(n), even_factor(n);
    for (auto [u, v] : forest.edges()) {
        odd_factor.add_edge(u, v);
        even_factor.add_edge(u, v);
    }
    auto in_subtree = [&](int anc, int v) { return rf.tin[anc] <= rf.tin[v] && rf.tin[v] < rf.tout[anc]; };
    for (int u = 0; u < n; ++u) {
        Graph& target = rf.depth[u] % 2 == 1 ? odd_factor : even_factor;
        int top = rf.parent[u];
        for (int v = 0; v < n; ++v)
            if (v != u && in_subtree(top, v)) target.add_edge(u, v);
    }
    return Representation{RepFamily::Cograph, n, {std::move(odd_factor), std::move(even_factor)}};
}

Representation path_two_thresholds(const Graph& paths) {
    const int n = paths.vertex_count();
    std::vector<int> cycle = find_cycle(paths);
    if (!cycle.empty()) throw WitnessError("not-a-path-forest", "input contains a cycle", cycle);
    for (int v = 0; v < n; ++v)
        if (paths.degree(v) > 2)
            throw Error("not-a-path-forest", "vertex " + std::to_string(v) + " has degree above 2");
    auto comps = connected_components(paths);
    int components_with_edges = 0;
    std::vector<int> roots;
    for (const auto& comp : comps) {
        bool has_edge = false;
        int endpoint = -1;
        for (int v : comp) {
            if (paths.degree(v) > 0) has_edge = true;
            if (endpoint < 0 && paths.degree(v) <= 1) endpoint = v;
        }
        if (has_edge) ++components_with_edges;
        roots.push_back(endpoint);
    }
    if (components_with_edges > 1)
        throw Error("multiple-nontrivial-paths",
                    "two path components with edges make an induced 2K2 unavoidable in a factor; "
                    "supply a single path (isolated vertices are fine)");
    Representation rep = forest_two_cographs(paths, roots);
    rep.family = RepFamily::Threshold;
    return rep;
}

std::vector<int> cycle_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !is_connected(g))
        throw Error("not-a-cycle", "graph is not a cycle");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) throw Error("not-a-cycle", "graph is not a cycle");
    std::vector<int> order{0};
    int prev = 0, cur = g.neighbors(0)[0];
    while (cur != 0) {
        order.push_back(cur);
        auto nbrs = g.neighbors(cur);
        int next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    return order;
}

namespace {

Graph with_universal_vertex(const Graph& g, int extra_n, int v) {
    Graph out(extra_n);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int u = 0; u < extra_n; ++u)
        if (u != v) out.add_edge(u, v);
    return out;
}

// Three threshold factors for C_n, n >= 5: the two path factors of C-v with
// v made universal, plus C with a clique on the remaining vertices.
std::vector<Graph> cycle_three_factors(int n) {
    int v = n - 1;
    Representation path_rep = path_two_thresholds(path_graph(n - 1));
    std::vector<Graph> factors;
    for (const Graph& f : path_rep.factors) factors.push_back(with_universal_vertex(f, n, v));
    Graph g3(n);
    for (int a = 0; a < n - 1; ++a)
        for (int b = a + 1; b < n - 1; ++b) g3.add_edge(a, b);
    g3.add_edge(n - 2, v);
    g3.add_edge(0, v);
    factors.push_back(std::move(g3));
    return factors;
}

Graph cycle_plus_chords(int n, const std::vector<std::pair<int, int>>& chords) {
    Graph g = cycle_graph(n);
    for (auto [a, b] : chords) g.add_edge(a, b);
    return g;
}

}  // namespace

Representation cycle_representation(int n, RepFamily family) {
    if (n < 3) throw Error("bad-size", "cycle needs at least 3 vertices");
    Representation rep;
    rep.family = family;
    rep.n = n;
    if (family == RepFamily::Cograph) {
        if (n == 3 || n == 4) {
            rep.factors = {cycle_graph(n)};
        } else if (n == 5) {
            rep.factors = {cycle_plus_chords(5, {{0, 3}, {1, 4}}), cycle_plus_chords(5, {{0, 2}, {1, 3}})};
        } else if (n == 6) {
            rep.factors = {cycle_plus_chords(6, {{0, 2}, {1, 3}, {2, 4}, {3, 5}, {0, 4}, {1, 5}}),
                           cycle_plus_chords(6, {{0, 3}, {1, 4}, {2, 5}})};
        } else {
            rep.factors = cycle_three_factors(n);
        }
    } else {
        if (n == 3) {
            rep.factors = {cycle_graph(3)};
        } else if (n == 4) {
            rep.factors = {cycle_plus_chords(4, {{0, 2}}), cycle_plus_chords(4, {{1, 3}})};
        } else {
            rep.factors = cycle_three_factors(n);
        }
    }
    return rep;
}

namespace {

// Shared machinery of the tree/path constructions. Returns the k+1 factors
// [comparability graph, one factor per color class 0..k-1], k = width+1.
std::vector<Graph> decomposition_factors(const Graph& g, const TreeDecomposition& dec, int root_bag) {
    const int n = g.vertex_count();
    const int bag_count = static_cast<int>(dec.bags.size());
    const int k = dec.width() + 1;
    if (root_bag < 0 || root_bag >= std::max(bag_count, 1))
        throw Error("bad-root", "root bag index out of range");

    // chordal completion: all pairs sharing a bag
    Graph completion(n);
    for (auto [u, v] : g.edges()) completion.add_edge(u, v);
    for (const auto& bag : dec.bags)
        for (size_t i = 0; i < bag.size(); ++i)
            for (size_t j = i + 1; j < bag.size(); ++j) completion.add_edge(bag[i], bag[j]);

    // maximum cardinality search order; greedy coloring along it stays within
    // k colors because each vertex's earlier neighbors form a clique
    std::vector<int> weight(n, 0), color(n, -1);
    std::vector<char> visited(n, 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
        visited[pick] = 1;
        std::vector<char> used(k + 1, 0);
        for (int w : completion.neighbors(pick)) {
            if (!visited[w])
                ++weight[w];
            else if (color[w] <= k)
                used[color[w]] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        if (c >= k) throw std::logic_error("chordal completion needed more colors than width+1");
        color[pick] = c;
    }

    // root the skeleton, then h(u) = root-most bag containing u
    std::vector<std::vector<int>> adj(bag_count);
    for (auto [x, y] : dec.skeleton_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<int> bag_tin(bag_count, -1), bag_tout(bag_count, -1), bag_parent(bag_count, -1);
    if (bag_count > 0) {
        int timer = 0;
        std::vector<int> stack{root_bag};
        bag_parent[root_bag] = root_bag;
        while (!stack.empty()) {
            int x = stack.back();
            if (bag_tin[x] < 0) {
                bag_tin[x] = timer++;
                std::vector<int> kids = adj[x];
                std::sort(kids.begin(), kids.end());
                for (auto it = kids.rbegin(); it != kids.rend(); ++it)
                    if (*it != bag_parent[x]) {
                        bag_parent[*it] = x;
                        stack.push_back(*it);
                    }
            } else {
                bag_tout[x] = timer;
                stack.pop_back();
            }
        }
    }
    std::vector<int> h(n, -1);
    for (int i = 0; i < bag_count; ++i)
        for (int v : dec.bags[i])
            if (h[v] < 0 || bag_tin[i] < bag_tin[h[v]]) h[v] = i;

    auto bag_ancestor = [&](int x, int y) {  // x is an ancestor of y (possibly equal)
        return bag_tin[x] <= bag_tin[y] && bag_tout[y] <= bag_tout[x];
    };
    // relation value for an unordered pair: 1 = uRv, -1 = vRu, 0 = incomparable
    auto relation = [&](int u, int v) {
        if (h[u] == h[v]) return u < v ? 1 : -1;
        if (bag_ancestor(h[u], h[v])) return 1;
        if (bag_ancestor(h[v], h[u])) return -1;
        return 0;
    };

    std::vector<Graph> factors;
    Graph comparability(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (relation(u, v) != 0) comparability.add_edge(u, v);
    factors.push_back(std::move(comparability));
    for (int i = 0; i < k; ++i) {
        Graph factor(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int rel = relation(u, v);
                bool edge = g.has_edge(u, v) || rel == 0 ||
                            (rel == 1 && color[u] != i) || (rel == -1 && color[v] != i);
                if (edge) factor.add_edge(u, v);
            }
        factors.push_back(std::move(factor));
    }
    return factors;
}

}  // namespace

Representation treewidth_construction(const Graph& g, const TreeDecomposition& dec, int root_bag) {
    WitnessCheck check = validate_tree_decomposition(g, dec);
    if (!check.accepted) throw Error("invalid-decomposition", "tree decomposition rejected: " + check.clause);
    Representation rep;
    rep.family = RepFamily::Cograph;
    rep.n = g.vertex_count();
    rep.factors = decomposition_factors(g, dec, root_bag);
    return rep;
}

Representation pathwidth_construction(const Graph& g, const PathDecomposition& dec) {
    WitnessCheck check = validate_path_decomposition(g, dec);
    if (!check.accepted) throw Error("invalid-decomposition", "path decomposition rejected: " + check.clause);
    // rooting at the first bag (a path endpoint) makes the order total, so
    // the comparability factor is complete and dropped
    std::vector<Graph> factors = decomposition_factors(g, dec.as_tree(), 0);
    Representation rep;
    rep.family = RepFamily::Threshold;
    rep.n = g.vertex_count();
    rep.factors.assign(factors.begin() + 1, factors.end());
    return rep;
}

Representation box_chromatic_construction(const Graph& g, const BoxRepresentation& boxes,
                                          const Coloring& coloring) {
    WitnessCheck bcheck = validate_box_representation(g, boxes);
    if (!bcheck.accepted) throw Error("invalid-witness", "box representation rejected: " + bcheck.clause);
    Coloring proper{ColorMode::Proper, coloring.colors};
    WitnessCheck ccheck = validate_coloring(g, proper);
    if (!ccheck.accepted) throw Error("invalid-witness", "coloring rejected: " + ccheck.clause);

    const int n = g.vertex_count();
    // compact to the used colors
    std::vector<int> palette = coloring.colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<int> c(n);
    for (int v = 0; v < n; ++v)
        c[v] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), coloring.colors[v]) -
                                palette.begin());
    const int chi = static_cast<int>(palette.size());

    Representation rep;
    rep.family = RepFamily::Threshold;
    rep.n = n;
    for (int i = 0; i < chi; ++i)
        for (int j = 0; j < boxes.k; ++j) {
            Graph factor(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bool edge;
                    if (c[u] != i && c[v] != i)
                        edge = true;
                    else if (c[u] == i && c[v] == i)
                        edge = false;
                    else {
                        int colored = c[u] == i ? u : v;  // the color-i endpoint
                        int other = c[u] == i ? v : u;
                        edge = boxes.intervals[colored][j].second >= boxes.intervals[other][j].first;
                    }
                    if (edge) factor.add_edge(u, v);
                }
            rep.factors.push_back(std::move(factor));
        }
    return rep;
}

Representation partition_composition(const Graph& g, const std::vector<std::vector<int>>& parts,
                                     const std::map<std::pair<int, int>, Representation>& pair_reps,
                                     const std::vector<Representation>& single_reps, int t) {
    const int n = g.vertex_count();
    const int k = static_cast<int>(parts.size());
    if (k < 1) throw Error("bad-partition", "partition needs at least one part");
    {
        std::vector<char> seen(n, 0);
        int covered = 0;
        for (const auto& part : parts) {
            if (part.empty()) throw Error("bad-partition", "empty part");
            for (int v : part) {
                if (v < 0 || v >= n || seen[v]) throw Error("bad-partition", "parts must partition the vertex set");
                seen[v] = 1;
                ++covered;
            }
        }
        if (covered != n) throw Error("bad-partition", "parts must cover every vertex");
    }
    if (static_cast<int>(single_reps.size()) != k)
        throw Error("bad-piece", "need one representation per single part");

    auto sorted_union = [&](int i, int j) {
        std::vector<int> s = parts[i];
        s.insert(s.end(), parts[j].begin(), parts[j].end());
        std::sort(s.begin(), s.end());
        return s;
    };
    // every provided piece representation must verify against its induced subgraph
    int max_t = 1;
    for (int i = 0; i < k; ++i) {
        VerifyResult vr = verify_representation(induced_subgraph(g, parts[i]), single_reps[i]);
        if (!vr.accepted || single_reps[i].family != RepFamily::Cograph)
            throw Error("bad-piece", "single-part representation " + std::to_string(i) + " does not verify");
        max_t = std::max(max_t, static_cast<int>(single_reps[i].factors.size()));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto it = pair_reps.find({i, j});
            if (it == pair_reps.end()) throw Error("bad-piece", "missing pair representation");
            VerifyResult vr = verify_representation(induced_subgraph(g, sorted_union(i, j)), it->second);
            if (!vr.accepted || it->second.family != RepFamily::Cograph)
                throw Error("bad-piece", "pair representation does not verify");
            max_t = std::max(max_t, static_cast<int>(it->second.factors.size()));
        }
    if (t == 0) t = max_t;
    if (t < max_t) throw Error("bad-piece", "a piece representation has more than t factors");

    MatchingSchedule sched = matching_schedule(k);
    Representation rep;
    rep.family = RepFamily::Cograph;
    rep.n = n;
    for (const auto& round : sched.rounds) {
        std::vector<char> matched(k, 0);
        // pieces of this round: matched pairs then unmatched parts, each as
        // (sorted vertex set, piece representation)
        std::vector<std::pair<std::vector<int>, const Representation*>> pieces;
        for (auto [i, j] : round) {
            matched[i] = matched[j] = 1;
            pieces.emplace_back(sorted_union(i, j), &pair_reps.at({i, j}));
        }
        for (int i = 0; i < k; ++i)
            if (!matched[i]) {
                std::vector<int> s = parts[i];
                std::sort(s.begin(), s.end());
                pieces.emplace_back(std::move(s), &single_reps[i]);
            }
        for (int slot = 0; slot < t; ++slot) {
            // join of the slot factors: complete graph minus each piece's
            // internal non-edges (missing slots are complete supergraphs)
            Graph factor = Graph::complete(n);
            for (const auto& [verts, piece] : pieces) {
                if (slot >= static_cast<int>(piece->factors.size())) continue;
                const Graph& pf = piece->factors[slot];
                for (size_t a = 0; a < verts.size(); ++a)
                    for (size_t b = a + 1; b < verts.size(); ++b)
                        if (!pf.has_edge(static_cast<int>(a), static_cast<int>(b)))
                            factor.remove_edge(verts[a], verts[b]);
            }
            rep.factors.push_back(std::move(factor));
        }
    }
    return rep;
}

namespace {

std::vector<std::vector<int>> color_classes(const Coloring& coloring) {
    std::vector<int> palette = coloring.colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<std::vector<int>> classes(palette.size());
    for (size_t v = 0; v < coloring.colors.size(); ++v) {
        size_t idx = std::lower_bound(palette.begin(), palette.end(), coloring.colors[v]) - palette.begin();
        classes[idx].push_back(static_cast<int>(v));
    }
    return classes;
}

}  // namespace

Representation star_coloring_construction(const Graph& g, const Coloring& coloring) {
    Coloring star{ColorMode::Star, coloring.colors};
    WitnessCheck check = validate_coloring(g, star);
    if (!check.accepted) throw Error("invalid-witness", "star coloring rejected: " + check.clause);
    auto parts = color_classes(coloring);
    const int k = static_cast<int>(parts.size());
    std::map<std::pair<int, int>, Representation> pair_reps;
    std::vector<Representation> single_reps;
    for (int i = 0; i < k; ++i) {
        Graph piece = induced_subgraph(g, parts[i]);
        single_reps.push_back(Representation{RepFamily::Cograph, piece.vertex_count(), {piece}});
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> s = parts[i];
            s.insert(s.end(), parts[j].begin(), parts[j].end());
            Graph piece = induced_subgraph(g, s);  // a star forest, itself a cograph
            pair_reps[{i, j}] = Representation{RepFamily::Cograph, piece.vertex_count(), {piece}};
        }
    return partition_composition(g, parts, pair_reps, single_reps, 1);
}

Representation acyclic_coloring_construction(const Graph& g, const Coloring& coloring) {
    Coloring acyclic{ColorMode::Acyclic, coloring.colors};
    WitnessCheck check = validate_coloring(g, acyclic);
    if (!check.accepted) throw Error("invalid-witness", "acyclic coloring rejected: " + check.clause);
    auto parts = color_classes(coloring);
    const int k = static_cast<int>(parts.size());
    std::map<std::pair<int, int>, Representation> pair_reps;
    std::vector<Representation> single_reps;
    for (int i = 0; i < k; ++i) {
        Graph piece = induced_subgraph(g, parts[i]);
        single_reps.push_back(Representation{RepFamily::Cograph, piece.vertex_count(), {piece}});
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<int> s = parts[i];
            s.insert(s.end(), parts[j].begin(), parts[j].end());
            Representation rep = forest_two_cographs(induced_subgraph(g, s));  // pieces are forests
            pair_reps[{i, j}] = std::move(rep);
        }
    return partition_composition(g, parts, pair_reps, single_reps, 2);
}

}  // namespace cogdim
