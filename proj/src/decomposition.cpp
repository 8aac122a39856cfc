#include "cogdim/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace cogdim {

namespace {

int width_of(const std::vector<std::vector<int>>& bags) {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

}  // namespace

int TreeDecomposition::width() const { return width_of(bags); }
int PathDecomposition::width() const { return width_of(bags); }

TreeDecomposition PathDecomposition::as_tree() const {
    TreeDecomposition t;
    t.bags = bags;
    for (size_t i = 0; i + 1 < bags.size(); ++i)
        t.skeleton_edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return t;
}

WitnessCheck validate_tree_decomposition(const Graph& g, const TreeDecomposition& dec) {
    const int n = g.vertex_count();
    const int b = static_cast<int>(dec.bags.size());
    WitnessCheck out;

    for (int i = 0; i < b; ++i) {
        std::vector<int> bag = dec.bags[i];
        std::sort(bag.begin(), bag.end());
        for (size_t j = 0; j < bag.size(); ++j) {
            if (bag[j] < 0 || bag[j] >= n) {
                out.clause = "bag-vertex-out-of-range";
                out.vertex = bag[j];
                return out;
            }
            if (j > 0 && bag[j] == bag[j - 1]) {
                out.clause = "duplicate-bag-vertex";
                out.vertex = bag[j];
                return out;
            }
        }
    }
    for (auto [x, y] : dec.skeleton_edges)
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) {
            out.clause = "skeleton-index-invalid";
            out.pair = {x, y};
            return out;
        }
    // skeleton must be a tree on the bag indices
    if (b > 0) {
        if (static_cast<int>(dec.skeleton_edges.size()) != b - 1) {
            out.clause = "skeleton-not-a-tree";
            return out;
        }
        std::vector<std::vector<int>> adj(b);
        for (auto [x, y] : dec.skeleton_edges) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        std::vector<char> seen(b, 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : adj[queue[qi]])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        if (static_cast<int>(queue.size()) != b) {
            out.clause = "skeleton-not-a-tree";
            return out;
        }
    }

    std::vector<std::vector<int>> bags_of(n);
    for (int i = 0; i < b; ++i)
        for (int v : dec.bags[i]) bags_of[v].push_back(i);
    for (int v = 0; v < n; ++v)
        if (bags_of[v].empty()) {
            out.clause = "vertex-not-in-any-bag";
            out.vertex = v;
            return out;
        }

    // connectivity of each vertex's bag set within the skeleton
    if (b > 0) {
        std::vector<std::vector<int>> adj(b);
        for (auto [x, y] : dec.skeleton_edges) {
            adj[x].push_back(y);
            adj[y].push_back(x);
        }
        std::vector<char> in_set(b, 0), seen(b, 0);
        for (int v = 0; v < n; ++v) {
            for (int i : bags_of[v]) in_set[i] = 1;
            std::vector<int> queue{bags_of[v][0]};
            seen[queue[0]] = 1;
            size_t reached = 1;
            for (size_t qi = 0; qi < queue.size(); ++qi)
                for (int w : adj[queue[qi]])
                    if (in_set[w] && !seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        queue.push_back(w);
                    }
            bool connected = reached == bags_of[v].size();
            for (int i : bags_of[v]) in_set[i] = 0;
            for (int i : queue) seen[i] = 0;
            if (!connected) {
                out.clause = "vertex-bags-disconnected";
                out.vertex = v;
                return out;
            }
        }
    }

    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : bags_of[u]) {
            for (int x : dec.bags[i])
                if (x == v) {
                    covered = true;
                    break;
                }
            if (covered) break;
        }
        if (!covered) {
            out.clause = "edge-not-covered";
            out.pair = {u, v};
            return out;
        }
    }

    out.accepted = true;
    return out;
}

WitnessCheck validate_path_decomposition(const Graph& g, const PathDecomposition& dec) {
    return validate_tree_decomposition(g, dec.as_tree());
}

TreeDecomposition heuristic_tree_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    TreeDecomposition dec;
    if (n == 0) return dec;

    // fill graph as adjacency sets
    std::vector<std::vector<char>> fill(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);
    for (auto [u, v] : g.edges()) {
        fill[u][v] = fill[v][u] = 1;
        ++deg[u];
        ++deg[v];
    }
    std::vector<char> removed(n, 0);
    std::vector<int> elim_step(n, -1);
    std::vector<int> elim_vertex(n, -1);
    dec.bags.resize(n);

    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        std::vector<int> nbrs;
        for (int w = 0; w < n; ++w)
            if (!removed[w] && w != pick && fill[pick][w]) nbrs.push_back(w);
        dec.bags[step].push_back(pick);
        dec.bags[step].insert(dec.bags[step].end(), nbrs.begin(), nbrs.end());
        std::sort(dec.bags[step].begin(), dec.bags[step].end());
        elim_step[pick] = step;
        elim_vertex[step] = pick;
        removed[pick] = 1;
        for (int w : nbrs) --deg[w];
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j)
                if (!fill[nbrs[i]][nbrs[j]]) {
                    fill[nbrs[i]][nbrs[j]] = fill[nbrs[j]][nbrs[i]] = 1;
                    ++deg[nbrs[i]];
                    ++deg[nbrs[j]];
                }
    }

    // bag of step i attaches to the bag of the earliest-eliminated other
    // member; singleton bags chain to the next bag
    for (int i = 0; i + 1 < n; ++i) {
        int earliest = -1;
        for (int v : dec.bags[i])
            if (v != elim_vertex[i] && (earliest < 0 || elim_step[v] < earliest)) earliest = elim_step[v];
        int parent = earliest >= 0 ? earliest : i + 1;
        dec.skeleton_edges.emplace_back(i, parent);
    }
    return dec;
}

PathDecomposition sweep_path_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    PathDecomposition dec;
    std::vector<int> last_neighbor(n, -1);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) last_neighbor[v] = std::max(last_neighbor[v], w);
    for (int i = 0; i < n; ++i) {
        std::vector<int> bag;
        for (int u = 0; u < i; ++u)
            if (last_neighbor[u] >= i) bag.push_back(u);
        bag.push_back(i);
        dec.bags.push_back(std::move(bag));
    }
    return dec;
}

}  // namespace cogdim
