#include "cogdim/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cogdim {

std::string color_mode_name(ColorMode mode) {
    switch (mode) {
        case ColorMode::Proper: return "proper";
        case ColorMode::Acyclic: return "acyclic";
        case ColorMode::Star: return "star";
    }
    return "proper";
}

ColorMode color_mode_from_name(const std::string& name) {
    if (name == "proper") return ColorMode::Proper;
    if (name == "acyclic") return ColorMode::Acyclic;
    if (name == "star") return ColorMode::Star;
    throw Error("unknown-color-mode", "unknown coloring mode \"" + name + "\"");
}

int Coloring::used_color_count() const {
    std::vector<int> palette = colors;
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    return static_cast<int>(palette.size());
}

WitnessCheck validate_coloring(const Graph& g, const Coloring& coloring) {
    const int n = g.vertex_count();
    if (static_cast<int>(coloring.colors.size()) != n)
        throw Error("coloring-size-mismatch", "coloring must assign a color to every vertex");
    for (int c : coloring.colors)
        if (c < 0) throw Error("color-out-of-range", "negative color index");
    const auto& c = coloring.colors;
    WitnessCheck out;

    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) {
            out.clause = "monochromatic-edge";
            out.pair = {u, v};
            return out;
        }
    if (coloring.mode == ColorMode::Proper) {
        out.accepted = true;
        return out;
    }

    if (coloring.mode == ColorMode::Acyclic) {
        std::vector<int> palette = c;
        std::sort(palette.begin(), palette.end());
        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
        for (size_t i = 0; i < palette.size(); ++i)
            for (size_t j = i + 1; j < palette.size(); ++j) {
                std::vector<int> verts;
                for (int v = 0; v < n; ++v)
                    if (c[v] == palette[i] || c[v] == palette[j]) verts.push_back(v);
                std::vector<int> cycle = find_cycle(induced_subgraph(g, verts));
                if (!cycle.empty()) {
                    out.clause = "bicolored-cycle";
                    for (int local : cycle) out.witness.push_back(verts[local]);
                    return out;
                }
            }
        out.accepted = true;
        return out;
    }

    // star: no path on 4 vertices using only two colors
    for (auto [b, x] : g.edges())
        for (int dir = 0; dir < 2; ++dir) {
            int mid1 = dir == 0 ? b : x;
            int mid2 = dir == 0 ? x : b;
            for (int a : g.neighbors(mid1)) {
                if (a == mid2 || c[a] != c[mid2]) continue;
                for (int d : g.neighbors(mid2)) {
                    if (d == mid1 || d == a || c[d] != c[mid1]) continue;
                    out.clause = "bicolored-P4";
                    out.witness = {a, mid1, mid2, d};
                    return out;
                }
            }
        }
    out.accepted = true;
    return out;
}

namespace {

std::vector<int> descending_degree_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

}  // namespace

Coloring greedy_proper_coloring(const Graph& g) {
    const int n = g.vertex_count();
    Coloring coloring;
    coloring.mode = ColorMode::Proper;
    coloring.colors.assign(n, -1);
    for (int v : descending_degree_order(g)) {
        std::vector<char> used(n + 1, 0);
        for (int w : g.neighbors(v))
            if (coloring.colors[w] >= 0) used[coloring.colors[w]] = 1;
        int c = 0;
        while (used[c]) ++c;
        coloring.colors[v] = c;
    }
    return coloring;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, ColorMode mode, int k, unsigned long long node_limit)
        : g_(g), mode_(mode), k_(k), node_limit_(node_limit), n_(g.vertex_count()) {
        order_ = descending_degree_order(g);
        colors_.assign(n_, -1);
    }

    ExactColoringResult run() {
        ExactColoringResult result;
        if (dfs(0, -1)) {
            result.status = ExactColoringResult::Status::Sat;
            result.coloring = Coloring{mode_, colors_};
            WitnessCheck check = validate_coloring(g_, result.coloring);
            if (!check.accepted) throw std::logic_error("exact coloring failed its own validator");
        } else if (limit_hit_) {
            result.status = ExactColoringResult::Status::Undecided;
        } else {
            result.status = ExactColoringResult::Status::Unsat;
        }
        result.nodes = nodes_;
        return result;
    }

private:
    bool proper_ok(int v, int c) const {
        for (int w : g_.neighbors(v))
            if (colors_[w] == c) return false;
        return true;
    }

    // Would coloring v with c close a bicolored cycle? Two of v's neighbors
    // of some color c2 must already be connected within the {c,c2}-colored
    // subgraph that excludes v.
    bool acyclic_ok(int v, int c) const {
        for (int c2 = 0; c2 < k_; ++c2) {
            if (c2 == c) continue;
            std::vector<int> anchors;
            for (int w : g_.neighbors(v))
                if (colors_[w] == c2) anchors.push_back(w);
            if (anchors.size() < 2) continue;
            std::vector<int> comp(n_, -1);
            int components = 0;
            for (int s : anchors) {
                if (comp[s] >= 0) continue;
                comp[s] = components;
                std::vector<int> queue{s};
                for (size_t qi = 0; qi < queue.size(); ++qi)
                    for (int w : g_.neighbors(queue[qi])) {
                        if (w == v || comp[w] >= 0) continue;
                        if (colors_[w] != c && colors_[w] != c2) continue;
                        comp[w] = components;
                        queue.push_back(w);
                    }
                ++components;
            }
            std::vector<char> seen(components, 0);
            for (int a : anchors) {
                if (seen[comp[a]]) return false;
                seen[comp[a]] = 1;
            }
        }
        return true;
    }

    // Would coloring v with c create a bicolored path on 4 vertices through v?
    bool star_ok(int v, int c) const {
        // v as an endpoint: v-b-x-d with colors (c, cb, c, cb)
        for (int b : g_.neighbors(v)) {
            if (colors_[b] < 0) continue;
            for (int x : g_.neighbors(b)) {
                if (x == v || colors_[x] != c) continue;
                for (int d : g_.neighbors(x))
                    if (d != b && d != v && colors_[d] == colors_[b]) return false;
            }
        }
        // v in second position: a-v-x-d with colors (cx, c, cx, c)
        for (int x : g_.neighbors(v)) {
            if (colors_[x] < 0) continue;
            for (int a : g_.neighbors(v)) {
                if (a == x || colors_[a] != colors_[x]) continue;
                for (int d : g_.neighbors(x))
                    if (d != v && d != a && colors_[d] == c) return false;
            }
        }
        return true;
    }

    bool dfs(int pos, int max_used) {
        if (pos == n_) return true;
        int v = order_[pos];
        int limit = std::min(max_used + 1, k_ - 1);
        for (int c = 0; c <= limit; ++c) {
            ++nodes_;
            if (node_limit_ && nodes_ > node_limit_) {
                limit_hit_ = true;
                return false;
            }
            if (!proper_ok(v, c)) continue;
            if (mode_ == ColorMode::Acyclic && !acyclic_ok(v, c)) continue;
            if (mode_ == ColorMode::Star && !star_ok(v, c)) continue;
            colors_[v] = c;
            if (dfs(pos + 1, std::max(max_used, c))) return true;
            colors_[v] = -1;
            if (limit_hit_) return false;
        }
        return false;
    }

    const Graph& g_;
    ColorMode mode_;
    int k_;
    unsigned long long node_limit_;
    int n_;
    std::vector<int> order_, colors_;
    unsigned long long nodes_ = 0;
    bool limit_hit_ = false;
};

}  // namespace

ExactColoringResult exact_coloring(const Graph& g, ColorMode mode, int k,
                                   unsigned long long node_limit) {
    if (k < 1) throw Error("bad-argument", "exact coloring needs k >= 1");
    return ColoringSearch(g, mode, k, node_limit).run();
}

}  // namespace cogdim
