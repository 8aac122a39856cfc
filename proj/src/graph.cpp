#include "cogdim/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace cogdim {

Graph::Graph(int n) {
    if (n < 0) throw Error("bad-size", "vertex count must be nonnegative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n) * words_, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error("self-loop", "self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bitsw = r[w];
        while (bitsw) {
            int b = __builtin_ctzll(bitsw);
            out.push_back(w * 64 + b);
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

Graph graph_join(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    Graph g(na + nb);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count();
    Graph g(na + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> vs = s;
    std::sort(vs.begin(), vs.end());
    for (size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.vertex_count())
            throw Error("vertex-out-of-range", "induced subgraph vertex out of range");
        if (i > 0 && vs[i] == vs[i - 1]) throw Error("duplicate-vertex", "duplicate vertex in subgraph set");
    }
    Graph h(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph intersection_of(const std::vector<Graph>& gs) {
    if (gs.empty()) throw Error("empty-intersection", "intersection of zero graphs");
    int n = gs[0].vertex_count();
    for (const Graph& g : gs)
        if (g.vertex_count() != n)
            throw Error("vertex-count-mismatch", "intersection operands must share the vertex count");
    Graph out(n);
    for (auto [u, v] : gs[0].edges()) {
        bool everywhere = true;
        for (size_t i = 1; i < gs.size() && everywhere; ++i) everywhere = gs[i].has_edge(u, v);
        if (everywhere) out.add_edge(u, v);
    }
    return out;
}

bool is_subgraph_of(const Graph& sub, const Graph& super) {
    if (sub.vertex_count() != super.vertex_count()) return false;
    for (auto [u, v] : sub.edges())
        if (!super.has_edge(u, v)) return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> queue{s};
        comp[s] = c;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : g.neighbors(queue[qi]))
                if (comp[w] < 0) {
                    comp[w] = c;
                    queue.push_back(w);
                }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> find_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (parent[w] == -2) {
                    parent[w] = u;
                    stack.push_back(w);
                } else if (w != parent[u]) {
                    // Non-tree edge: walk both endpoints up to their meeting point.
                    std::vector<int> pu, pw;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
                        pu.pop_back();
                        pw.pop_back();
                    }
                    std::vector<int> cycle(pu.begin(), pu.end());
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cycle.push_back(*it);
                    // cycle currently: u..meet..w; closing edge w-u exists
                    return cycle;
                }
            }
        }
    }
    return {};
}

namespace {

// Reads the next non-comment, non-blank line. Returns false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw Error("malformed-header", "missing \"n m\" header line");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
            throw Error("malformed-header", "header must be \"n m\" with nonnegative integers: \"" + line + "\"");
    }
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw Error("truncated-edge-list", "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw Error("malformed-edge", "edge line must be \"u v\": \"" + line + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("vertex-out-of-range", "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(n));
        if (u == v) throw Error("self-loop", "self-loop at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw Error("duplicate-edge", "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line)) throw Error("trailing-data", "unexpected data after edge list: \"" + line + "\"");
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("bad-size", "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw Error("bad-size", "path needs at least 1 vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw Error("bad-size", "complete graph needs at least 1 vertex");
    return Graph::complete(n);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw Error("bad-size", "star needs at least 1 leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error("bad-size", "grid needs positive dimensions");
    Graph g(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            int v = i * cols + j;
            if (j + 1 < cols) g.add_edge(v, v + 1);
            if (i + 1 < rows) g.add_edge(v, v + cols);
        }
    return g;
}

Graph fig1_tree() {
    Graph g(10);
    // vertices a..j = 0..9; legs from the degree-3 vertex d=3
    const int edges[9][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {7, 8}, {8, 9}};
    for (auto& e : edges) g.add_edge(e[0], e[1]);
    return g;
}

Graph fig4_outerplanar() {
    Graph g(20);
    // core x=0, y=1, w=2, z=3: 4-cycle plus the chord joining the two
    // degree-3 core vertices y and z
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    // private path of 4 vertices per core vertex, fully joined to it
    for (int c = 0; c < 4; ++c) {
        int base = 4 + 4 * c;
        for (int i = 0; i < 4; ++i) g.add_edge(c, base + i);
        for (int i = 0; i + 1 < 4; ++i) g.add_edge(base + i, base + i + 1);
    }
    return g;
}

Graph generate_family(const std::string& name, const std::vector<long long>& params) {
    auto want = [&](size_t count) {
        if (params.size() != count)
            throw Error("bad-params", "family \"" + name + "\" takes " + std::to_string(count) + " parameter(s)");
    };
    auto as_int = [&](size_t i) {
        if (params[i] <= 0 || params[i] > 1'000'000) throw Error("bad-size", "family parameter must be a positive, sane size");
        return static_cast<int>(params[i]);
    };
    if (name == "cycle") {
        want(1);
        return cycle_graph(as_int(0));
    }
    if (name == "path") {
        want(1);
        return path_graph(as_int(0));
    }
    if (name == "complete") {
        want(1);
        return complete_graph(as_int(0));
    }
    if (name == "star") {
        want(1);
        return star_graph(as_int(0));
    }
    if (name == "grid") {
        want(2);
        return grid_graph(as_int(0), as_int(1));
    }
    if (name == "fig1_tree") {
        want(0);
        return fig1_tree();
    }
    if (name == "fig4_outerplanar") {
        want(0);
        return fig4_outerplanar();
    }
    throw Error("unknown-family", "unknown graph family \"" + name + "\"");
}

}  // namespace cogdim
