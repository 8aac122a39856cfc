#ifndef COGDIM_GRAPH_HPP
#define COGDIM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cogdim {

// Error with a machine-readable kind alongside the human message.
// Kinds are stable strings ("malformed-header", "self-loop", ...) used by the
// CLI and asserted in tests.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Error that carries a vertex-sequence witness (for example the cycle that
// disqualifies a forest input).
class WitnessError : public Error {
public:
    WitnessError(std::string kind, const std::string& message, std::vector<int> witness)
        : Error(std::move(kind), message), witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

// Simple undirected graph on vertices 0..n-1.
// Adjacency is a row of bits per vertex, so membership queries are O(1).
// All operations in this library treat Graph as an immutable value; mutation
// is only used while building one.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Raw 64-bit adjacency words of a vertex row (words_per_row() words).
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    // Edges sorted lexicographically, each as (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw Error("vertex-out-of-range", "vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);
Graph graph_join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

// Induced subgraph on the vertex set S with order-preserving relabeling:
// new vertex i corresponds to the i-th smallest element of S.
Graph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Edge present iff present in every operand. All operands must share n.
Graph intersection_of(const std::vector<Graph>& gs);

// True iff every edge of sub is an edge of super (same vertex count required).
bool is_subgraph_of(const Graph& sub, const Graph& super);

// Components as vertex lists, discovered from the lowest unvisited vertex;
// vertices within a component are listed in increasing order.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// If g has a cycle, returns its vertex sequence (closed walk of distinct
// vertices); empty vector when g is a forest.
std::vector<int> find_cycle(const Graph& g);

// Edge-list format: '#' comment lines, then "n m", then m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_edge_list(const Graph& g);

// Named instances.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}: center 0 plus `leaves` leaves
Graph grid_graph(int rows, int cols);
Graph fig1_tree();             // 10-vertex spider: 0-1-2-3, 3-4-5-6, 3-7-8-9
Graph fig4_outerplanar();      // 20-vertex outerplanar graph, core 4-cycle x-y-w-z plus chord y-z, a private P4 fully joined to each core vertex

// Dispatch by family name; see the named generators for parameter meaning.
// Families: cycle(n), path(n), complete(n), star(n), grid(r,c), fig1_tree,
// fig4_outerplanar.
Graph generate_family(const std::string& name, const std::vector<long long>& params);

}  // namespace cogdim

#endif
