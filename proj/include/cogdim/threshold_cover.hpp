#ifndef COGDIM_THRESHOLD_COVER_HPP
#define COGDIM_THRESHOLD_COVER_HPP

#include <utility>
#include <vector>

#include "cogdim/certificate.hpp"
#include "cogdim/graph.hpp"

namespace cogdim {

// Conflict graph on the edges of a source graph: two edges with four distinct
// endpoints are adjacent iff some pairing of their endpoints gives two
// non-edges. Edges sharing an endpoint are never adjacent.
struct AuxiliaryGraph {
    Graph graph;
    std::vector<std::pair<int, int>> source_edges;  // aux vertex -> source edge
};

// The adjacency rule, exposed for property tests.
bool aux_conflict(const Graph& g, std::pair<int, int> e, std::pair<int, int> f);

AuxiliaryGraph auxiliary_graph(const Graph& g);

// BFS 2-coloring. Returns a Bipartition certificate, or an OddCycle
// certificate (odd closed walk of distinct vertices, verified against h).
Certificate bipartite_check(const Graph& h);
inline Certificate bipartite_check(const AuxiliaryGraph& aux) { return bipartite_check(aux.graph); }

struct ThresholdDim2Result {
    bool le2 = false;
    Certificate certificate;  // over the aux vertices of the complement's auxiliary graph
    AuxiliaryGraph aux;       // auxiliary graph of complement(g)
};

// Decides dim_TH(g) <= 2 by testing bipartiteness of (complement(g))*.
ThresholdDim2Result threshold_dim_le2(const Graph& g);

}  // namespace cogdim

#endif
