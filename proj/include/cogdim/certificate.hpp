#ifndef COGDIM_CERTIFICATE_HPP
#define COGDIM_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "cogdim/graph.hpp"

namespace cogdim {

enum class CertificateKind {
    None,
    InducedP4,
    InducedC4,
    Induced2K2,
    InducedC5,
    OddCycle,
    Bipartition,
    Cotree,
    EliminationOrder,
    SplitPartition,
};

std::string certificate_kind_name(CertificateKind kind);

// Rooted tree with internal nodes labeled union/join and leaves labeled by
// vertices. Evaluating it bottom-up rebuilds the graph it certifies.
struct Cotree {
    enum class Op { Leaf, Union, Join };
    struct Node {
        Op op = Op::Leaf;
        int vertex = -1;             // leaves only
        std::vector<int> children;   // internal nodes only
    };
    std::vector<Node> nodes;
    int root = -1;

    int add_leaf(int vertex);
    int add_internal(Op op, std::vector<int> children);
    std::vector<int> leaf_vertices(int node) const;
    Graph evaluate(int n) const;
};

// Machine-checkable witness. Which fields are meaningful depends on kind:
//   InducedP4 [a,b,c,d]        edges ab,bc,cd only
//   InducedC4 [a,b,c,d]        cycle a-b-c-d-a, no chords
//   Induced2K2 [a,b,c,d]       edges ab,cd only
//   InducedC5 [a..e]           cycle, no chords
//   OddCycle                   odd closed walk of distinct vertices
//   EliminationOrder           vertex removal order, each removed vertex
//                              isolated or universal in the remainder
//   Bipartition                side_a / side_b, no edge inside either side
//   SplitPartition             side_a clique, side_b independent set
//   Cotree                     cotree evaluating to the graph
struct Certificate {
    CertificateKind kind = CertificateKind::None;
    std::vector<int> vertices;
    std::vector<int> side_a;
    std::vector<int> side_b;
    Cotree cotree;
};

// Checks the payload against g. A None certificate is vacuously valid.
bool check_certificate(const Graph& g, const Certificate& cert);

}  // namespace cogdim

#endif
