#ifndef COGDIM_DECOMPOSITION_HPP
#define COGDIM_DECOMPOSITION_HPP

#include <string>
#include <utility>
#include <vector>

#include "cogdim/graph.hpp"

namespace cogdim {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> skeleton_edges;
    int width() const;
};

// Bags in path order; the skeleton is the path over consecutive bags.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;
    int width() const;
    TreeDecomposition as_tree() const;
};

// Validator verdict. `clause` names the first violated clause; the remaining
// fields carry its witness where applicable.
struct WitnessCheck {
    bool accepted = false;
    std::string clause;
    int vertex = -1;
    std::pair<int, int> pair{-1, -1};
    std::vector<int> witness;
};

WitnessCheck validate_tree_decomposition(const Graph& g, const TreeDecomposition& dec);
WitnessCheck validate_path_decomposition(const Graph& g, const PathDecomposition& dec);

// Min-degree fill-in elimination, ties by lowest index. The result is always
// valid; its width is a witness, not the treewidth.
TreeDecomposition heuristic_tree_decomposition(const Graph& g);

// Left-to-right sweep over the vertex order: bag i holds i plus every u < i
// with a neighbor >= i. Valid for any graph; width is only a witness.
PathDecomposition sweep_path_decomposition(const Graph& g);

}  // namespace cogdim

#endif
