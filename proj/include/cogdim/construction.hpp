#ifndef COGDIM_CONSTRUCTION_HPP
#define COGDIM_CONSTRUCTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "cogdim/boxes.hpp"
#include "cogdim/coloring.hpp"
#include "cogdim/decomposition.hpp"
#include "cogdim/recognition.hpp"

namespace cogdim {

// Chromatic index of the complete graph K_x: x if odd, x-1 if even.
int alpha(int x);

// Round-robin (circle method) partition of the part pairs {0..k-1} into
// alpha(k) rounds of disjoint pairs; every unordered pair appears once.
struct MatchingSchedule {
    int parts = 0;
    std::vector<std::vector<std::pair<int, int>>> rounds;
};
MatchingSchedule matching_schedule(int k);

// Two cographs intersecting to the forest: per component rooted (default:
// lowest index; roots may pin one vertex per component), the odd factor adds
// edges from every odd-depth vertex to the subtree of its parent, the even
// factor does the same for even-depth vertices. Throws with the cycle as
// witness when the input is not a forest.
Representation forest_two_cographs(const Graph& forest, const std::vector<int>& roots = {});

// Forest construction with every component rooted at a path endpoint, which
// makes both factors threshold. Requires a disjoint union of paths with at
// most one edge-containing component (two edge-containing components force an
// induced 2K2 into a factor).
Representation path_two_thresholds(const Graph& paths);

// Representation of C_n with exactly the known optimal factor count for the
// family: hardcoded 1- and 2-factor sets for small n, and for larger n three
// factors built from the two path factors of C-v with v universal plus C with
// a clique on the remaining vertices.
Representation cycle_representation(int n, RepFamily family);

// Vertex order around a cycle graph (throws when g is not a cycle).
std::vector<int> cycle_order(const Graph& g);

// width+2 cographs from a tree decomposition: the chordal completion is
// colored greedily along a maximum-cardinality-search order, vertices are
// partially ordered by the root-most bag containing them (ties by index), and
// the factors are the comparability graph plus one factor per color class.
Representation treewidth_construction(const Graph& g, const TreeDecomposition& dec, int root_bag = 0);

// Same machinery rooted at the first bag of the path, where the order is
// total: the complete comparability factor is dropped and the width+1
// remaining factors are split, hence threshold.
Representation pathwidth_construction(const Graph& g, const PathDecomposition& dec);

// One split (hence threshold) factor per (color class i, box dimension j):
// all pairs avoiding color i, plus pairs u,v with c(u)=i, c(v)!=i whose boxes
// satisfy r_j(u) >= l_j(v).
Representation box_chromatic_construction(const Graph& g, const BoxRepresentation& boxes,
                                          const Coloring& coloring);

// Composes per-piece cograph representations across a vertex partition: for
// each scheduled round and factor slot, the factor is the join of the
// corresponding slot factors of the matched pair pieces and unmatched single
// pieces. Pieces shorter than t are padded with complete supergraphs.
// Yields alpha(k) * t factors.
Representation partition_composition(const Graph& g, const std::vector<std::vector<int>>& parts,
                                     const std::map<std::pair<int, int>, Representation>& pair_reps,
                                     const std::vector<Representation>& single_reps, int t = 0);

// alpha(#colors) cograph factors from a star coloring: each two-class piece
// is a star forest, hence itself a cograph (t = 1).
Representation star_coloring_construction(const Graph& g, const Coloring& coloring);

// 2*alpha(#colors) cograph factors from an acyclic coloring: each two-class
// piece is a forest, represented by forest_two_cographs (t = 2).
Representation acyclic_coloring_construction(const Graph& g, const Coloring& coloring);

}  // namespace cogdim

#endif
