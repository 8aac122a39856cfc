#ifndef COGDIM_COLORING_HPP
#define COGDIM_COLORING_HPP

#include <string>
#include <vector>

#include "cogdim/decomposition.hpp"
#include "cogdim/graph.hpp"

namespace cogdim {

enum class ColorMode { Proper, Acyclic, Star };

std::string color_mode_name(ColorMode mode);
ColorMode color_mode_from_name(const std::string& name);

struct Coloring {
    ColorMode mode = ColorMode::Proper;
    std::vector<int> colors;

    // Number of distinct colors actually used.
    int used_color_count() const;
};

// Mode-appropriate acceptance:
//   proper   no monochromatic edge
//   acyclic  additionally every two color classes induce a forest
//   star     additionally no bicolored path on 4 vertices
// Witness: offending edge, bicolored cycle, or bicolored P4.
WitnessCheck validate_coloring(const Graph& g, const Coloring& coloring);

// Vertices in descending-degree order (ties by index), smallest feasible color.
Coloring greedy_proper_coloring(const Graph& g);

struct ExactColoringResult {
    enum class Status { Sat, Unsat, Undecided };
    Status status = Status::Unsat;
    Coloring coloring;  // Sat only
    unsigned long long nodes = 0;
};

// Backtracking search for a mode-valid coloring with at most k colors.
// Deterministic: vertices in descending-degree order, vertex i limited to
// (max color used so far)+1, violations detected incrementally through the
// newly colored vertex. node_limit = 0 means no limit; exceeding a limit
// yields Undecided with the explored-node count.
ExactColoringResult exact_coloring(const Graph& g, ColorMode mode, int k,
                                   unsigned long long node_limit = 0);

}  // namespace cogdim

#endif
