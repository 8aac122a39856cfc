#ifndef COGDIM_EXACT_SOLVER_HPP
#define COGDIM_EXACT_SOLVER_HPP

#include <iosfwd>

#include "cogdim/recognition.hpp"

namespace cogdim {

struct SolveOptions {
    // 0 = unlimited. Exceeding the limit yields Undecided with the count.
    unsigned long long node_limit = 0;
    // Forced-value propagation on partially determined 4-subsets; complete
    // either way, this only prunes. Off reduces the search to pure
    // conflict-on-determined backtracking (used for cross-checks).
    bool inference = true;
};

struct SolveResult {
    enum class Status { Sat, Unsat, Undecided };
    Status status = Status::Unsat;
    Representation representation;  // Sat only; always verified before return
    unsigned long long nodes = 0;
};

// Decides whether g is the intersection of k graphs from the family, by
// backtracking over absence assignments: each non-edge of g is assigned a
// nonempty subset of factors it is absent from. Exhaustive unless a node
// limit interrupts. Intended for desk scale (n around 12 at k <= 2).
SolveResult representable(const Graph& g, RepFamily family, int k, const SolveOptions& options = {});

struct DimensionResult {
    enum class Status { Found, AboveBound, Undecided };
    Status status = Status::AboveBound;
    int dimension = -1;          // Found only
    Representation witness;      // Found only
    unsigned long long nodes = 0;  // total over all k tried
};

// Smallest k <= kmax with a representation, plus the witness.
DimensionResult exact_dimension(const Graph& g, RepFamily family, int kmax,
                                const SolveOptions& options = {});

// DIMACS CNF encoding over variables "non-edge e is present in factor i";
// satisfiable iff representable(g, family, k). For external checking only,
// the built-in solver never shells out.
void export_cnf(std::ostream& out, const Graph& g, RepFamily family, int k);

}  // namespace cogdim

#endif
