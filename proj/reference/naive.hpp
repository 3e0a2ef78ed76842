#pragma once

#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/hypergraph.hpp"
#include "decomp/objective.hpp"
#include "decomp/rational.hpp"

// Deliberately naive reference implementations.  Everything here enumerates
// the whole search space with no pruning and no shared code with the real
// solvers; the test suite and the benchmark treat these as ground truth.
// Only small instances are feasible, which is all they are for.

namespace decomp::reference {

// Scans all 2^n vertex subsets.
int clique_number_brute(const Hypergraph& g);

// Tries every label vector with c colors for c = 1, 2, ...; graphs only.
int chromatic_number_brute(const Hypergraph& g);

// Per-part objective value summed with the brute-force invariants above.
Rational evaluate_brute(const Decomposition& d, const ObjectiveSpec& obj);

struct BruteOptimum {
    Rational optimum{0};
    // Every maximizing assignment in odometer order when collect was set.
    std::vector<Decomposition> optima;
};

// Walks all k^|E| color assignments of the complete r-uniform hypergraph.
BruteOptimum optimum_brute(int n, int r, int k, const ObjectiveSpec& obj,
                           bool collect = false);

}  // namespace decomp::reference
