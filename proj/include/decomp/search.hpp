#pragma once

#include <cstdint>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/objective.hpp"
#include "decomp/rational.hpp"

namespace decomp {

struct SearchOptions {
    int threads = 1;             // <= 1 runs the plain serial kernel
    long long node_budget = 100'000'000;
    bool all_optima = false;     // keep every optimal class, ignoring the cap
    int optima_cap = 64;
    int split_depth = -1;        // parallel frontier depth, -1 picks one
    bool disable_pruning = false;  // testing hook for admissibility checks
    bool seed_incumbent = true;  // start from the constructive lower bound
};

struct SearchReport {
    Rational optimum{0};
    // False when the node budget ran out; optimum is then only a lower bound.
    bool exact = false;
    // Canonical forms of the optimal decompositions, deduplicated and sorted;
    // one representative per symmetry class.
    std::vector<Decomposition> optima;
    bool optima_truncated = false;
    // Counters are informational; with threads > 1 they vary run to run.
    long long nodes_visited = 0;
    long long nodes_pruned = 0;
    double elapsed_seconds = 0.0;
};

// Exact maximum of evaluate(D, obj) over all k-decompositions of the complete
// r-uniform hypergraph on n vertices, by branch and bound over color vectors
// in colex edge order with first-use symmetry breaking.  Needs C(n,r) <= 64.
SearchReport optimize(int n, int r, int k, const ObjectiveSpec& obj,
                      const SearchOptions& opts = {});

// Reference point in the decomposition's symmetry orbit: the lexicographically
// least color vector over all vertex permutations composed with the
// objective-preserving part permutations (all of them for CliqueSum and
// ConvexSum, blockwise for MixedSum).  Idempotent.
Decomposition canonicalize(const Decomposition& d, const ObjectiveSpec& obj);

// Greedy edge shifting: repeatedly move an edge from a donor part (index
// >= max(m,1) for MixedSum, >= 1 otherwise) to part 0 whenever that does not
// strictly decrease evaluate.  Runs to a fixed point; the result never
// evaluates below the input.  CliqueSum and MixedSum only.
Decomposition normalize(const Decomposition& d, const ObjectiveSpec& obj);

struct CompletenessViolation {
    int part = 0;
    std::vector<int> missing;  // an absent r-subset of the part's positive vertices
};

struct CompletenessCheck {
    bool ok = true;
    std::vector<CompletenessViolation> violations;
};

// Checks that the positive part of every part with index >= m induces a
// complete hypergraph, reporting one missing edge per offender.
CompletenessCheck check_positive_parts_complete(const Decomposition& d, int m);

// True when k^C(n,r), the leaf count before any reduction, stays within limit.
bool estimated_leaves_within(int n, int r, int k, std::uint64_t limit);

}  // namespace decomp
