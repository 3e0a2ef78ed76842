#pragma once

#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/invariants.hpp"
#include "decomp/rational.hpp"

namespace decomp {

// Vertex naming scheme for the extremal decompositions: the base vertices are
// the pairs {(i,j) | 1 <= i < j <= k} taken r-1 times each.  A vertex named
// (i,j) belongs to the vertex classes of parts i and j, and any two distinct
// part classes meet in exactly the r-1 copies of one pair, so no r-subset
// fits in two classes at once.
struct LabeledVertex {
    int i = 0;      // pair, 1 <= i < j <= k
    int j = 0;
    int copy = 0;   // 1..r-1
    int index = 0;  // dense vertex id
};

// Pairs in lexicographic order with copies innermost; a bijection onto
// {0, ..., (r-1)*C(k,2) - 1}.
std::vector<LabeledVertex> label_table(int k, int r);

// (r-1)*C(k,2), the number of labeled vertices.
long long base_order(int k, int r);

// The extremal lower-bound decomposition: part t (0-indexed) gets every
// r-subset of the class of t+1; every edge touching an extension vertex and
// every edge inside no class goes to part 0.  Requires n >= base_order(k,r).
Decomposition construct_extremal(int k, int r, int n);

struct ConstructionReport {
    int k = 0;
    int r = 0;
    int n = 0;
    Rational rhs{0};  // n + (r-1)*C(k,2)
    std::vector<int> part_omega;
    std::vector<CliqueWitness> part_witness;
    Rational total{0};
    bool meets_bound = false;   // total >= rhs
    bool equals_bound = false;  // total == rhs
};

// Recomputes omega with a witness on every part of construct_extremal(k,r,n)
// and compares the sum against n + (r-1)*C(k,2).
ConstructionReport verify_construction(int k, int r, int n);

}  // namespace decomp
