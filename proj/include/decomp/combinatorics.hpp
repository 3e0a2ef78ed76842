#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace decomp {

// Exact binomial coefficient; returns 0 outside 0 <= r <= n, throws
// std::overflow_error if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int r);

std::uint64_t factorial(int n);

// Colex codec for r-subsets of {0, ..., n-1}.
//
// Subsets are ordered colexicographically: S < T iff the largest element of
// the symmetric difference lies in T.  The rank of S = {s_1 < ... < s_r} is
// sum_i C(s_i, i), which is independent of n.  rank and unrank are mutually
// inverse bijections with {0, ..., C(n,r)-1}.
std::uint32_t rank_rset(std::span<const int> verts, int n, int r);
std::vector<int> unrank_rset(std::uint32_t rank, int n, int r);

// All r-subsets of {0..n-1} listed in colex order; row t equals unrank_rset(t).
std::vector<std::vector<int>> all_rsets_colex(int n, int r);

// True iff base^exp <= limit, evaluated without overflow.
bool pow_leq(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

}  // namespace decomp
