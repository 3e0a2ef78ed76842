#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "decomp/hypergraph.hpp"

namespace decomp {

// Partition of the edges of K_n^r into k spanning parts, stored as one color
// per colex edge rank.  Every edge has exactly one color in {0, ..., k-1}, so
// the partition invariant holds by construction.
class Decomposition {
public:
    Decomposition(int n, int r, int k);
    Decomposition(int n, int r, int k, std::vector<std::uint8_t> colors);

    int order() const { return n_; }
    int uniformity() const { return r_; }
    int parts() const { return k_; }
    std::uint64_t edge_count() const { return colors_.size(); }

    int color_of(EdgeId e) const;
    const std::vector<std::uint8_t>& colors() const { return colors_; }

    Hypergraph part(int t) const;
    std::size_t part_size(int t) const;

    Decomposition move_edge(EdgeId e, int to) const;

    // Relabels parts: color c becomes perm[c].  perm must be a permutation of
    // {0..k-1}; objective-compatibility is the caller's concern.
    Decomposition permute_parts(std::span<const int> perm) const;

    bool operator==(const Decomposition&) const = default;

private:
    int n_, r_, k_;
    std::vector<std::uint8_t> colors_;
};

// Uniform color per edge; deterministic given the engine state.
Decomposition random_decomposition(int n, int r, int k, std::mt19937_64& rng);

}  // namespace decomp
