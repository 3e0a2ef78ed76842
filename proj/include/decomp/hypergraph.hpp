#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "decomp/combinatorics.hpp"

namespace decomp {

// Fixed-width bit set sized at construction; backs the edge sets below.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const;
    bool any() const;
    bool operator==(const Bitset&) const = default;

    // Low word; valid as a complete mask only when size() <= 64.
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
                fn(w * 64 + b);
                word &= word - 1;
            }
        }
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Colex rank of an edge inside a fixed (n, r) universe.
struct EdgeId {
    std::uint32_t rank = 0;
    auto operator<=>(const EdgeId&) const = default;
};

// r-uniform hypergraph on vertex set {0, ..., n-1}; edges stored as a bit set
// over colex ranks.  Mutation-style operations return new values.
class Hypergraph {
public:
    Hypergraph(int n, int r);
    static Hypergraph complete(int n, int r);

    int order() const { return n_; }
    int uniformity() const { return r_; }
    std::uint64_t edge_capacity() const { return edges_.size(); }  // C(n, r)
    std::size_t size() const { return edges_.count(); }            // s(G)
    bool is_complete() const { return size() == edge_capacity(); }

    bool has_edge(EdgeId e) const;
    bool has_edge(std::span<const int> verts) const;

    Hypergraph add_edge(EdgeId e) const;
    Hypergraph add_edge(std::span<const int> verts) const;
    Hypergraph remove_edge(EdgeId e) const;
    Hypergraph remove_edge(std::span<const int> verts) const;

    int degree(int v) const;
    std::vector<int> positive_vertices() const;  // sorted, degree >= 1

    const Bitset& edge_bits() const { return edges_; }
    Bitset& edge_bits() { return edges_; }

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    int r_ = 2;
    Bitset edges_;
};

// Reindexed induced subhypergraph; vertices[i] is the original id of vertex i.
struct Induced {
    Hypergraph graph;
    std::vector<int> vertices;
};

// G[X]: keeps exactly the edges contained in X.  X must be valid vertex ids,
// duplicates rejected.
Induced induced(const Hypergraph& g, std::span<const int> x);

// G - X: the subhypergraph induced on V \ X.
Induced minus(const Hypergraph& g, std::span<const int> x);

// P(G): the subhypergraph induced on the vertices of positive degree.
Induced positive_part(const Hypergraph& g);

// EdgeId codec bound to a (n, r) universe; thin wrappers over the colex codec.
EdgeId rank_edge(std::span<const int> verts, int n, int r);
std::vector<int> unrank_edge(EdgeId e, int n, int r);

// Vertex lists of all edges in colex order; row t belongs to rank t.
// Shared lookup table for the hot paths.
std::vector<std::vector<int>> edge_vertex_table(int n, int r);

}  // namespace decomp
