#include "decomp/decomposition.hpp"

#include <stdexcept>

namespace decomp {

Decomposition::Decomposition(int n, int r, int k) : n_(n), r_(r), k_(k) {
    if (k < 1) throw std::invalid_argument("Decomposition: k must be positive");
    if (k > 255) throw std::invalid_argument("Decomposition: k too large");
    Hypergraph probe(n, r);  // validates n, r
    colors_.assign(probe.edge_capacity(), 0);
}

Decomposition::Decomposition(int n, int r, int k, std::vector<std::uint8_t> colors)
    : Decomposition(n, r, k) {
    if (colors.size() != colors_.size())
        throw std::invalid_argument("Decomposition: color vector has wrong length");
    for (std::uint8_t c : colors)
        if (c >= k)
            throw std::invalid_argument("Decomposition: color out of range");
    colors_ = std::move(colors);
}

int Decomposition::color_of(EdgeId e) const {
    if (e.rank >= colors_.size()) throw std::out_of_range("color_of: rank out of range");
    return colors_[e.rank];
}

Hypergraph Decomposition::part(int t) const {
    if (t < 0 || t >= k_) throw std::out_of_range("part: index out of range");
    Hypergraph g(n_, r_);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] == t) g.edge_bits().set(i);
    return g;
}

std::size_t Decomposition::part_size(int t) const {
    if (t < 0 || t >= k_) throw std::out_of_range("part_size: index out of range");
    std::size_t s = 0;
    for (std::uint8_t c : colors_)
        if (c == t) ++s;
    return s;
}

Decomposition Decomposition::move_edge(EdgeId e, int to) const {
    if (e.rank >= colors_.size()) throw std::out_of_range("move_edge: rank out of range");
    if (to < 0 || to >= k_) throw std::out_of_range("move_edge: target part out of range");
    Decomposition d = *this;
    d.colors_[e.rank] = static_cast<std::uint8_t>(to);
    return d;
}

Decomposition Decomposition::permute_parts(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != k_)
        throw std::invalid_argument("permute_parts: wrong permutation size");
    std::vector<char> seen(static_cast<std::size_t>(k_), 0);
    for (int p : perm) {
        if (p < 0 || p >= k_ || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("permute_parts: not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
    }
    Decomposition d = *this;
    for (auto& c : d.colors_) c = static_cast<std::uint8_t>(perm[c]);
    return d;
}

Decomposition random_decomposition(int n, int r, int k, std::mt19937_64& rng) {
    Decomposition d(n, r, k);
    std::uniform_int_distribution<int> dist(0, k - 1);
    std::vector<std::uint8_t> colors(d.edge_count());
    for (auto& c : colors) c = static_cast<std::uint8_t>(dist(rng));
    return Decomposition(n, r, k, std::move(colors));
}

}  // namespace decomp
