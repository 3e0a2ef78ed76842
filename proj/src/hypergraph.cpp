#include "decomp/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace decomp {

std::size_t Bitset::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

Hypergraph::Hypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative order");
    if (r < 2) throw std::invalid_argument("Hypergraph: uniformity must be at least 2");
    edges_ = Bitset(binomial(n, r));
}

Hypergraph Hypergraph::complete(int n, int r) {
    Hypergraph g(n, r);
    for (std::uint64_t t = 0; t < g.edge_capacity(); ++t) g.edges_.set(t);
    return g;
}

bool Hypergraph::has_edge(EdgeId e) const {
    if (e.rank >= edge_capacity()) throw std::out_of_range("has_edge: rank out of range");
    return edges_.test(e.rank);
}

bool Hypergraph::has_edge(std::span<const int> verts) const {
    return has_edge(rank_edge(verts, n_, r_));
}

Hypergraph Hypergraph::add_edge(EdgeId e) const {
    if (e.rank >= edge_capacity()) throw std::out_of_range("add_edge: rank out of range");
    Hypergraph g = *this;
    g.edges_.set(e.rank);
    return g;
}

Hypergraph Hypergraph::add_edge(std::span<const int> verts) const {
    return add_edge(rank_edge(verts, n_, r_));
}

Hypergraph Hypergraph::remove_edge(EdgeId e) const {
    if (e.rank >= edge_capacity()) throw std::out_of_range("remove_edge: rank out of range");
    Hypergraph g = *this;
    g.edges_.reset(e.rank);
    return g;
}

Hypergraph Hypergraph::remove_edge(std::span<const int> verts) const {
    return remove_edge(rank_edge(verts, n_, r_));
}

int Hypergraph::degree(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("degree: vertex out of range");
    int d = 0;
    edges_.for_each_set([&](std::size_t t) {
        auto verts = unrank_rset(static_cast<std::uint32_t>(t), n_, r_);
        if (std::find(verts.begin(), verts.end(), v) != verts.end()) ++d;
    });
    return d;
}

std::vector<int> Hypergraph::positive_vertices() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    edges_.for_each_set([&](std::size_t t) {
        for (int v : unrank_rset(static_cast<std::uint32_t>(t), n_, r_))
            seen[static_cast<std::size_t>(v)] = 1;
    });
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

namespace {

std::vector<int> checked_vertex_set(const Hypergraph& g, std::span<const int> x) {
    std::vector<int> xs(x.begin(), x.end());
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("induced: duplicate vertices");
    for (int v : xs)
        if (v < 0 || v >= g.order()) throw std::out_of_range("induced: vertex out of range");
    return xs;
}

}  // namespace

Induced induced(const Hypergraph& g, std::span<const int> x) {
    std::vector<int> xs = checked_vertex_set(g, x);
    int n2 = static_cast<int>(xs.size());
    int r = g.uniformity();
    Induced out{Hypergraph(n2, r), xs};
    // old id -> new id; -1 for dropped vertices
    std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < n2; ++i) newid[static_cast<std::size_t>(xs[i])] = i;
    g.edge_bits().for_each_set([&](std::size_t t) {
        auto verts = unrank_rset(static_cast<std::uint32_t>(t), g.order(), r);
        std::vector<int> mapped;
        mapped.reserve(verts.size());
        for (int v : verts) {
            int w = newid[static_cast<std::size_t>(v)];
            if (w < 0) return;
            mapped.push_back(w);
        }
        std::sort(mapped.begin(), mapped.end());
        out.graph.edge_bits().set(rank_rset(mapped, n2, r));
    });
    return out;
}

Induced minus(const Hypergraph& g, std::span<const int> x) {
    std::vector<int> xs = checked_vertex_set(g, x);
    std::vector<int> keep;
    std::size_t i = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (i < xs.size() && xs[i] == v) {
            ++i;
            continue;
        }
        keep.push_back(v);
    }
    return induced(g, keep);
}

Induced positive_part(const Hypergraph& g) {
    return induced(g, g.positive_vertices());
}

EdgeId rank_edge(std::span<const int> verts, int n, int r) {
    return EdgeId{rank_rset(verts, n, r)};
}

std::vector<int> unrank_edge(EdgeId e, int n, int r) {
    return unrank_rset(e.rank, n, r);
}

std::vector<std::vector<int>> edge_vertex_table(int n, int r) {
    return all_rsets_colex(n, r);
}

}  // namespace decomp
