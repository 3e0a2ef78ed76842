#include "naive.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "decomp/combinatorics.hpp"

namespace decomp::reference {

namespace {

// True iff every r-subset of verts is an edge, by direct index odometer.
bool is_clique(const Hypergraph& g, const std::vector<int>& verts) {
    int r = g.uniformity();
    int m = static_cast<int>(verts.size());
    if (m < r) return true;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> e(static_cast<std::size_t>(r));
    while (true) {
        for (int i = 0; i < r; ++i) e[static_cast<std::size_t>(i)] = verts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (!g.has_edge(std::span<const int>(e))) return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

int clique_number_brute(const Hypergraph& g) {
    int n = g.order();
    if (n > 24) throw std::invalid_argument("clique_number_brute: too many vertices");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) <= best) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        if (is_clique(g, verts)) best = static_cast<int>(verts.size());
    }
    return best;
}

int chromatic_number_brute(const Hypergraph& g) {
    if (g.uniformity() != 2)
        throw std::invalid_argument("chromatic_number_brute: graphs only");
    int n = g.order();
    if (n == 0) return 0;
    if (n > 10) throw std::invalid_argument("chromatic_number_brute: too many vertices");
    std::vector<std::pair<int, int>> edges;
    g.edge_bits().for_each_set([&](std::size_t rank) {
        auto e = unrank_edge(EdgeId{static_cast<std::uint32_t>(rank)}, n, 2);
        edges.emplace_back(e[0], e[1]);
    });
    for (int c = 1; c <= n; ++c) {
        std::vector<int> lab(static_cast<std::size_t>(n), 0);
        while (true) {
            bool proper = true;
            for (auto [a, b] : edges)
                if (lab[static_cast<std::size_t>(a)] == lab[static_cast<std::size_t>(b)]) { proper = false; break; }
            if (proper) return c;
            int i = 0;
            while (i < n && lab[static_cast<std::size_t>(i)] == c - 1) lab[static_cast<std::size_t>(i++)] = 0;
            if (i == n) break;
            ++lab[static_cast<std::size_t>(i)];
        }
    }
    return n;  // unreachable, n colors always suffice
}

Rational evaluate_brute(const Decomposition& d, const ObjectiveSpec& obj) {
    obj.validate_for(d.uniformity(), d.parts());
    long long total = 0;
    for (int t = 0; t < d.parts(); ++t) {
        Hypergraph h = d.part(t);
        long long w = clique_number_brute(h);
        long long x = obj.needs_chi(t) ? chromatic_number_brute(h) : 0;
        total += obj.part_value(t, w, x);
    }
    return {total, obj.scale()};
}

BruteOptimum optimum_brute(int n, int r, int k, const ObjectiveSpec& obj, bool collect) {
    obj.validate_for(r, k);
    if (k < 1 || k > 255) throw std::invalid_argument("optimum_brute: bad k");
    std::uint64_t ecount = binomial(n, r);
    if (ecount > 63 || !pow_leq(static_cast<std::uint64_t>(k), ecount, std::uint64_t{1} << 24))
        throw std::invalid_argument("optimum_brute: instance too large");
    int e = static_cast<int>(ecount);

    std::unordered_map<std::uint64_t, int> omega_memo, chi_memo;
    auto part_graph = [&](std::uint64_t mask) {
        Hypergraph h(n, r);
        for (int i = 0; i < e; ++i)
            if (mask >> i & 1) h = h.add_edge(EdgeId{static_cast<std::uint32_t>(i)});
        return h;
    };
    auto omega_of = [&](std::uint64_t mask) {
        auto it = omega_memo.find(mask);
        if (it != omega_memo.end()) return it->second;
        int v = clique_number_brute(part_graph(mask));
        omega_memo.emplace(mask, v);
        return v;
    };
    auto chi_of = [&](std::uint64_t mask) {
        auto it = chi_memo.find(mask);
        if (it != chi_memo.end()) return it->second;
        int v = chromatic_number_brute(part_graph(mask));
        chi_memo.emplace(mask, v);
        return v;
    };

    BruteOptimum out;
    bool first = true;
    std::vector<std::uint8_t> col(static_cast<std::size_t>(e), 0);
    std::vector<std::uint64_t> part_mask(static_cast<std::size_t>(k), 0);
    while (true) {
        for (int t = 0; t < k; ++t) part_mask[static_cast<std::size_t>(t)] = 0;
        for (int i = 0; i < e; ++i)
            part_mask[col[static_cast<std::size_t>(i)]] |= std::uint64_t{1} << i;
        long long total = 0;
        for (int t = 0; t < k; ++t) {
            std::uint64_t mask = part_mask[static_cast<std::size_t>(t)];
            long long w = omega_of(mask);
            long long x = obj.needs_chi(t) ? chi_of(mask) : 0;
            total += obj.part_value(t, w, x);
        }
        Rational val(total, obj.scale());
        if (first || val > out.optimum) {
            out.optimum = val;
            first = false;
            if (collect) {
                out.optima.clear();
                out.optima.emplace_back(n, r, k, col);
            }
        } else if (collect && val == out.optimum) {
            out.optima.emplace_back(n, r, k, col);
        }
        int i = 0;
        while (i < e && col[static_cast<std::size_t>(i)] == k - 1) col[static_cast<std::size_t>(i++)] = 0;
        if (i == e) break;
        ++col[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace decomp::reference
