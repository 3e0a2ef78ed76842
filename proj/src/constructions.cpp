#include "decomp/constructions.hpp"

#include <stdexcept>

#include "decomp/combinatorics.hpp"

namespace decomp {

long long base_order(int k, int r) {
    if (k < 1 || r < 2) throw std::invalid_argument("base_order: needs k >= 1, r >= 2");
    return static_cast<long long>(r - 1) * (static_cast<long long>(k) * (k - 1) / 2);
}

std::vector<LabeledVertex> label_table(int k, int r) {
    if (k < 1 || r < 2) throw std::invalid_argument("label_table: needs k >= 1, r >= 2");
    std::vector<LabeledVertex> out;
    out.reserve(static_cast<std::size_t>(base_order(k, r)));
    int index = 0;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int copy = 1; copy <= r - 1; ++copy)
                out.push_back({i, j, copy, index++});
    return out;
}

Decomposition construct_extremal(int k, int r, int n) {
    long long n0 = base_order(k, r);
    if (k > 255) throw std::invalid_argument("construct_extremal: k too large");
    if (n < n0) throw std::invalid_argument("construct_extremal: n is below the base size");

    auto labels = label_table(k, r);
    // pair label per vertex, (0,0) for extension vertices
    std::vector<std::pair<int, int>> tag(static_cast<std::size_t>(n), {0, 0});
    for (const auto& lv : labels) tag[static_cast<std::size_t>(lv.index)] = {lv.i, lv.j};

    std::uint64_t ecount = binomial(n, r);
    std::vector<std::uint8_t> colors(ecount, 0);
    for (std::uint64_t t = 0; t < ecount; ++t) {
        auto vs = unrank_edge(EdgeId{static_cast<std::uint32_t>(t)}, n, r);
        // intersect the vertices' two-part classes; an extension vertex kills it
        auto [a, b] = tag[static_cast<std::size_t>(vs[0])];
        for (std::size_t q = 1; q < vs.size() && (a || b); ++q) {
            auto [c2, d2] = tag[static_cast<std::size_t>(vs[q])];
            int na = (a == c2 || a == d2) ? a : 0;
            int nb = (b == c2 || b == d2) ? b : 0;
            a = na;
            b = nb;
        }
        int cls = a ? a : b;  // distinct classes share only r-1 vertices, so at most one survives
        if (cls > 0) colors[t] = static_cast<std::uint8_t>(cls - 1);
    }
    return {n, r, k, std::move(colors)};
}

ConstructionReport verify_construction(int k, int r, int n) {
    Decomposition d = construct_extremal(k, r, n);
    ConstructionReport rep;
    rep.k = k;
    rep.r = r;
    rep.n = n;
    rep.rhs = Rational(n) + Rational(r - 1) * Rational(static_cast<long long>(k) * (k - 1) / 2);
    long long total = 0;
    for (int t = 0; t < k; ++t) {
        CliqueResult res = clique_number(d.part(t));
        rep.part_omega.push_back(res.value);
        rep.part_witness.push_back(res.witness);
        total += res.value;
    }
    rep.total = Rational(total);
    rep.meets_bound = rep.total >= rep.rhs;
    rep.equals_bound = rep.total == rep.rhs;
    return rep;
}

}  // namespace decomp
