#include "decomp/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace decomp {

std::uint64_t binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    std::uint64_t acc = 1;
    for (int i = 2; i <= n; ++i) {
        if (acc > std::numeric_limits<std::uint64_t>::max() / static_cast<unsigned>(i))
            throw std::overflow_error("factorial: value exceeds 64 bits");
        acc *= static_cast<unsigned>(i);
    }
    return acc;
}

std::uint32_t rank_rset(std::span<const int> verts, int n, int r) {
    if (r < 1) throw std::invalid_argument("rank_rset: r must be positive");
    if (static_cast<int>(verts.size()) != r)
        throw std::invalid_argument("rank_rset: vertex count does not match r");
    std::uint64_t acc = 0;
    for (int i = 0; i < r; ++i) {
        int v = verts[i];
        if (v < 0 || v >= n) throw std::out_of_range("rank_rset: vertex out of range");
        if (i > 0 && verts[i - 1] >= v)
            throw std::invalid_argument("rank_rset: vertices must be strictly increasing");
        acc += binomial(v, i + 1);
    }
    if (acc >= binomial(n, r)) throw std::logic_error("rank_rset: rank out of range");
    return static_cast<std::uint32_t>(acc);
}

std::vector<int> unrank_rset(std::uint32_t rank, int n, int r) {
    if (r < 1) throw std::invalid_argument("unrank_rset: r must be positive");
    if (rank >= binomial(n, r)) throw std::out_of_range("unrank_rset: rank out of range");
    std::vector<int> verts(r);
    std::uint64_t rem = rank;
    for (int i = r; i >= 1; --i) {
        // largest s with C(s, i) <= rem; s >= i-1 always works since C(i-1, i) = 0
        int s = i - 1;
        while (binomial(s + 1, i) <= rem) ++s;
        verts[i - 1] = s;
        rem -= binomial(s, i);
    }
    return verts;
}

std::vector<std::vector<int>> all_rsets_colex(int n, int r) {
    std::uint64_t total = binomial(n, r);
    std::vector<std::vector<int>> out;
    out.reserve(total);
    for (std::uint64_t t = 0; t < total; ++t)
        out.push_back(unrank_rset(static_cast<std::uint32_t>(t), n, r));
    return out;
}

bool pow_leq(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    if (base <= 1) return base <= limit || exp == 0;
    std::uint64_t acc = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (acc > limit / base) return false;
        acc *= base;
    }
    return acc <= limit;
}

}  // namespace decomp
