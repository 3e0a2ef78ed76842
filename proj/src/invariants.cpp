#include "decomp/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "decomp/combinatorics.hpp"

namespace decomp {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Hypergraph& g) {
    if (g.uniformity() != 2) throw std::logic_error("adjacency masks need r = 2");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
    g.edge_bits().for_each_set([&](std::size_t rank) {
        auto e = unrank_edge(EdgeId{static_cast<std::uint32_t>(rank)}, g.order(), 2);
        adj[static_cast<std::size_t>(e[0])] |= std::uint64_t{1} << e[1];
        adj[static_cast<std::size_t>(e[1])] |= std::uint64_t{1} << e[0];
    });
    return adj;
}

// Visits the size-c index combinations of {0..m-1} in lexicographic order.
// Returns false if the callback asked to stop early.
template <typename Fn>
bool for_each_combination(int m, int c, Fn&& fn) {
    if (c < 0 || c > m) return true;
    std::vector<int> idx(static_cast<std::size_t>(c));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
        int i = c - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - c + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

struct BronKerbosch {
    const std::vector<std::uint64_t>& adj;
    std::vector<int> cur;
    std::vector<int> best_set;
    int best = -1;

    explicit BronKerbosch(const std::vector<std::uint64_t>& a) : adj(a) {}

    void expand(std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
            if (static_cast<int>(cur.size()) > best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        if (static_cast<int>(cur.size()) + std::popcount(p) <= best) return;
        // pivot on the vertex covering most of P, candidates are its non-neighbors
        int pivot = -1, covered = -1;
        for (std::uint64_t t = p | x; t; t &= t - 1) {
            int v = std::countr_zero(t);
            int d = std::popcount(p & adj[static_cast<std::size_t>(v)]);
            if (d > covered) { covered = d; pivot = v; }
        }
        std::uint64_t cand = p & ~adj[static_cast<std::size_t>(pivot)];
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            cur.push_back(v);
            expand(p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
            cur.pop_back();
            p &= ~(std::uint64_t{1} << v);
            x |= std::uint64_t{1} << v;
        }
    }
};

struct HyperCliqueSearch {
    const Hypergraph& g;
    int n, r;
    std::vector<std::uint64_t> deg;
    std::vector<int> cur;
    std::vector<int> best_set;
    int best = -1;

    explicit HyperCliqueSearch(const Hypergraph& h)
        : g(h), n(h.order()), r(h.uniformity()), deg(static_cast<std::size_t>(h.order())) {
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    }

    // cur stays sorted because candidates are tried in increasing order, so the
    // edge probes below are already in canonical vertex order.
    bool joins(int v) {
        if (static_cast<int>(cur.size()) < r - 1) return true;
        std::vector<int> e(static_cast<std::size_t>(r));
        e[static_cast<std::size_t>(r - 1)] = v;
        return for_each_combination(static_cast<int>(cur.size()), r - 1, [&](const std::vector<int>& idx) {
            for (int i = 0; i < r - 1; ++i)
                e[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            return g.has_edge(std::span<const int>(e));
        });
    }

    void search(int start) {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_set = cur;
        }
        for (int v = start; v < n; ++v) {
            if (static_cast<int>(cur.size()) + (n - v) <= best) break;
            // a clique of size best+1 through v needs C(best, r-1) edges at v
            if (deg[static_cast<std::size_t>(v)] < binomial(best, r - 1)) continue;
            if (!joins(v)) continue;
            cur.push_back(v);
            search(v + 1);
            cur.pop_back();
        }
    }
};

struct ColorSearch {
    int n, limit;
    const std::vector<std::uint64_t>& adj;
    std::vector<int> deg;
    std::vector<int> color;
    std::vector<std::uint64_t> satmask;
    std::vector<std::vector<int>> satcnt;
    int colored = 0;
    int used = 0;

    ColorSearch(int n_, int limit_, const std::vector<std::uint64_t>& adj_)
        : n(n_), limit(limit_), adj(adj_),
          deg(static_cast<std::size_t>(n_)),
          color(static_cast<std::size_t>(n_), -1),
          satmask(static_cast<std::size_t>(n_), 0),
          satcnt(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(std::max(limit_, 1)), 0)) {
        for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)]);
    }

    void paint(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        ++colored;
        for (std::uint64_t t = adj[static_cast<std::size_t>(v)]; t; t &= t - 1) {
            int u = std::countr_zero(t);
            if (++satcnt[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 1)
                satmask[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
        }
    }

    void unpaint(int v, int c) {
        color[static_cast<std::size_t>(v)] = -1;
        --colored;
        for (std::uint64_t t = adj[static_cast<std::size_t>(v)]; t; t &= t - 1) {
            int u = std::countr_zero(t);
            if (--satcnt[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
                satmask[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << c);
        }
    }

    // DSATUR order: most saturated, then highest degree, then lowest index.
    int pick() const {
        int v = -1, vsat = -1, vdeg = -1;
        for (int u = 0; u < n; ++u) {
            if (color[static_cast<std::size_t>(u)] >= 0) continue;
            int s = std::popcount(satmask[static_cast<std::size_t>(u)]);
            if (s > vsat || (s == vsat && deg[static_cast<std::size_t>(u)] > vdeg)) {
                v = u;
                vsat = s;
                vdeg = deg[static_cast<std::size_t>(u)];
            }
        }
        return v;
    }

    bool solve() {
        if (colored == n) return true;
        int v = pick();
        // allowing at most one fresh color per step kills color symmetry
        int top = std::min(limit - 1, used);
        for (int c = 0; c <= top; ++c) {
            if (satmask[static_cast<std::size_t>(v)] >> c & 1) continue;
            bool fresh = (c == used);
            if (fresh) ++used;
            paint(v, c);
            if (solve()) return true;
            unpaint(v, c);
            if (fresh) --used;
        }
        return false;
    }
};

void check_solver_size(const Hypergraph& g) {
    if (g.order() > 64) throw std::invalid_argument("exact solvers handle at most 64 vertices");
}

}  // namespace

CliqueResult clique_number(const Hypergraph& g) {
    check_solver_size(g);
    if (g.order() == 0) return {};
    if (g.uniformity() == 2) {
        auto adj = adjacency_masks(g);
        BronKerbosch bk(adj);
        std::uint64_t all = (g.order() == 64) ? ~std::uint64_t{0}
                                              : ((std::uint64_t{1} << g.order()) - 1);
        bk.expand(all, 0);
        std::sort(bk.best_set.begin(), bk.best_set.end());
        return {bk.best, {std::move(bk.best_set)}};
    }
    HyperCliqueSearch hc(g);
    hc.search(0);
    return {hc.best, {std::move(hc.best_set)}};
}

bool colorable_with(const Hypergraph& g, int colors) {
    check_solver_size(g);
    if (g.uniformity() != 2) throw std::invalid_argument("chromatic search needs r = 2");
    if (g.order() == 0) return true;
    if (colors <= 0) return false;
    auto adj = adjacency_masks(g);
    ColorSearch cs(g.order(), std::min(colors, g.order()), adj);
    return cs.solve();
}

ColoringResult chromatic_number(const Hypergraph& g) {
    check_solver_size(g);
    if (g.uniformity() != 2) throw std::invalid_argument("chromatic search needs r = 2");
    if (g.order() == 0) return {};
    auto adj = adjacency_masks(g);
    int lb = clique_number(g).value;
    for (int c = std::max(lb, 1);; ++c) {
        ColorSearch cs(g.order(), c, adj);
        if (cs.solve()) {
            ColoringResult res;
            res.value = c;
            res.witness.labels = std::move(cs.color);
            res.clique_lower_bound = lb;
            res.exhausted_below = (c > std::max(lb, 1));
            return res;
        }
    }
}

bool verify_clique_witness(const Hypergraph& g, const CliqueWitness& w, int claimed) {
    if (static_cast<int>(w.vertices.size()) != claimed || claimed < 0) return false;
    std::vector<int> vs = w.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    if (!vs.empty() && (vs.front() < 0 || vs.back() >= g.order())) return false;
    int r = g.uniformity();
    if (claimed < r) return true;  // too small to span an edge, vacuously a clique
    std::vector<int> e(static_cast<std::size_t>(r));
    return for_each_combination(claimed, r, [&](const std::vector<int>& idx) {
        for (int i = 0; i < r; ++i)
            e[static_cast<std::size_t>(i)] = vs[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        return g.edge_bits().test(rank_edge(std::span<const int>(e), g.order(), r).rank);
    });
}

bool verify_coloring_witness(const Hypergraph& g, const ColoringWitness& w, int claimed) {
    if (g.uniformity() != 2) throw std::invalid_argument("coloring witnesses are for graphs");
    if (static_cast<int>(w.labels.size()) != g.order()) return false;
    if (g.order() == 0) return claimed == 0;
    if (claimed < 1) return false;
    for (int lab : w.labels)
        if (lab < 0 || lab >= claimed) return false;
    bool ok = true;
    g.edge_bits().for_each_set([&](std::size_t rank) {
        auto e = unrank_edge(EdgeId{static_cast<std::uint32_t>(rank)}, g.order(), 2);
        if (w.labels[static_cast<std::size_t>(e[0])] == w.labels[static_cast<std::size_t>(e[1])]) ok = false;
    });
    return ok;
}

Rational evaluate(const Decomposition& d, const ObjectiveSpec& obj) {
    obj.validate_for(d.uniformity(), d.parts());
    long long scaled_total = 0;
    for (int t = 0; t < d.parts(); ++t) {
        Hypergraph h = d.part(t);
        long long w = clique_number(h).value;
        long long x = obj.needs_chi(t) ? chromatic_number(h).value : 0;
        scaled_total += obj.part_value(t, w, x);
    }
    return {scaled_total, obj.scale()};
}

PartValues part_values(const Decomposition& d, const ObjectiveSpec& obj) {
    obj.validate_for(d.uniformity(), d.parts());
    PartValues pv;
    pv.omega.resize(static_cast<std::size_t>(d.parts()));
    pv.chi.assign(static_cast<std::size_t>(d.parts()), -1);
    for (int t = 0; t < d.parts(); ++t) {
        Hypergraph h = d.part(t);
        pv.omega[static_cast<std::size_t>(t)] = clique_number(h).value;
        if (obj.needs_chi(t)) pv.chi[static_cast<std::size_t>(t)] = chromatic_number(h).value;
    }
    return pv;
}

namespace {

Rational choose2(long long x) { return {x * (x - 1) / 2, 1}; }

void require(bool cond, const std::string& claim, const std::string& why) {
    if (!cond) throw HypothesisError(claim + ": " + why);
}

void require_basics(ClaimId id, const BoundParams& p, bool graphs_only) {
    const std::string name = claim_name(id);
    require(p.k >= 1, name, "needs k >= 1");
    require(p.n >= 1, name, "needs n >= 1");
    if (graphs_only) require(p.r == 2, name, "stated for graphs (r = 2)");
    else require(p.r >= 2, name, "needs uniformity r >= 2");
}

}  // namespace

Rational preset_f(int m) {
    if (m < 0) throw std::invalid_argument("preset_f: m must be non-negative");
    if (m <= 1) return {0};
    if (m == 3) return {3};
    return {static_cast<long long>(factorial(m)), 2};
}

Rational bound_rhs(ClaimId id, const BoundParams& p) {
    switch (id) {
        case ClaimId::Thm1:
            require_basics(id, p, true);
            return Rational(p.n) + choose2(p.k);
        case ClaimId::Eq1:
            require_basics(id, p, true);
            require(p.coeff >= 0 && p.coeff <= 1, claim_name(id), "needs 0 <= r_coef <= 1");
            return Rational(p.n) + (Rational(1) - p.coeff) * choose2(p.k)
                   + p.coeff * Rational(static_cast<long long>(factorial(p.k)), 2);
        case ClaimId::Thm2:
            require_basics(id, p, true);
            return Rational(p.n) + Rational(static_cast<long long>(factorial(p.k)), 2);
        case ClaimId::Conj3:
            require_basics(id, p, true);
            return Rational(p.n) + choose2(p.k);
        case ClaimId::Conj7:
            require_basics(id, p, true);
            require(p.m >= 0 && p.m <= p.k, claim_name(id), "needs 0 <= m <= k");
            return Rational(p.n) + choose2(p.k);
        case ClaimId::Cor8:
            require_basics(id, p, true);
            return Rational(p.n) + choose2(p.k);
        case ClaimId::Cor9:
            require_basics(id, p, true);
            require(p.k >= 3, claim_name(id), "needs k >= 3");
            return Rational(p.n) + choose2(p.k);
        case ClaimId::Thm5:
            require_basics(id, p, true);
            require(p.m >= 0 && p.m <= p.k, claim_name(id), "needs 0 <= m <= k");
            return Rational(p.n) + choose2(p.k) + p.f_m.value_or(preset_f(p.m)) - choose2(p.m);
        case ClaimId::Thm11:
            require_basics(id, p, true);
            require(p.coeff >= 0 && p.coeff <= std::min(Rational(1), Rational(3, p.k)),
                    claim_name(id), "needs 0 <= r_coef <= min(1, 3/k)");
            return Rational(p.n) + choose2(p.k);
        case ClaimId::Thm13:
            require_basics(id, p, false);
            return Rational(p.n) + Rational(p.r - 1) * choose2(p.k);
    }
    throw std::logic_error("bound_rhs: unknown claim");
}

ObjectiveSpec claim_objective(ClaimId id, const BoundParams& p) {
    switch (id) {
        case ClaimId::Thm1:
        case ClaimId::Thm13:
            return ObjectiveSpec::clique_sum();
        case ClaimId::Eq1:
        case ClaimId::Thm11:
            return ObjectiveSpec::convex_sum(p.coeff);
        case ClaimId::Thm2:
        case ClaimId::Conj3:
            return ObjectiveSpec::mixed_sum(p.k);
        case ClaimId::Conj7:
        case ClaimId::Thm5:
            return ObjectiveSpec::mixed_sum(p.m);
        case ClaimId::Cor8:
            return ObjectiveSpec::mixed_sum(1);
        case ClaimId::Cor9:
            return ObjectiveSpec::mixed_sum(3);
    }
    throw std::logic_error("claim_objective: unknown claim");
}

std::optional<long long> equality_threshold(ClaimId id, const BoundParams& p) {
    long long c2 = p.k * (p.k - 1LL) / 2;
    switch (id) {
        case ClaimId::Thm1:
        case ClaimId::Conj3:
        case ClaimId::Conj7:
        case ClaimId::Cor8:
        case ClaimId::Cor9:
        case ClaimId::Thm11:
            return c2;
        case ClaimId::Thm13:
            return (p.r - 1) * c2;
        case ClaimId::Thm2:
            // k!/2 matches C(k,2) only at k = 2, 3; elsewhere no tight cases known
            if (p.k == 2 || p.k == 3) return c2;
            return std::nullopt;
        case ClaimId::Eq1:
            // compare through the numerator: rational == int trips the C++20
            // rewritten-candidate recursion in boost::rational
            if (p.coeff.numerator() == 0 || p.k == 2 || p.k == 3) return c2;
            return std::nullopt;
        case ClaimId::Thm5:
            return std::nullopt;
    }
    throw std::logic_error("equality_threshold: unknown claim");
}

const char* claim_name(ClaimId id) {
    switch (id) {
        case ClaimId::Thm1: return "thm1";
        case ClaimId::Eq1: return "eq1";
        case ClaimId::Thm2: return "thm2";
        case ClaimId::Conj3: return "conj3";
        case ClaimId::Conj7: return "conj7";
        case ClaimId::Cor8: return "cor8";
        case ClaimId::Cor9: return "cor9";
        case ClaimId::Thm5: return "thm5";
        case ClaimId::Thm11: return "thm11";
        case ClaimId::Thm13: return "thm13";
    }
    throw std::logic_error("claim_name: unknown claim");
}

}  // namespace decomp
