#include "decomp/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "decomp/combinatorics.hpp"
#include "decomp/constructions.hpp"
#include "decomp/invariants.hpp"

namespace decomp {

namespace {

// inverse edge-index permutations for all n! vertex permutations: row p maps
// target position t to the source rank whose edge lands on t under p
using PermTables = std::vector<std::vector<std::uint32_t>>;

std::vector<std::uint32_t> inverse_edge_perm(const std::vector<int>& vperm,
                                             const std::vector<std::vector<int>>& evt,
                                             int n, int r) {
    std::vector<std::uint32_t> inv(evt.size());
    std::vector<int> image(static_cast<std::size_t>(r));
    for (std::uint32_t s = 0; s < evt.size(); ++s) {
        for (int i = 0; i < r; ++i)
            image[static_cast<std::size_t>(i)] = vperm[static_cast<std::size_t>(evt[s][static_cast<std::size_t>(i)])];
        std::sort(image.begin(), image.end());
        inv[rank_edge(image, n, r).rank] = s;
    }
    return inv;
}

std::shared_ptr<const PermTables> perm_tables(int n, int r) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const PermTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto evt = edge_vertex_table(n, r);
    auto tabs = std::make_shared<PermTables>();
    std::vector<int> vperm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vperm[static_cast<std::size_t>(i)] = i;
    do {
        tabs->push_back(inverse_edge_perm(vperm, evt, n, r));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    cache[key] = tabs;
    return tabs;
}

}  // namespace

Decomposition canonicalize(const Decomposition& d, const ObjectiveSpec& obj) {
    int n = d.order(), r = d.uniformity(), k = d.parts();
    int e = static_cast<int>(d.edge_count());
    if (e == 0) return d;
    const auto& colors = d.colors();

    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> cand(static_cast<std::size_t>(e));
    std::vector<int> mapped(static_cast<std::size_t>(k));
    std::vector<int> next(static_cast<std::size_t>(k));

    auto consider = [&](const std::vector<std::uint32_t>& inv) {
        std::fill(mapped.begin(), mapped.end(), -1);
        std::fill(next.begin(), next.end(), 0);
        int state = best.empty() ? -1 : 0;  // -1 better, 0 tied so far
        for (int t = 0; t < e; ++t) {
            int c = colors[inv[static_cast<std::size_t>(t)]];
            if (mapped[static_cast<std::size_t>(c)] < 0) {
                int bs = obj.block_start(c);
                mapped[static_cast<std::size_t>(c)] = bs + next[static_cast<std::size_t>(bs)]++;
            }
            auto mc = static_cast<std::uint8_t>(mapped[static_cast<std::size_t>(c)]);
            cand[static_cast<std::size_t>(t)] = mc;
            if (state == 0) {
                if (mc < best[static_cast<std::size_t>(t)]) state = -1;
                else if (mc > best[static_cast<std::size_t>(t)]) return;
            }
        }
        if (state < 0) best = cand;
    };

    if (n <= 8) {
        auto tabs = perm_tables(n, r);
        for (const auto& inv : *tabs) consider(inv);
    } else {
        auto evt = edge_vertex_table(n, r);
        std::vector<int> vperm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) vperm[static_cast<std::size_t>(i)] = i;
        do {
            consider(inverse_edge_perm(vperm, evt, n, r));
        } while (std::next_permutation(vperm.begin(), vperm.end()));
    }
    return {n, r, k, std::move(best)};
}

namespace {

struct Problem {
    int n = 0, r = 2, k = 1, e = 0;
    ObjectiveSpec obj;
    long long scale = 1;
    int floor_omega = 0;  // min(n, r-1), the vacuous-clique floor
    int floor_chi = 0;    // min(n, 1)
    bool prune = true;
    std::vector<std::vector<int>> evt;
    std::vector<int> block_of;   // block_start per color, precomputed
    std::vector<bool> need_chi;  // per part
};

// Per-part invariant cache keyed by the part's edge mask.  Dense tables up to
// 2^21 entries, hashing beyond that.
struct InvariantMemo {
    const Problem& pb;
    bool dense;
    std::vector<std::int16_t> omega_tab, chi_tab;
    std::unordered_map<std::uint64_t, int> omega_map, chi_map;

    explicit InvariantMemo(const Problem& p) : pb(p), dense(p.e <= 21) {
        if (dense) {
            omega_tab.assign(std::size_t{1} << pb.e, -1);
            bool any_chi = false;
            for (bool b : pb.need_chi) any_chi |= b;
            if (any_chi) chi_tab.assign(std::size_t{1} << pb.e, -1);
        }
    }

    Hypergraph build(std::uint64_t mask) const {
        Hypergraph h(pb.n, pb.r);
        for (int i = 0; i < pb.e; ++i)
            if (mask >> i & 1) h.edge_bits().set(static_cast<std::size_t>(i));
        return h;
    }

    int omega(std::uint64_t mask) {
        if (dense) {
            auto& slot = omega_tab[mask];
            if (slot < 0) slot = static_cast<std::int16_t>(clique_number(build(mask)).value);
            return slot;
        }
        auto it = omega_map.find(mask);
        if (it != omega_map.end()) return it->second;
        int v = clique_number(build(mask)).value;
        omega_map.emplace(mask, v);
        return v;
    }

    int chi(std::uint64_t mask) {
        if (dense) {
            auto& slot = chi_tab[mask];
            if (slot < 0) slot = static_cast<std::int16_t>(chromatic_number(build(mask)).value);
            return slot;
        }
        auto it = chi_map.find(mask);
        if (it != chi_map.end()) return it->second;
        int v = chromatic_number(build(mask)).value;
        chi_map.emplace(mask, v);
        return v;
    }
};

struct Shared {
    std::atomic<long long> best{LLONG_MIN};
    std::atomic<long long> budget{0};
    std::atomic<bool> aborted{false};
    std::atomic<long long> nodes{0};
    std::atomic<long long> pruned{0};

    void raise_best(long long val) {
        long long cur = best.load(std::memory_order_relaxed);
        while (cur < val && !best.compare_exchange_weak(cur, val)) {
        }
    }
};

struct Worker {
    const Problem& pb;
    Shared& sh;
    InvariantMemo memo;
    std::vector<std::uint8_t> col;
    std::vector<int> cnt;                // edges per color
    std::vector<std::vector<int>> dcnt;  // per color, per vertex assigned degree
    std::vector<int> rem;                // unassigned incident edges per vertex
    std::vector<std::uint64_t> pmask;    // per color edge mask
    long long best = LLONG_MIN;
    std::vector<std::vector<std::uint8_t>> hits;  // raw leaves at local best
    long long nodes = 0, pruned = 0;
    long long budget_tick = 0;

    Worker(const Problem& p, Shared& s)
        : pb(p), sh(s), memo(p),
          col(static_cast<std::size_t>(p.e), 0),
          cnt(static_cast<std::size_t>(p.k), 0),
          dcnt(static_cast<std::size_t>(p.k), std::vector<int>(static_cast<std::size_t>(p.n), 0)),
          rem(static_cast<std::size_t>(p.n), 0),
          pmask(static_cast<std::size_t>(p.k), 0) {
        for (int v = 0; v < pb.n; ++v)
            rem[static_cast<std::size_t>(v)] = static_cast<int>(binomial(pb.n - 1, pb.r - 1));
    }

    void assign(int t, int c) {
        col[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>(c);
        ++cnt[static_cast<std::size_t>(c)];
        pmask[static_cast<std::size_t>(c)] |= std::uint64_t{1} << t;
        for (int v : pb.evt[static_cast<std::size_t>(t)]) {
            --rem[static_cast<std::size_t>(v)];
            ++dcnt[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
        }
    }

    void unassign(int t, int c) {
        --cnt[static_cast<std::size_t>(c)];
        pmask[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << t);
        for (int v : pb.evt[static_cast<std::size_t>(t)]) {
            ++rem[static_cast<std::size_t>(v)];
            --dcnt[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)];
        }
    }

    // Upper bound for every completion of the current prefix: a part's final
    // positive set sits inside its current positive vertices plus the vertices
    // that still have unassigned incident edges, and omega/chi never exceed
    // that count (or the degenerate floors).
    long long bound() const {
        long long total = 0;
        for (int c = 0; c < pb.k; ++c) {
            long long p = 0, u = 0;
            const auto& dc = dcnt[static_cast<std::size_t>(c)];
            for (int v = 0; v < pb.n; ++v) {
                if (dc[static_cast<std::size_t>(v)] > 0) ++p;
                else if (rem[static_cast<std::size_t>(v)] > 0) ++u;
            }
            long long cap = p + u;
            total += pb.obj.part_value(c, std::max(cap, static_cast<long long>(pb.floor_omega)),
                                       std::max(cap, static_cast<long long>(pb.floor_chi)));
        }
        return total;
    }

    long long leaf_value() {
        long long total = 0;
        for (int c = 0; c < pb.k; ++c) {
            std::uint64_t mask = pmask[static_cast<std::size_t>(c)];
            long long w = memo.omega(mask);
            long long x = pb.need_chi[static_cast<std::size_t>(c)] ? memo.chi(mask) : 0;
            total += pb.obj.part_value(c, w, x);
        }
        return total;
    }

    bool budget_ok() {
        if (++budget_tick < 1024) return !sh.aborted.load(std::memory_order_relaxed);
        budget_tick = 0;
        if (sh.budget.fetch_sub(1024, std::memory_order_relaxed) <= 0) {
            sh.aborted.store(true, std::memory_order_relaxed);
            return false;
        }
        return !sh.aborted.load(std::memory_order_relaxed);
    }

    void record_leaf() {
        long long val = leaf_value();
        if (val > best) {
            best = val;
            hits.clear();
            hits.push_back(col);
            sh.raise_best(val);
        } else if (val == best) {
            hits.push_back(col);
        }
    }

    void dfs(int t) {
        ++nodes;
        if (!budget_ok()) return;
        if (t == pb.e) {
            record_leaf();
            return;
        }
        if (pb.prune) {
            long long incumbent = std::max(best, sh.best.load(std::memory_order_relaxed));
            if (bound() < incumbent) {
                ++pruned;
                return;
            }
        }
        for (int c = 0; c < pb.k; ++c) {
            // first-use breaking: a non-leading color needs its predecessor live
            if (c != pb.block_of[static_cast<std::size_t>(c)] && cnt[static_cast<std::size_t>(c - 1)] == 0)
                continue;
            assign(t, c);
            dfs(t + 1);
            unassign(t, c);
        }
    }
};

}  // namespace

bool estimated_leaves_within(int n, int r, int k, std::uint64_t limit) {
    return pow_leq(static_cast<std::uint64_t>(k), binomial(n, r), limit);
}

SearchReport optimize(int n, int r, int k, const ObjectiveSpec& obj, const SearchOptions& opts) {
    if (n < 0 || r < 2 || k < 1 || k > 255) throw std::invalid_argument("optimize: bad parameters");
    if (n > 64 || binomial(n, r) > 64)
        throw std::invalid_argument("optimize: needs C(n,r) <= 64");
    obj.validate_for(r, k);

    auto t0 = std::chrono::steady_clock::now();

    Problem pb;
    pb.n = n;
    pb.r = r;
    pb.k = k;
    pb.e = static_cast<int>(binomial(n, r));
    pb.obj = obj;
    pb.scale = obj.scale();
    pb.floor_omega = std::min(n, r - 1);
    pb.floor_chi = std::min(n, 1);
    pb.prune = !opts.disable_pruning;
    pb.evt = edge_vertex_table(n, r);
    pb.block_of.resize(static_cast<std::size_t>(k));
    pb.need_chi.resize(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        pb.block_of[static_cast<std::size_t>(c)] = obj.block_start(c);
        pb.need_chi[static_cast<std::size_t>(c)] = obj.needs_chi(c);
    }

    Shared sh;
    sh.budget.store(opts.node_budget, std::memory_order_relaxed);

    if (opts.seed_incumbent && pb.prune && n >= base_order(k, r)) {
        Rational seed = evaluate(construct_extremal(k, r, n), obj);
        sh.raise_best(seed.numerator() * (pb.scale / seed.denominator()));
    }

    // frontier of assignment prefixes; one DFS task per prefix
    int want = std::max(64, 8 * std::max(opts.threads, 1));
    std::vector<std::vector<std::uint8_t>> prefixes(1);
    int depth = 0;
    int target_depth = opts.split_depth >= 0 ? std::min(opts.split_depth, pb.e) : -1;
    auto grow = [&] {
        std::vector<std::vector<std::uint8_t>> nxt;
        std::vector<int> cnt(static_cast<std::size_t>(k));
        for (const auto& p : prefixes) {
            std::fill(cnt.begin(), cnt.end(), 0);
            for (std::uint8_t c : p) ++cnt[c];
            for (int c = 0; c < k; ++c) {
                if (c != pb.block_of[static_cast<std::size_t>(c)] && cnt[static_cast<std::size_t>(c - 1)] == 0)
                    continue;
                auto q = p;
                q.push_back(static_cast<std::uint8_t>(c));
                nxt.push_back(std::move(q));
            }
        }
        prefixes.swap(nxt);
        ++depth;
    };
    if (opts.threads > 1) {
        if (target_depth >= 0)
            while (depth < target_depth) grow();
        else
            while (depth < pb.e && static_cast<int>(prefixes.size()) < want) grow();
    }

    int ntasks = static_cast<int>(prefixes.size());
    std::vector<long long> task_best(static_cast<std::size_t>(ntasks), LLONG_MIN);
    std::vector<std::vector<std::vector<std::uint8_t>>> task_hits(static_cast<std::size_t>(ntasks));

    auto run_task = [&](int i) {
        Worker w(pb, sh);
        w.best = sh.best.load(std::memory_order_relaxed);  // seeded incumbent, if any
        const auto& p = prefixes[static_cast<std::size_t>(i)];
        for (int t = 0; t < static_cast<int>(p.size()); ++t) w.assign(t, p[static_cast<std::size_t>(t)]);
        w.dfs(static_cast<int>(p.size()));
        task_best[static_cast<std::size_t>(i)] = w.best;
        task_hits[static_cast<std::size_t>(i)] = std::move(w.hits);
        sh.nodes.fetch_add(w.nodes, std::memory_order_relaxed);
        sh.pruned.fetch_add(w.pruned, std::memory_order_relaxed);
    };

    if (opts.threads > 1 && ntasks > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.threads)
        for (int i = 0; i < ntasks; ++i) run_task(i);
#else
        for (int i = 0; i < ntasks; ++i) run_task(i);
#endif
    } else {
        for (int i = 0; i < ntasks; ++i) run_task(i);
    }

    long long global = LLONG_MIN;
    for (long long b : task_best) global = std::max(global, b);
    bool aborted = sh.aborted.load();
    if (global == LLONG_MIN) {
        // every leaf sat beyond the budget horizon; fall back to the seed
        global = sh.best.load();
        if (global == LLONG_MIN)
            throw std::runtime_error("optimize: node budget too small to reach any leaf");
    }

    SearchReport rep;
    rep.optimum = Rational(global, pb.scale);
    rep.exact = !aborted;
    rep.nodes_visited = sh.nodes.load();
    rep.nodes_pruned = sh.pruned.load();
    if (!opts.all_optima && opts.optima_cap <= 1) {
        // Single-witness mode: skip the per-hit canonicalization and keep the
        // least raw hit, which is deterministic regardless of task timing.
        const std::vector<std::uint8_t>* least = nullptr;
        std::size_t raw_count = 0;
        for (int i = 0; i < ntasks; ++i) {
            if (task_best[static_cast<std::size_t>(i)] != global) continue;
            for (const auto& raw : task_hits[static_cast<std::size_t>(i)]) {
                ++raw_count;
                if (least == nullptr || raw < *least) least = &raw;
            }
        }
        if (least != nullptr && opts.optima_cap == 1) {
            Decomposition d(n, r, k, *least);
            rep.optima.push_back(canonicalize(d, obj));
        }
        rep.optima_truncated = raw_count > rep.optima.size();
    } else {
        std::set<std::vector<std::uint8_t>> canon;
        for (int i = 0; i < ntasks; ++i) {
            if (task_best[static_cast<std::size_t>(i)] != global) continue;
            for (auto& raw : task_hits[static_cast<std::size_t>(i)]) {
                Decomposition d(n, r, k, std::move(raw));
                canon.insert(canonicalize(d, obj).colors());
            }
        }
        std::size_t cap = opts.all_optima
                              ? canon.size()
                              : static_cast<std::size_t>(std::max(opts.optima_cap, 0));
        for (const auto& cv : canon) {
            if (rep.optima.size() >= cap) {
                rep.optima_truncated = true;
                break;
            }
            rep.optima.emplace_back(n, r, k, cv);
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Decomposition normalize(const Decomposition& d, const ObjectiveSpec& obj) {
    if (obj.kind == ObjectiveSpec::Kind::ConvexSum)
        throw std::invalid_argument("normalize: defined for omega and chi_m objectives");
    obj.validate_for(d.uniformity(), d.parts());
    int k = d.parts();
    int m = obj.kind == ObjectiveSpec::Kind::MixedSum ? obj.m : 0;
    int donor_start = std::max(m, 1);
    if (k <= donor_start) return d;

    Decomposition cur = d;
    auto term = [&](const Decomposition& dd, int j) -> long long {
        Hypergraph h = dd.part(j);
        if (obj.needs_chi(j)) return chromatic_number(h).value;
        return clique_number(h).value;
    };
    std::vector<long long> val(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) val[static_cast<std::size_t>(j)] = term(cur, j);

    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = donor_start; j < k && !moved; ++j) {
            std::vector<std::size_t> ranks;
            cur.part(j).edge_bits().for_each_set([&](std::size_t t) { ranks.push_back(t); });
            for (std::size_t t : ranks) {
                Decomposition moved_d = cur.move_edge(EdgeId{static_cast<std::uint32_t>(t)}, 0);
                long long nj = term(moved_d, j);
                long long n0 = term(moved_d, 0);
                if (nj + n0 >= val[static_cast<std::size_t>(j)] + val[0]) {
                    cur = std::move(moved_d);
                    val[static_cast<std::size_t>(j)] = nj;
                    val[0] = n0;
                    moved = true;
                    break;
                }
            }
        }
    }
    return cur;
}

CompletenessCheck check_positive_parts_complete(const Decomposition& d, int m) {
    CompletenessCheck out;
    for (int j = std::max(m, 0); j < d.parts(); ++j) {
        Hypergraph part = d.part(j);
        Induced p = positive_part(part);
        if (p.graph.is_complete()) continue;
        out.ok = false;
        CompletenessViolation v;
        v.part = j;
        for (std::uint64_t t = 0; t < p.graph.edge_capacity(); ++t) {
            EdgeId e{static_cast<std::uint32_t>(t)};
            if (p.graph.has_edge(e)) continue;
            for (int lv : unrank_edge(e, p.graph.order(), p.graph.uniformity()))
                v.missing.push_back(p.vertices[static_cast<std::size_t>(lv)]);
            break;
        }
        out.violations.push_back(std::move(v));
    }
    return out;
}

}  // namespace decomp
