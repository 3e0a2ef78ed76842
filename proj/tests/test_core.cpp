#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "decomp/combinatorics.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/hypergraph.hpp"
#include "decomp/json_io.hpp"
#include "decomp/rational.hpp"

using namespace decomp;

namespace {

// All r-subsets of {0..n-1} in colex order, generated the slow way: enumerate
// lexicographically, then sort by the reversed-tuple comparison that defines
// colex.
std::vector<std::vector<int>> colex_oracle(int n, int r) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == r) {
            all.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
                return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
        return false;
    });
    return all;
}

}  // namespace

TEST_CASE("binomial agrees with the Pascal recurrence") {
    constexpr int N = 20;
    std::uint64_t pas[N + 1][N + 1] = {};
    for (int n = 0; n <= N; ++n) {
        pas[n][0] = 1;
        for (int r = 1; r <= n; ++r) pas[n][r] = pas[n - 1][r - 1] + (r <= n - 1 ? pas[n - 1][r] : 0);
    }
    for (int n = 0; n <= N; ++n)
        for (int r = 0; r <= N; ++r) CHECK(binomial(n, r) == (r <= n ? pas[n][r] : 0));
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("factorial small values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("pow_leq thresholds without overflow") {
    CHECK(pow_leq(2, 10, 1024));
    CHECK(!pow_leq(2, 10, 1023));
    CHECK(pow_leq(1, 1000000, 1));
    CHECK(pow_leq(7, 0, 1));
    CHECK(!pow_leq(10, 30, UINT64_MAX / 2));  // 10^30 dwarfs any 64-bit limit
    CHECK(pow_leq(2, 63, UINT64_MAX));
}

TEST_CASE("colex rank frozen values") {
    std::vector<int> e01{0, 1}, e02{0, 2}, e12{1, 2}, e23{2, 3}, t012{0, 1, 2};
    CHECK(rank_rset(e01, 4, 2) == 0);
    CHECK(rank_rset(e02, 4, 2) == 1);
    CHECK(rank_rset(e12, 4, 2) == 2);
    CHECK(rank_rset(e23, 4, 2) == 5);
    CHECK(rank_rset(t012, 5, 3) == 0);
    CHECK(unrank_rset(5, 4, 2) == std::vector<int>{2, 3});
    CHECK(unrank_rset(0, 5, 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("colex enumeration and rank round trip match the oracle") {
    for (int n : {4, 5, 8, 12}) {
        for (int r : {2, 3, 4}) {
            if (r > n) continue;
            auto oracle = colex_oracle(n, r);
            auto got = all_rsets_colex(n, r);
            REQUIRE(got.size() == oracle.size());
            CHECK(got == oracle);
            for (std::uint32_t t = 0; t < got.size(); ++t) {
                CHECK(rank_rset(got[t], n, r) == t);
                CHECK(unrank_rset(t, n, r) == got[t]);
            }
        }
    }
}

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.size() == 130);
    CHECK(!b.any());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.test(64));
    CHECK(!b.test(63));
    b.reset(64);
    CHECK(b.count() == 2);
    std::vector<std::size_t> seen;
    b.for_each_set([&](std::size_t i) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{0, 129});
    CHECK(b.low_word() == 1);
    Bitset c(130);
    c.set(0);
    c.set(129);
    CHECK(b == c);
}

TEST_CASE("complete hypergraphs") {
    auto g = Hypergraph::complete(5, 2);
    CHECK(g.order() == 5);
    CHECK(g.size() == 10);
    CHECK(g.is_complete());
    for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 4);
    CHECK(g.positive_vertices() == std::vector<int>{0, 1, 2, 3, 4});

    auto h = Hypergraph::complete(5, 3);
    CHECK(h.size() == 10);
    for (int v = 0; v < 5; ++v) CHECK(h.degree(v) == 6);
}

TEST_CASE("edge mutation has value semantics") {
    Hypergraph g(4, 2);
    std::vector<int> e{0, 1};
    auto g2 = g.add_edge(e);
    CHECK(g.size() == 0);
    CHECK(g2.size() == 1);
    CHECK(g2.has_edge(e));
    CHECK(!g2.has_edge(EdgeId{3}));
    auto g3 = g2.remove_edge(e);
    CHECK(g3 == g);
    CHECK(g2.positive_vertices() == std::vector<int>{0, 1});
}

TEST_CASE("induced, minus and positive part reindex correctly") {
    // 5-cycle on {0..4} plus isolated vertices 5, 6
    Hypergraph g(7, 2);
    for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}) {
        std::vector<int> e{a, b};
        g = g.add_edge(e);
    }
    auto pos = positive_part(g);
    CHECK(pos.graph.order() == 5);
    CHECK(pos.graph.size() == 5);
    CHECK(pos.vertices == std::vector<int>{0, 1, 2, 3, 4});

    std::vector<int> x{0, 1, 2};
    auto sub = induced(g, x);
    CHECK(sub.graph.order() == 3);
    CHECK(sub.graph.size() == 2);  // edges 01 and 12 survive
    CHECK(sub.vertices == std::vector<int>{0, 1, 2});

    auto rest = minus(g, x);
    CHECK(rest.graph.order() == 4);
    CHECK(rest.graph.size() == 1);  // only 34 lies outside {0,1,2}
    CHECK(rest.vertices == std::vector<int>{3, 4, 5, 6});

    std::vector<int> dup{1, 1};
    CHECK_THROWS_AS((void)induced(g, dup), std::invalid_argument);
    std::vector<int> oob{0, 9};
    CHECK_THROWS_AS((void)induced(g, oob), std::out_of_range);
}

TEST_CASE("decomposition partition bookkeeping") {
    Decomposition d(4, 2, 3);
    CHECK(d.order() == 4);
    CHECK(d.parts() == 3);
    CHECK(d.edge_count() == 6);
    std::size_t total = 0;
    for (int t = 0; t < 3; ++t) total += d.part_size(t);
    CHECK(total == 6);

    auto moved = d.move_edge(EdgeId{0}, 2);
    CHECK(d.color_of(EdgeId{0}) == 0);  // value semantics, d untouched
    CHECK(moved.color_of(EdgeId{0}) == 2);
    CHECK(moved.part_size(0) == 5);
    CHECK(moved.part_size(2) == 1);
    CHECK(moved.part(2).has_edge(EdgeId{0}));
    CHECK(!moved.part(0).has_edge(EdgeId{0}));

    std::vector<int> perm{2, 0, 1};  // color c becomes perm[c]
    auto d2 = moved.permute_parts(perm);
    CHECK(d2.color_of(EdgeId{0}) == 1);
    CHECK(d2.part_size(1) == 1);
    CHECK(d2.part(1).has_edge(EdgeId{0}));
    CHECK(d2.part_size(2) == 5);
    std::size_t total2 = 0;
    for (int t = 0; t < 3; ++t) total2 += d2.part_size(t);
    CHECK(total2 == 6);
}

TEST_CASE("random decompositions are seed-deterministic and in range") {
    std::mt19937_64 a(42), b(42);
    auto d1 = random_decomposition(6, 2, 4, a);
    auto d2 = random_decomposition(6, 2, 4, b);
    CHECK(d1.colors() == d2.colors());
    for (std::uint8_t c : d1.colors()) CHECK(c < 4);
    auto d3 = random_decomposition(6, 2, 4, a);
    CHECK(d1.colors() != d3.colors());  // stream advances
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    for (const char* bad : {"", "1/0", "x", "1/", "/2", "1/2/3", "2.5"})
        CHECK_THROWS_AS((void)parse_rational(bad), std::invalid_argument);
}

TEST_CASE("decomposition json round trips in both shapes") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 5; ++i) {
        auto d = random_decomposition(5, 2, 3, rng);
        auto back = decomposition_from_json(decomposition_to_json(d));
        CHECK(back.colors() == d.colors());
        CHECK(back.order() == 5);
        auto exp = decomposition_to_explicit_json(d);
        REQUIRE(exp.contains("edges"));
        CHECK(exp["edges"].size() == d.edge_count());
        auto back2 = decomposition_from_json(exp);
        CHECK(back2.colors() == d.colors());
    }
    // a 3-uniform one as well
    std::mt19937_64 rng2(9);
    auto d3 = random_decomposition(5, 3, 2, rng2);
    CHECK(decomposition_from_json(decomposition_to_explicit_json(d3)).colors() == d3.colors());
}

TEST_CASE("decomposition json rejects malformed input") {
    using nlohmann::json;
    auto base = decomposition_to_json(Decomposition(4, 2, 2));
    auto mutate = [&](auto&& fn) {
        json j = base;
        fn(j);
        CHECK_THROWS_AS((void)decomposition_from_json(j), std::invalid_argument);
    };
    mutate([](json& j) { j.erase("colors"); });
    mutate([](json& j) { j["colors"].push_back(0); });
    mutate([](json& j) { j["colors"][0] = 5; });
    mutate([](json& j) { j["colors"][0] = -1; });
    mutate([](json& j) { j["k"] = 0; });
    mutate([](json& j) { j["r"] = 1; });
    mutate([](json& j) { j["n"] = -2; });

    auto exp = decomposition_to_explicit_json(Decomposition(4, 2, 2));
    json dup = exp;
    dup["edges"][1] = dup["edges"][0];
    CHECK_THROWS_AS((void)decomposition_from_json(dup), std::invalid_argument);
    json missing = exp;
    missing["edges"].erase(0);
    CHECK_THROWS_AS((void)decomposition_from_json(missing), std::invalid_argument);
}

TEST_CASE("witness json round trips") {
    CliqueWitness cw;
    cw.vertices = {0, 2, 4};
    auto cj = clique_witness_to_json(cw);
    CHECK(clique_witness_from_json(cj).vertices == cw.vertices);

    ColoringWitness xw;
    xw.labels = {0, 1, 0, 2};
    auto xj = coloring_witness_to_json(xw);
    CHECK(coloring_witness_from_json(xj).labels == xw.labels);

    nlohmann::json bad = {{"type", "clique"}};
    CHECK_THROWS_AS((void)clique_witness_from_json(bad), std::invalid_argument);
    nlohmann::json wrong = {{"type", "coloring"}, {"data", {0, 1}}};
    CHECK_THROWS_AS((void)clique_witness_from_json(wrong), std::invalid_argument);
}
