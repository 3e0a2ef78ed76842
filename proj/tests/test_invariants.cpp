#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/hypergraph.hpp"
#include "decomp/invariants.hpp"
#include "decomp/objective.hpp"
#include "decomp/rational.hpp"
#include "naive.hpp"

using namespace decomp;

namespace {

Hypergraph from_pairs(int n, std::initializer_list<std::pair<int, int>> pairs) {
    Hypergraph g(n, 2);
    for (auto [a, b] : pairs) {
        std::vector<int> e{a, b};
        g = g.add_edge(e);
    }
    return g;
}

Hypergraph cycle(int n) {
    Hypergraph g(n, 2);
    for (int v = 0; v < n; ++v) {
        std::vector<int> e{std::min(v, (v + 1) % n), std::max(v, (v + 1) % n)};
        g = g.add_edge(e);
    }
    return g;
}

Hypergraph petersen() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -> i+5
    Hypergraph g(10, 2);
    auto add = [&](int a, int b) {
        std::vector<int> e{std::min(a, b), std::max(a, b)};
        g = g.add_edge(e);
    };
    for (int i = 0; i < 5; ++i) {
        add(i, (i + 1) % 5);
        add(i + 5, ((i + 2) % 5) + 5);
        add(i, i + 5);
    }
    return g;
}

Hypergraph graph_from_mask(int n, std::uint64_t mask, int r = 2) {
    Hypergraph g(n, r);
    for (std::uint64_t t = 0; t < g.edge_capacity(); ++t)
        if (mask >> t & 1) g.edge_bits().set(static_cast<std::size_t>(t));
    return g;
}

}  // namespace

TEST_CASE("clique number frozen values") {
    CHECK(clique_number(Hypergraph::complete(5, 2)).value == 5);
    CHECK(clique_number(cycle(5)).value == 2);
    CHECK(clique_number(Hypergraph::complete(4, 3)).value == 4);

    // all triples on {0..3} except {1,2,3}: the best 3-uniform clique has 3 vertices
    auto h = Hypergraph::complete(4, 3);
    std::vector<int> t{1, 2, 3};
    h = h.remove_edge(t);
    CHECK(clique_number(h).value == 3);
}

TEST_CASE("degenerate conventions") {
    CHECK(clique_number(Hypergraph(3, 2)).value == 1);
    CHECK(chromatic_number(Hypergraph(3, 2)).value == 1);
    CHECK(clique_number(Hypergraph(0, 2)).value == 0);
    CHECK(chromatic_number(Hypergraph(0, 2)).value == 0);
    CHECK(clique_number(Hypergraph(4, 3)).value == 2);
    CHECK(clique_number(Hypergraph(1, 3)).value == 1);
    CHECK(clique_number(Hypergraph(2, 4)).value == 2);
}

TEST_CASE("clique witnesses check out") {
    for (const auto& g : {Hypergraph::complete(6, 2), cycle(5), petersen(), Hypergraph::complete(5, 3)}) {
        auto res = clique_number(g);
        CHECK(verify_clique_witness(g, res.witness, res.value));
        CHECK(!verify_clique_witness(g, res.witness, res.value + 1));
    }
    auto c5 = cycle(5);
    CliqueWitness notclique;
    notclique.vertices = {0, 1, 2};  // 02 missing in the cycle
    CHECK(!verify_clique_witness(c5, notclique, 3));
    CliqueWitness dup;
    dup.vertices = {1, 1};
    CHECK(!verify_clique_witness(c5, dup, 2));
}

TEST_CASE("chromatic number frozen values and certificates") {
    auto k4 = chromatic_number(Hypergraph::complete(4, 2));
    CHECK(k4.value == 4);
    CHECK(k4.clique_lower_bound == 4);
    CHECK(!k4.exhausted_below);
    CHECK(verify_coloring_witness(Hypergraph::complete(4, 2), k4.witness, 4));

    auto c5 = chromatic_number(cycle(5));
    CHECK(c5.value == 3);
    CHECK(c5.clique_lower_bound == 2);
    CHECK(c5.exhausted_below);
    CHECK(verify_coloring_witness(cycle(5), c5.witness, 3));
    CHECK(!colorable_with(cycle(5), 2));
    CHECK(colorable_with(cycle(5), 3));

    CHECK(chromatic_number(petersen()).value == 3);
    CHECK(chromatic_number(cycle(6)).value == 2);

    auto bad = ColoringWitness{{0, 0, 1, 1}};
    CHECK(!verify_coloring_witness(Hypergraph::complete(4, 2), bad, 2));
    CHECK_THROWS_AS((void)chromatic_number(Hypergraph(4, 3)), std::invalid_argument);
}

TEST_CASE("solvers match the naive oracles on every n=4 graph") {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        auto g = graph_from_mask(4, mask);
        CHECK(clique_number(g).value == reference::clique_number_brute(g));
        CHECK(chromatic_number(g).value == reference::chromatic_number_brute(g));
    }
}

TEST_CASE("solvers match the naive oracles on sampled n=6 graphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto g = graph_from_mask(6, rng() & ((1u << 15) - 1));
        CHECK(clique_number(g).value == reference::clique_number_brute(g));
        CHECK(chromatic_number(g).value == reference::chromatic_number_brute(g));
    }
}

TEST_CASE("hypergraph clique solver matches brute force on 3-uniform samples") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        auto g = graph_from_mask(5, rng() & ((1u << 10) - 1), 3);
        CHECK(clique_number(g).value == reference::clique_number_brute(g));
    }
}

TEST_CASE("chromatic number dominates clique number") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto g = graph_from_mask(7, rng() & ((1u << 21) - 1));
        CHECK(chromatic_number(g).value >= clique_number(g).value);
    }
}

TEST_CASE("chromatic subadditivity across a vertex split") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto g = graph_from_mask(6, rng() & ((1u << 15) - 1));
        std::vector<int> x;
        for (int v = 0; v < 6; ++v)
            if (rng() & 1) x.push_back(v);
        int whole = chromatic_number(g).value;
        int outside = chromatic_number(minus(g, x).graph).value;
        int inside = chromatic_number(induced(g, x).graph).value;
        CHECK(whole <= outside + inside);
    }
}

TEST_CASE("evaluate frozen values on the one-part-of-K3 decomposition") {
    Decomposition d(3, 2, 2);  // all edges in part 0, part 1 empty
    CHECK(evaluate(d, ObjectiveSpec::clique_sum()) == Rational(4));
    CHECK(evaluate(d, ObjectiveSpec::mixed_sum(2)) == Rational(4));
    CHECK(evaluate(d, ObjectiveSpec::mixed_sum(1)) == Rational(4));
    CHECK(evaluate(d, ObjectiveSpec::convex_sum(Rational(1, 2))) == Rational(4));
    CHECK(evaluate(d, ObjectiveSpec::convex_sum(Rational(0))) == Rational(4));
    CHECK(evaluate(d, ObjectiveSpec::convex_sum(Rational(1))) == Rational(4));
}

TEST_CASE("evaluate agrees with the naive evaluator on random decompositions") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
        auto d = random_decomposition(5, 2, 3, rng);
        for (const auto& obj : {ObjectiveSpec::clique_sum(), ObjectiveSpec::mixed_sum(1),
                                ObjectiveSpec::mixed_sum(3), ObjectiveSpec::convex_sum(Rational(2, 5))})
            CHECK(evaluate(d, obj) == reference::evaluate_brute(d, obj));
    }
}

TEST_CASE("part values fill chi only where the objective needs it") {
    Decomposition d(4, 2, 3);
    auto pv = part_values(d, ObjectiveSpec::mixed_sum(1));
    REQUIRE(pv.omega.size() == 3);
    REQUIRE(pv.chi.size() == 3);
    CHECK(pv.omega[0] == 4);
    CHECK(pv.chi[0] == 4);
    CHECK(pv.chi[1] == -1);
    CHECK(pv.chi[2] == -1);
    CHECK(pv.omega[1] == 1);

    auto pv2 = part_values(d, ObjectiveSpec::convex_sum(Rational(1, 3)));
    for (int t = 0; t < 3; ++t) CHECK(pv2.chi[static_cast<std::size_t>(t)] >= 1);
}

TEST_CASE("bound right-hand sides, frozen") {
    auto P = [](int k, int n) {
        BoundParams p;
        p.k = k;
        p.n = n;
        return p;
    };
    CHECK(bound_rhs(ClaimId::Thm1, P(3, 6)) == Rational(9));
    CHECK(bound_rhs(ClaimId::Thm1, P(2, 5)) == Rational(6));
    CHECK(bound_rhs(ClaimId::Thm2, P(3, 6)) == Rational(9));
    CHECK(bound_rhs(ClaimId::Thm2, P(4, 5)) == Rational(17));
    CHECK(bound_rhs(ClaimId::Conj3, P(4, 5)) == Rational(11));
    CHECK(bound_rhs(ClaimId::Cor8, P(4, 5)) == Rational(11));

    auto p = P(3, 6);
    p.coeff = Rational(1);
    CHECK(bound_rhs(ClaimId::Eq1, p) == Rational(9));
    p.coeff = Rational(0);
    CHECK(bound_rhs(ClaimId::Eq1, p) == Rational(9));
    auto q = P(4, 5);
    q.coeff = Rational(1, 2);
    CHECK(bound_rhs(ClaimId::Eq1, q) == Rational(14));  // 5 + 6/2 + 12/2

    auto c7 = P(4, 5);
    c7.m = 2;
    CHECK(bound_rhs(ClaimId::Conj7, c7) == Rational(11));

    auto t5 = P(4, 5);
    t5.m = 2;
    CHECK(bound_rhs(ClaimId::Thm5, t5) == Rational(11));  // 5 + 6 + 1 - 1
    t5.f_m = Rational(7, 2);
    CHECK(bound_rhs(ClaimId::Thm5, t5) == Rational(27, 2));

    auto t11 = P(4, 5);
    t11.coeff = Rational(3, 4);
    CHECK(bound_rhs(ClaimId::Thm11, t11) == Rational(11));

    auto t13 = P(2, 5);
    t13.r = 3;
    CHECK(bound_rhs(ClaimId::Thm13, t13) == Rational(7));
    auto t13b = P(3, 4);
    t13b.r = 4;
    CHECK(bound_rhs(ClaimId::Thm13, t13b) == Rational(13));
}

TEST_CASE("bounds reject out-of-hypothesis parameters") {
    auto P = [](int k, int n) {
        BoundParams p;
        p.k = k;
        p.n = n;
        return p;
    };
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Thm1, P(0, 4)), HypothesisError);
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Thm1, P(2, 0)), HypothesisError);
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Cor9, P(2, 4)), HypothesisError);

    auto e = P(3, 4);
    e.coeff = Rational(3, 2);
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Eq1, e), HypothesisError);
    e.coeff = Rational(-1, 4);
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Eq1, e), HypothesisError);

    auto c = P(4, 4);
    c.m = 5;
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Conj7, c), HypothesisError);

    auto t = P(4, 4);
    t.coeff = Rational(1);  // above 3/4
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Thm11, t), HypothesisError);
    auto t2 = P(2, 4);
    t2.coeff = Rational(1);  // min(1, 3/2) = 1 is allowed
    CHECK(bound_rhs(ClaimId::Thm11, t2) == Rational(5));

    auto h = P(2, 4);
    h.r = 1;
    CHECK_THROWS_AS((void)bound_rhs(ClaimId::Thm13, h), HypothesisError);
}

TEST_CASE("claim objectives pick the right kind") {
    BoundParams p;
    p.k = 3;
    p.n = 4;
    p.m = 2;
    p.coeff = Rational(1, 2);
    CHECK(claim_objective(ClaimId::Thm1, p).to_string() == "omega");
    CHECK(claim_objective(ClaimId::Thm13, p).to_string() == "omega");
    CHECK(claim_objective(ClaimId::Thm2, p).to_string() == "chi_m:3");
    CHECK(claim_objective(ClaimId::Conj3, p).to_string() == "chi_m:3");
    CHECK(claim_objective(ClaimId::Conj7, p).to_string() == "chi_m:2");
    CHECK(claim_objective(ClaimId::Cor8, p).to_string() == "chi_m:1");
    CHECK(claim_objective(ClaimId::Cor9, p).to_string() == "chi_m:3");
    CHECK(claim_objective(ClaimId::Eq1, p).to_string() == "a_r:1/2");
    CHECK(claim_objective(ClaimId::Thm11, p).to_string() == "a_r:1/2");
}

TEST_CASE("equality thresholds, frozen") {
    auto P = [](int k) {
        BoundParams p;
        p.k = k;
        p.n = 1;
        return p;
    };
    CHECK(equality_threshold(ClaimId::Thm1, P(4)) == 6);
    CHECK(equality_threshold(ClaimId::Conj3, P(3)) == 3);
    CHECK(equality_threshold(ClaimId::Cor8, P(4)) == 6);
    CHECK(equality_threshold(ClaimId::Thm2, P(3)) == 3);
    CHECK(!equality_threshold(ClaimId::Thm2, P(4)).has_value());
    CHECK(!equality_threshold(ClaimId::Thm5, P(3)).has_value());
    CHECK(equality_threshold(ClaimId::Thm11, P(5)) == 10);

    auto e = P(5);
    e.coeff = Rational(0);
    CHECK(equality_threshold(ClaimId::Eq1, e) == 10);
    e.coeff = Rational(1, 2);
    CHECK(!equality_threshold(ClaimId::Eq1, e).has_value());
    auto e2 = P(2);
    e2.coeff = Rational(1, 2);
    CHECK(equality_threshold(ClaimId::Eq1, e2) == 1);

    auto t = P(3);
    t.r = 3;
    CHECK(equality_threshold(ClaimId::Thm13, t) == 6);
}

TEST_CASE("claim names and preset slack values") {
    CHECK(std::string(claim_name(ClaimId::Thm1)) == "thm1");
    CHECK(std::string(claim_name(ClaimId::Thm13)) == "thm13");
    CHECK(preset_f(0) == Rational(0));
    CHECK(preset_f(1) == Rational(0));
    CHECK(preset_f(2) == Rational(1));
    CHECK(preset_f(3) == Rational(3));
    CHECK(preset_f(4) == Rational(12));
    CHECK_THROWS_AS((void)preset_f(-1), std::invalid_argument);
}
