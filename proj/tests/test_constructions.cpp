#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "decomp/constructions.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/invariants.hpp"
#include "decomp/rational.hpp"

using namespace decomp;

TEST_CASE("base orders") {
    CHECK(base_order(2, 2) == 1);
    CHECK(base_order(3, 2) == 3);
    CHECK(base_order(4, 2) == 6);
    CHECK(base_order(5, 2) == 10);
    CHECK(base_order(2, 3) == 2);
    CHECK(base_order(3, 3) == 6);
    CHECK(base_order(3, 4) == 9);
}

TEST_CASE("label table covers each pair r-1 times with dense indices") {
    auto t32 = label_table(3, 2);
    REQUIRE(t32.size() == 3);
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < t32.size(); ++i) {
        CHECK(t32[i].index == static_cast<int>(i));
        CHECK(t32[i].copy == 1);
        CHECK(t32[i].i < t32[i].j);
        pairs.emplace(t32[i].i, t32[i].j);
    }
    CHECK(pairs == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

    auto t33 = label_table(3, 3);
    REQUIRE(t33.size() == 6);
    std::set<std::pair<int, int>> seen;
    int copies[2] = {0, 0};
    for (std::size_t i = 0; i < t33.size(); ++i) {
        CHECK(t33[i].index == static_cast<int>(i));
        REQUIRE(t33[i].copy >= 1);
        REQUIRE(t33[i].copy <= 2);
        ++copies[t33[i].copy - 1];
        seen.emplace(t33[i].i, t33[i].j);
    }
    CHECK(copies[0] == 3);
    CHECK(copies[1] == 3);
    CHECK(seen.size() == 3);
}

TEST_CASE("constructed decompositions hit the bound, frozen totals") {
    struct Row {
        int k, r, n;
        long long total;
    };
    for (auto [k, r, n, total] : {Row{3, 2, 3, 6}, Row{2, 3, 2, 4}, Row{3, 3, 6, 12},
                                  Row{2, 2, 5, 6}, Row{2, 3, 5, 7}, Row{4, 2, 6, 12},
                                  Row{4, 2, 8, 14}, Row{3, 2, 7, 10}}) {
        auto rep = verify_construction(k, r, n);
        CAPTURE(k);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(rep.total == Rational(total));
        CHECK(rep.rhs == Rational(total));
        CHECK(rep.meets_bound);
        CHECK(rep.equals_bound);
        REQUIRE(rep.part_omega.size() == static_cast<std::size_t>(k));
    }
}

TEST_CASE("construction report witnesses verify against the actual parts") {
    for (auto [k, r, n] : {std::tuple{3, 2, 5}, {2, 3, 4}, {4, 2, 7}}) {
        auto d = construct_extremal(k, r, n);
        auto rep = verify_construction(k, r, n);
        REQUIRE(rep.part_witness.size() == static_cast<std::size_t>(k));
        for (int t = 0; t < k; ++t) {
            auto part = d.part(t);
            CHECK(clique_number(part).value == rep.part_omega[static_cast<std::size_t>(t)]);
            CHECK(verify_clique_witness(part, rep.part_witness[static_cast<std::size_t>(t)],
                                        rep.part_omega[static_cast<std::size_t>(t)]));
        }
    }
}

TEST_CASE("construction partitions every edge") {
    auto d = construct_extremal(3, 2, 6);
    std::size_t total = 0;
    for (int t = 0; t < 3; ++t) total += d.part_size(t);
    CHECK(total == d.edge_count());
    CHECK(evaluate(d, ObjectiveSpec::clique_sum()) == Rational(6 + 3));
}

TEST_CASE("extra vertices all land in the first class") {
    // growing n by one adds exactly one to the first part's clique number
    auto r5 = verify_construction(3, 2, 5);
    auto r6 = verify_construction(3, 2, 6);
    CHECK(r6.part_omega[0] == r5.part_omega[0] + 1);
    CHECK(r6.part_omega[1] == r5.part_omega[1]);
    CHECK(r6.part_omega[2] == r5.part_omega[2]);
}

TEST_CASE("construction rejects parameters below the base order") {
    CHECK_THROWS_AS((void)construct_extremal(3, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)construct_extremal(2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)construct_extremal(0, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)construct_extremal(2, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)verify_construction(4, 2, 5), std::invalid_argument);
}

TEST_CASE("bound is met across a parameter grid") {
    for (int r : {2, 3}) {
        for (int k = 1; k <= 4; ++k) {
            if (r == 3 && k == 4) continue;  // base order 12 gets slow, covered above at r=2
            for (long long n = base_order(k, r); n <= base_order(k, r) + 2; ++n) {
                auto rep = verify_construction(k, r, static_cast<int>(n));
                CAPTURE(k);
                CAPTURE(r);
                CAPTURE(n);
                CHECK(rep.equals_bound);
            }
        }
    }
}
