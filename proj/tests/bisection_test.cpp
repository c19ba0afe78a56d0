#include <doctest.h>

#include <algorithm>
#include <vector>

#include "mbm/bisection.hpp"
#include "mbm/classifier.hpp"
#include "mbm/error.hpp"
#include "mbm/graph.hpp"
#include "testutil.hpp"

using mbm::Bisection;
using mbm::Graph;

TEST_CASE("sides, width, deficiency on a 6-cycle") {
    Graph g = testutil::cycle(6);
    Bisection b = Bisection::from_side(6, {0, 1, 2});
    CHECK(b.side_s_size() == 3);
    CHECK(b.side_t() == std::vector<int>{3, 4, 5});
    CHECK(mbm::width(g, b) == 2);
    CHECK(mbm::deficiency(g, b, 1) == 2);  // both neighbors on its side
    CHECK(mbm::deficiency(g, b, 0) == 0);  // one in, one out
    CHECK(mbm::deficiency(g, b, 3) == 0);
    std::vector<int> defs = mbm::deficiencies(g, b);
    CHECK(defs == std::vector<int>{0, 2, 0, 0, 2, 0});

    CHECK_THROWS_AS(Bisection::from_side(6, {0, 1}), mbm::Error);     // wrong size
    CHECK_THROWS_AS(Bisection::from_side(6, {0, 0, 1}), mbm::Error);  // duplicate
    CHECK_THROWS_AS(Bisection::from_side(6, {0, 1, 6}), mbm::Error);  // out of range
}

TEST_CASE("swap identity holds on seeded random triples") {
    mbm::SplitMix64 rng(0xb15ec7u);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 24);
        Graph g = testutil::random_graph(n, rng);
        Bisection b = Bisection::initial(n);
        // Scramble with a few random legal swaps first.
        std::vector<int> s = b.side_s(), t = b.side_t();
        for (int k = 0; k < 3 && !t.empty(); ++k) {
            int x = s[rng.next() % s.size()], y = t[rng.next() % t.size()];
            b.swap_pair(x, y);
            s = b.side_s();
            t = b.side_t();
        }
        if (t.empty()) continue;
        int x = s[rng.next() % s.size()], y = t[rng.next() % t.size()];
        long before = mbm::width(g, b);
        int predicted = mbm::deficiency(g, b, x) + mbm::deficiency(g, b, y) +
                        2 * (g.adjacent(x, y) ? 1 : 0);
        b.swap_pair(x, y);
        CHECK(mbm::width(g, b) - before == predicted);
    }
}

TEST_CASE("local search ends swap-locally-minimal; odd n large side nonneg") {
    mbm::SplitMix64 rng(0x10c41u);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.next() % 20);
        Graph g = testutil::random_graph(n, rng);
        Bisection b = mbm::local_search_bisection(g, Bisection::initial(n));
        std::vector<int> s = b.side_s(), t = b.side_t();
        for (int x : s)
            for (int y : t) {
                int delta = mbm::deficiency(g, b, x) + mbm::deficiency(g, b, y) +
                            2 * (g.adjacent(x, y) ? 1 : 0);
                CHECK(delta >= 0);
            }
        if (n % 2 == 1)
            for (int x : s) CHECK(mbm::deficiency(g, b, x) >= 0);
    }
}

TEST_CASE("M1 detection: low-width bisection with a non-adjacent served pair") {
    Graph m1 = testutil::m1_instance();
    Bisection b1 = Bisection::from_side(6, {0, 1, 2});
    // All deficiencies are zero here.
    CHECK(mbm::classify_bisection(m1, b1) == mbm::BisectionClass::Zero);
    auto ws = mbm::detect_special(m1, b1);
    bool found_m1 = false;
    for (const auto& w : ws)
        if (w.kind == mbm::SpecialKind::M1 && !found_m1) {
            found_m1 = true;
            CHECK(w.z == 0);
            CHECK(w.u == 4);
            CHECK(w.v == 5);
        }
    CHECK(found_m1);
}

TEST_CASE("M3 detection: all-zero clique side opposite def -1 full-degree nodes") {
    Graph m3 = testutil::m3_instance();
    Bisection b3 = Bisection::from_side(8, {0, 1, 2, 3});
    std::vector<int> defs = mbm::deficiencies(m3, b3);
    CHECK(defs == std::vector<int>{0, 0, 0, 0, -1, -1, 0, 0});
    auto ws = mbm::detect_special(m3, b3);
    bool found_m3 = false;
    for (const auto& w : ws)
        if (w.kind == mbm::SpecialKind::M3 && !found_m3) {
            found_m3 = true;
            CHECK(w.side == 0);  // the all-zero side
            CHECK(w.u == 4);     // lex-min def -1 node opposite
        }
    CHECK(found_m3);
}

TEST_CASE("M2 detection on the twin-clique instance") {
    Graph g = testutil::m2c_instance();
    Bisection b = Bisection::from_side(8, {0, 1, 2, 3});
    std::vector<int> defs = mbm::deficiencies(g, b);
    CHECK(defs == std::vector<int>{1, 1, -1, -1, 0, 0, 0, 0});
    bool found_m2 = false;
    for (const auto& w : mbm::detect_special(g, b))
        if (w.kind == mbm::SpecialKind::M2 && !found_m2) {
            found_m2 = true;
            CHECK(w.side == 0);
            CHECK(w.u == 0);  // lex-min positive-deficiency node
        }
    CHECK(found_m2);
}

TEST_CASE("escape leaves the deficient-against-clique trap with less width") {
    // Side {0,1,2,3} is a 4-cycle with 0 and 1 adjacent to the whole opposite
    // 4-clique; every swap is non-improving, no M shape applies, yet a
    // narrower bisection exists.
    Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3},          // 4-cycle side
                                    {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},  // clique
                                    {0, 4}, {0, 5}, {0, 6}, {0, 7},
                                    {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                    {2, 4}, {2, 5}, {3, 6}, {3, 7}});
    REQUIRE(mbm::classify_forbidden(g).kind == mbm::ForbiddenKind::NotForbidden);
    REQUIRE_FALSE(mbm::is_extremal(g).has_value());
    Bisection trapped = Bisection::from_side(8, {0, 1, 2, 3});
    REQUIRE(mbm::local_search_bisection(g, trapped) == trapped);  // genuinely stuck
    CHECK(mbm::detect_special(g, trapped).empty());
    long w0 = mbm::width(g, trapped);
    CHECK(w0 == 12);
    auto escaped = mbm::escape_strongly_minimal(g, trapped);
    REQUIRE(escaped.has_value());
    CHECK(mbm::width(g, *escaped) < w0);
}

TEST_CASE("escape declines bisections without the trap shape") {
    Graph g = testutil::m2c_instance();
    Bisection b = Bisection::from_side(8, {0, 1, 2, 3});
    CHECK_FALSE(mbm::escape_strongly_minimal(g, b).has_value());
}

TEST_CASE("zero_swap keeps the width and breaks the all-zero shape") {
    // Two disjoint 4-cycles; splitting each cycle in half is an all-zero
    // bisection without the non-adjacent served pair.
    Graph g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3},
                                    {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    Bisection b = Bisection::from_side(8, {0, 1, 4, 5});
    REQUIRE(mbm::classify_bisection(g, b) == mbm::BisectionClass::Zero);
    bool is_m1 = false;
    for (const auto& w : mbm::detect_special(g, b)) is_m1 |= w.kind == mbm::SpecialKind::M1;
    REQUIRE_FALSE(is_m1);
    auto swapped = mbm::zero_swap(g, b);
    REQUIRE(swapped.has_value());
    CHECK(mbm::width(g, *swapped) == mbm::width(g, b));
    CHECK(mbm::classify_bisection(g, *swapped) != mbm::BisectionClass::Zero);
}

TEST_CASE("zero_swap declines M1 bisections") {
    Graph m1 = testutil::m1_instance();
    Bisection b = Bisection::from_side(6, {0, 1, 2});
    REQUIRE(mbm::classify_bisection(m1, b) == mbm::BisectionClass::Zero);
    CHECK_FALSE(mbm::zero_swap(m1, b).has_value());
}

TEST_CASE("strongly minimal search finds witnesses within budget on random even graphs") {
    mbm::SplitMix64 rng(0x5ea5c4u);
    int done = 0;
    while (done < 40) {
        int n = 2 * (2 + static_cast<int>(rng.next() % 9));  // even, 4..20
        Graph g = testutil::random_graph(n, rng);
        if (mbm::classify_forbidden(g).kind != mbm::ForbiddenKind::NotForbidden) continue;
        if (mbm::is_extremal(g)) continue;
        mbm::StronglyMinimalResult res = mbm::strongly_minimal_search(g);
        CHECK(res.iterations <= mbm::strongly_minimal_budget(n));
        CHECK_FALSE(res.witnesses.empty());
        // The bisection really is swap-locally-minimal.
        for (int x : res.bisection.side_s())
            for (int y : res.bisection.side_t())
                CHECK(mbm::deficiency(g, res.bisection, x) +
                          mbm::deficiency(g, res.bisection, y) +
                          2 * (g.adjacent(x, y) ? 1 : 0) >=
                      0);
        ++done;
    }
}

TEST_CASE("strongly minimal search rejects odd order") {
    CHECK_THROWS_AS(mbm::strongly_minimal_search(testutil::path(5)), mbm::Error);
}
