#include <doctest.h>

#include "mbm/classifier.hpp"
#include "mbm/error.hpp"
#include "mbm/graph.hpp"
#include "mbm/oracle.hpp"
#include "testutil.hpp"

using mbm::Graph;
using mbm::Profile;

TEST_CASE("profile oracle on hand-checked cases") {
    CHECK(mbm::oracle_is_mbm_profile(testutil::path(3), Profile::from_string("010")));
    CHECK(mbm::oracle_is_mbm_profile(testutil::star(4), Profile::from_string("10000")));
    CHECK_FALSE(mbm::oracle_is_mbm_profile(testutil::cycle(4), Profile::from_string("1000")));
    CHECK_THROWS_AS(mbm::oracle_is_mbm_profile(testutil::path(4), Profile::from_string("1100")),
                    mbm::Error);
}

TEST_CASE("graph oracle on hand-checked cases") {
    CHECK(mbm::oracle_is_mbm_graph(testutil::path(3)));
    CHECK(mbm::oracle_is_mbm_graph(testutil::path(4)));
    CHECK(mbm::oracle_is_mbm_graph(testutil::star(4)));
    CHECK_FALSE(mbm::oracle_is_mbm_graph(testutil::clique(3)));   // odd clique
    CHECK_FALSE(mbm::oracle_is_mbm_graph(testutil::cycle(4)));    // all degrees n-2
    CHECK_FALSE(mbm::oracle_is_mbm_graph(Graph::from_edges(4, {})));
    CHECK_FALSE(mbm::oracle_is_mbm_graph(testutil::ef4_instance()));
}

TEST_CASE("reachable stable set on the 3-path from the center") {
    auto stable = mbm::reachable_stable_set(testutil::path(3), Profile::from_string("010"));
    // 010 can collapse to 000, stay mixed is impossible, or take over to 111.
    REQUIRE(stable.size() == 2);
    CHECK(stable.front().to_string() == "000");
    CHECK(stable.back().to_string() == "111");
}

TEST_CASE("graph enumeration is complete and ordered") {
    mbm::GraphEnumerator en(3);
    int count = 0;
    long edge_total = 0;
    while (en.next()) {
        CHECK(en.mask() == static_cast<std::uint64_t>(count));
        edge_total += en.current().edge_count();
        ++count;
    }
    CHECK(count == 8);            // 2^3 graphs on 3 nodes
    CHECK(en.total() == 8);
    CHECK(edge_total == 3 * 4);   // each of 3 edges present in half the graphs

    CHECK_THROWS_AS(mbm::GraphEnumerator(8), mbm::Error);  // guard
    mbm::GraphEnumerator big(8, 8);                        // explicit override
    CHECK(big.total() == std::uint64_t{1} << 28);
}

TEST_CASE("oracle guards refuse oversized inputs") {
    CHECK_THROWS_AS(mbm::oracle_is_mbm_graph(testutil::path(13)), mbm::Error);
    CHECK_THROWS_AS(mbm::reachable_stable_set(testutil::path(17), Profile(17)), mbm::Error);
}

TEST_CASE("classifier agrees with the oracle on every 4-node graph") {
    mbm::GraphEnumerator en(4);
    while (en.next()) {
        bool not_forbidden =
            mbm::classify_forbidden(en.current()).kind == mbm::ForbiddenKind::NotForbidden;
        CHECK(not_forbidden == mbm::oracle_is_mbm_graph(en.current()));
    }
}
