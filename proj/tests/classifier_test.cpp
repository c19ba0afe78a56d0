#include <doctest.h>

#include <utility>
#include <vector>

#include "mbm/classifier.hpp"
#include "mbm/graph.hpp"
#include "testutil.hpp"

using mbm::ForbiddenKind;
using mbm::Graph;

namespace {
ForbiddenKind kind_of(const Graph& g) { return mbm::classify_forbidden(g).kind; }

// n = 8: complete graph on {0..6} minus the edges (0,1) and (2,3), plus node 7
// adjacent to {0,1,2,3,6}.  Unique low-degree node 7 (degree 5 = n-3); node 6
// has full degree; 0..3 have degree n-2 with companions (0,1), (2,3); 4 and 5
// have degree n-2 with 7 itself as their non-neighbor.
Graph extremal_with_companions() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (!(i == 0 && j == 1) && !(i == 2 && j == 3)) edges.emplace_back(i, j);
    for (int v : {0, 1, 2, 3, 6}) edges.emplace_back(7, v);
    return Graph::from_edges(8, edges);
}
}  // namespace

TEST_CASE("edgeless graphs are the first forbidden family") {
    CHECK(kind_of(Graph::from_edges(1, {})) == ForbiddenKind::F1);
    CHECK(kind_of(Graph::from_edges(2, {})) == ForbiddenKind::F1);
    CHECK(kind_of(Graph::from_edges(7, {})) == ForbiddenKind::F1);
}

TEST_CASE("odd cliques are forbidden; odd non-cliques are not") {
    CHECK(kind_of(testutil::clique(3)) == ForbiddenKind::OF2);
    CHECK(kind_of(testutil::clique(5)) == ForbiddenKind::OF2);
    CHECK(kind_of(testutil::clique(7)) == ForbiddenKind::OF2);
    CHECK(kind_of(testutil::path(3)) == ForbiddenKind::NotForbidden);
    CHECK(kind_of(testutil::cycle(5)) == ForbiddenKind::NotForbidden);
    CHECK(kind_of(testutil::star(4)) == ForbiddenKind::NotForbidden);
}

TEST_CASE("even graphs with minimum degree n-2 are forbidden") {
    CHECK(kind_of(testutil::cycle(4)) == ForbiddenKind::EF2);  // all degrees 2 = n-2
    CHECK(kind_of(testutil::clique(4)) == ForbiddenKind::EF2);
    CHECK(kind_of(testutil::clique(6)) == ForbiddenKind::EF2);
    // K6 minus a perfect matching: all degrees 4 = n-2.
    Graph k6mm = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                                       {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    CHECK(kind_of(k6mm) == ForbiddenKind::EF2);
}

TEST_CASE("near-clique plus a degree <= 2 node is forbidden") {
    // K5 plus one pendant node.
    Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                    {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 0}});
    mbm::ForbiddenClass fc = mbm::classify_forbidden(g);
    CHECK(fc.kind == ForbiddenKind::EF3);
    CHECK(fc.witness == 5);
    // Degree 3 on the extra node leaves the family.
    Graph h = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                                    {1, 4}, {2, 3}, {2, 4}, {3, 4}, {5, 0}, {5, 1}, {5, 2}});
    CHECK(kind_of(h) == ForbiddenKind::NotForbidden);
}

TEST_CASE("n-1 nodes of degree exactly n-2 not forming a clique") {
    mbm::ForbiddenClass fc = mbm::classify_forbidden(testutil::ef4_instance());
    CHECK(fc.kind == ForbiddenKind::EF4);
    CHECK(fc.witness == 5);
    // Removing two more clique edges drops the degrees below n-2.
    Graph h = Graph::from_edges(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                    {2, 3}, {2, 4}, {5, 0}, {5, 1}});
    CHECK(kind_of(h) == ForbiddenKind::NotForbidden);
}

TEST_CASE("precedence: the first matching family wins") {
    // K4 has every degree >= n-2 and also contains triangle-plus-node shapes;
    // it reports the degree family.
    CHECK(kind_of(testutil::clique(4)) == ForbiddenKind::EF2);
    // A single edge on two nodes: degrees 1 >= n-2 = 0, so eF2, not F1 (which
    // needs zero edges).
    CHECK(kind_of(Graph::from_edges(2, {{0, 1}})) == ForbiddenKind::EF2);
}

TEST_CASE("extremal recognition and partition") {
    auto part = mbm::is_extremal(testutil::extremal_instance());
    REQUIRE(part.has_value());
    CHECK(part->u == 5);
    CHECK(part->a_set == std::vector<int>{0, 1, 2});
    CHECK(part->b_set.empty());
    CHECK(part->c_set == std::vector<int>{3, 4});

    // Two low-degree nodes: not extremal.
    CHECK_FALSE(mbm::is_extremal(testutil::m3_instance()).has_value());
    CHECK_FALSE(mbm::is_extremal(testutil::m2c_instance()).has_value());
}

TEST_CASE("extremal companion pairs cover the near-full neighbors of u") {
    Graph g = extremal_with_companions();
    REQUIRE(kind_of(g) == ForbiddenKind::NotForbidden);
    auto part = mbm::is_extremal(g);
    REQUIRE(part.has_value());
    CHECK(part->u == 7);
    CHECK(part->a_set == std::vector<int>{6});
    CHECK(part->b_set == std::vector<int>{0, 1, 2, 3});
    CHECK(part->c_set == std::vector<int>{4, 5});
    REQUIRE(part->companion_pairs.size() == 2);
    for (auto [a, b] : part->companion_pairs) {
        CHECK_FALSE(g.adjacent(a, b));
        CHECK(g.adjacent(a, part->u));
        CHECK(g.adjacent(b, part->u));
        CHECK(g.degree(a) == 6);
        CHECK(g.degree(b) == 6);
    }
}
