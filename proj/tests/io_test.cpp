#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "mbm/constructor.hpp"
#include "mbm/decider.hpp"
#include "mbm/error.hpp"
#include "mbm/graph.hpp"
#include "mbm/io.hpp"
#include "testutil.hpp"

using mbm::Graph;
using mbm::Profile;

TEST_CASE("edge list reading: comments, blanks, validation") {
    std::istringstream ok(
        "# a path\n"
        "\n"
        "4 3\n"
        "0 1\n"
        "  # midway remark\n"
        "1 2\n"
        "2 3\n");
    Graph g = mbm::read_graph_text(ok);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(1, 2));

    std::istringstream missing("4 3\n0 1\n1 2\n");
    CHECK_THROWS_AS(mbm::read_graph_text(missing), mbm::Error);
    std::istringstream bad_header("x y\n");
    CHECK_THROWS_AS(mbm::read_graph_text(bad_header), mbm::Error);
    std::istringstream out_of_range("2 1\n0 5\n");
    CHECK_THROWS_AS(mbm::read_graph_text(out_of_range), mbm::Error);
    std::istringstream empty("");
    CHECK_THROWS_AS(mbm::read_graph_text(empty), mbm::Error);
    std::istringstream bad_edge("2 1\n0 x\n");
    CHECK_THROWS_AS(mbm::read_graph_text(bad_edge), mbm::Error);
}

TEST_CASE("edge list writing round-trips and orders edges ascending") {
    Graph g = Graph::from_edges(5, {{4, 3}, {0, 2}, {1, 0}});
    std::string text = mbm::graph_to_text(g);
    CHECK(text == "5 3\n0 1\n0 2\n3 4\n");
    std::istringstream in(text);
    Graph h = mbm::read_graph_text(in);
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.adjacent(3, 4));
}

TEST_CASE("profile parsing enforces length and alphabet") {
    Profile p = mbm::parse_profile("0110", 4);
    CHECK(mbm::ones_count(p) == 2);
    CHECK_THROWS_AS(mbm::parse_profile("0110", 5), mbm::Error);
    CHECK_THROWS_AS(mbm::parse_profile("01a0", 4), mbm::Error);
    CHECK_THROWS_AS(mbm::parse_profile("", 0), mbm::Error);
}

TEST_CASE("trace and decision reports carry the full replay") {
    Graph star = testutil::star(4);
    mbm::MbmDecision d = mbm::is_mbm_profile(star, Profile::from_string("10000"));
    nlohmann::ordered_json j = mbm::decision_to_json(d);
    CHECK(j["mbm"] == true);
    CHECK(j["initial_ones"] == 1);
    CHECK(j["final_ones"] == 5);
    CHECK(j["trace"]["start"] == "10000");
    CHECK(j["trace"]["end"] == "11111");
    CHECK(j["trace"]["steps"].size() == 4);
    CHECK(j["trace"]["steps"][0]["node"] == 1);
    CHECK(j["trace"]["steps"][0]["from"] == 0);
    CHECK(j["trace"]["steps"][0]["to"] == 1);
}

TEST_CASE("certificate reports expose the takeover data") {
    Graph g = testutil::path(3);
    mbm::MbmCertificate cert = mbm::construct_mbm(g);
    nlohmann::ordered_json j = mbm::certificate_to_json(g, cert, true);
    CHECK(j["n"] == 3);
    CHECK(j["s0"] == "010");
    CHECK(j["prefix"] == nlohmann::ordered_json::array({0}));
    CHECK(j["post_prefix"] == "110");
    CHECK(j["route"] == "OddTone");
    CHECK(j["ones_before"] == 1);
    CHECK(j["ones_after"] == 2);
    CHECK(j["validated"] == true);
}

TEST_CASE("dot export highlights the chosen nodes") {
    Graph g = testutil::path(3);
    Profile ones = Profile::from_string("010");
    std::string dot = mbm::graph_to_dot(g, &ones);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
    CHECK(dot.find("filled") != std::string::npos);
}
