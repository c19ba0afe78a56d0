#include <doctest.h>

#include <string>
#include <vector>

#include "mbm/decider.hpp"
#include "mbm/error.hpp"
#include "mbm/reduction.hpp"

using mbm::CnfFormula;
using mbm::Rational;
using mbm::ReductionInstance;

namespace {

// Three variables, four clauses, each variable twice positive and twice
// negated.
const char* kExampleCnf =
    "c balanced example\n"
    "p cnf 3 4\n"
    "1 2 3 0\n"
    "-1 -2 -3 0\n"
    "1 -2 3 0\n"
    "-1 2 -3 0\n";

ReductionInstance example_instance() {
    return mbm::build_reduction(mbm::parse_cnf(kExampleCnf), Rational(1, 16), 48);
}

}  // namespace

TEST_CASE("rationals normalize and parse") {
    CHECK(Rational(2, 32) == Rational(1, 16));
    CHECK(Rational(0, 5).num == 0);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("1/16") == Rational(1, 16));
    CHECK(Rational::parse("3") == Rational(3, 1));
    CHECK(Rational(1, 16).to_string() == "1/16");
    CHECK_THROWS_AS(Rational(1, 0), mbm::Error);
    CHECK_THROWS_AS(Rational::parse("a/b"), mbm::Error);
    CHECK_THROWS_AS(Rational::parse("1/"), mbm::Error);
}

TEST_CASE("cnf parsing enforces the format and the occurrence balance") {
    CnfFormula f = mbm::parse_cnf(kExampleCnf);
    CHECK(f.num_vars == 3);
    CHECK(f.num_clauses() == 4);
    CHECK(f.clauses[1] == std::array<int, 3>{-1, -2, -3});

    // Clause with two literals.
    CHECK_THROWS_AS(mbm::parse_cnf("p cnf 3 1\n1 2 0\n"), mbm::Error);
    // Literal out of range.
    CHECK_THROWS_AS(mbm::parse_cnf("p cnf 3 1\n1 2 4 0\n"), mbm::Error);
    // Declared clause count mismatch.
    CHECK_THROWS_AS(mbm::parse_cnf("p cnf 3 2\n1 2 3 0\n"), mbm::Error);
    // Duplicate variable inside a clause.
    CHECK_THROWS_AS(mbm::parse_cnf("p cnf 3 4\n1 -1 2 0\n1 2 3 0\n-2 -3 1 0\n-1 -2 -3 0\n"),
                    mbm::Error);
    // Unbalanced occurrences (variable 1 three times positive, once negative).
    const char* unbalanced =
        "p cnf 3 4\n1 2 3 0\n1 -2 -3 0\n1 -2 3 0\n-1 2 -3 0\n";
    CHECK_THROWS_AS(mbm::parse_cnf(unbalanced), mbm::Error);
}

TEST_CASE("assignment evaluation") {
    CnfFormula f = mbm::parse_cnf(kExampleCnf);
    CHECK(mbm::evaluate_formula(f, {true, false, false}));
    CHECK_FALSE(mbm::evaluate_formula(f, {false, false, false}));
    CHECK_FALSE(mbm::evaluate_formula(f, {true, true, true}));
    CHECK_THROWS_AS(mbm::evaluate_formula(f, {true}), mbm::Error);
}

TEST_CASE("parameter guards") {
    CnfFormula f = mbm::parse_cnf(kExampleCnf);
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(1, 4)), mbm::Error);   // >= 1/8
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(1, 8)), mbm::Error);   // boundary
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(0, 3)), mbm::Error);   // zero
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(-1, 16)), mbm::Error);
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(1, 16), 47), mbm::Error);  // odd N
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(1, 16), 46), mbm::Error);  // < 12C
    // Huge N fails the minority bound for this epsilon.
    CHECK_THROWS_AS(mbm::build_reduction(f, Rational(1, 16), 4000), mbm::Error);
}

TEST_CASE("instance layout: sizes, degrees, labels") {
    ReductionInstance inst = example_instance();
    const mbm::Graph& g = inst.graph;
    CHECK(g.node_count() == 342);
    CHECK(inst.clique_size == 48);
    CHECK(inst.num_vars == 3);
    CHECK(inst.num_clauses == 4);

    // Literal nodes: adjacent to their 7 chain nodes plus two clause nodes.
    CHECK(g.degree(inst.literal_node(0, true)) == 9);
    CHECK(g.degree(inst.literal_node(0, false)) == 9);
    // Hub node of each variable gadget: chains, mirrors, and the anchor.
    CHECK(g.degree(inst.w0_node(0)) == 22);
    CHECK(g.degree(inst.v0_node(0)) == 3);
    // Clause nodes: two guards plus three literals.
    for (int j = 0; j < 4; ++j) CHECK(g.degree(inst.clause_node(j)) == 5);
    // Clique nodes see the rest of the clique only.
    CHECK(g.degree(inst.clique_node(0)) == 47);
    // Isolated filler.
    CHECK(inst.isolated_count() == 147);
    CHECK(g.degree(inst.isolated_node(0)) == 0);

    CHECK(inst.labels[inst.literal_node(1, true)] == "x1");
    CHECK(inst.labels[inst.literal_node(1, false)] == "~x1");
    CHECK(inst.labels[inst.clause_node(2)] == "c2");
    CHECK(inst.labels[inst.clique_node(0)] == "clique0");
}

TEST_CASE("proper profiles score each satisfying assignment as a takeover") {
    CnfFormula f = mbm::parse_cnf(kExampleCnf);
    ReductionInstance inst = example_instance();
    const int n = inst.graph.node_count();

    std::vector<bool> sat = {true, false, false};
    REQUIRE(mbm::evaluate_formula(f, sat));
    mbm::Profile p = mbm::proper_profile(inst, sat);
    CHECK(mbm::ones_count(p) == 38);
    CHECK(mbm::check_correspondence(inst, sat));
    CHECK(mbm::max_ones_stable(inst.graph, p) == n / 2);  // exactly half

    std::vector<bool> unsat = {false, false, false};
    REQUIRE_FALSE(mbm::evaluate_formula(f, unsat));
    CHECK_FALSE(mbm::check_correspondence(inst, unsat));
    CHECK(mbm::max_ones_stable(inst.graph, mbm::proper_profile(inst, unsat)) < n / 2);
}

TEST_CASE("default clique size is the smallest valid even bound") {
    CnfFormula f = mbm::parse_cnf(kExampleCnf);
    ReductionInstance inst = mbm::build_reduction(f, Rational(1, 16));
    CHECK(inst.clique_size == 48);  // 12 * C
    CHECK(inst.graph.node_count() == 342);
}
