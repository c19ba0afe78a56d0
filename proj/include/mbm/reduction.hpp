#pragma once

// Compiles 2P2N-3SAT formulas (every variable occurs exactly twice positively
// and twice negatively) into hardness instances for the small-minority
// decision problem: per variable a 25-node gadget whose stable one-count
// encodes the chosen truth value, per clause an 18-node gadget plus a
// degree-5 clause node that flips iff a satisfying literal neighbors it, a
// disconnected even clique that always cascades to ones, and isolated ballast
// nodes sized so that every proper profile stays within the n*(1/4 - eps)
// minority bound.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbm/graph.hpp"

namespace mbm {

// Exact rational with positive denominator, normalized by gcd.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    // "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const Rational&) const = default;
};

struct CnfFormula {
    int num_vars = 0;                         // V
    std::vector<std::array<int, 3>> clauses;  // DIMACS literals (+v / -v, 1-based)

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// DIMACS CNF text ("p cnf V C" header, clauses terminated by 0).  Each clause
// must hold exactly three literals over distinct variables and every variable
// must occur exactly twice positively and twice negatively (which forces
// 3C = 4V with C a multiple of 4).
CnfFormula parse_cnf(std::string_view text);

// Checks the exact-occurrence shape above; throws Not2P2N naming the
// violating clause or variable.
void require_2p2n(const CnfFormula& f);

bool evaluate_formula(const CnfFormula& f, const std::vector<bool>& assignment);

struct ReductionInstance {
    Graph graph;
    int num_vars = 0;     // V
    int num_clauses = 0;  // C
    int clique_size = 0;  // N
    Rational epsilon;
    std::vector<std::string> labels;  // one symbolic name per node id

    // Frozen node layout: variable gadgets of 25 nodes in variable order,
    // then clause gadgets of 18 nodes in clause order, then the clique, then
    // the isolated nodes.
    NodeId literal_node(int var, bool positive) const { return 25 * var + (positive ? 0 : 1); }
    // Chain nodes v_1..v_7 hanging off a literal (i in 1..7).
    NodeId v_node(int var, bool positive, int i) const {
        return 25 * var + (positive ? 1 : 8) + i;
    }
    NodeId v0_node(int var) const { return 25 * var + 16; }
    NodeId w0_node(int var) const { return 25 * var + 17; }
    // Pendant nodes w_1..w_7 on w_0 (i in 1..7).
    NodeId w_node(int var, int i) const { return 25 * var + 17 + i; }

    NodeId clause_node(int clause) const { return clause_base(clause); }
    NodeId u_node(int clause, int i) const { return clause_base(clause) + i; }  // i in {1,2}
    NodeId y_node(int clause, int j) const { return clause_base(clause) + 2 + j; }  // j in 1..15

    NodeId clique_node(int k) const { return clause_base(num_clauses) + k; }
    NodeId isolated_node(int k) const { return clique_node(clique_size) + k; }
    int isolated_count() const { return graph.node_count() - isolated_node(0); }

private:
    int clause_base(int clause) const { return 25 * num_vars + 18 * clause; }
};

// Requires 0 < epsilon < 1/8.  clique_size defaults to 12C (always valid);
// when given it must be even, at least 12C, and small enough to keep the
// proper-profile ones count 7C/2 + N/2 within n*(1/4 - epsilon) exactly.
ReductionInstance build_reduction(const CnfFormula& f, const Rational& epsilon,
                                  std::optional<long long> clique_size = std::nullopt);

// Preference 1 on w_0(x) and the literal node matching assignment[x] for
// every variable, on u_1(c) and u_2(c) for every clause, and on the N/2
// lowest-id clique nodes; 0 elsewhere.  Ones total 7C/2 + N/2.
Profile proper_profile(const ReductionInstance& inst, const std::vector<bool>& assignment);

// Whether the maximum-ones stable profile reachable from the proper profile
// reaches n/2 ones; equals evaluate_formula on faithfully built instances.
bool check_correspondence(const ReductionInstance& inst, const std::vector<bool>& assignment);

}  // namespace mbm
