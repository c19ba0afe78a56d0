#pragma once

// Bisections (node partitions into sides of ceil(n/2) and floor(n/2)), the
// swap/move local search for minimum bisections, and the special bisection
// shapes (M1/M2/M3) used to build minority-becomes-majority certificates.
//
// Key quantity: deficiency def(x) = (neighbors of x on x's own side) minus
// (neighbors of x on the other side).  Swapping x in S with y in the other
// side changes the bisection width by def(x) + def(y) + 2*[x adjacent y].

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mbm/graph.hpp"

namespace mbm {

class Bisection {
public:
    Bisection() = default;

    // side_s must list exactly ceil(n/2) distinct nodes.
    static Bisection from_side(int n, std::span<const NodeId> side_s);
    static Bisection from_side(int n, std::initializer_list<NodeId> side_s);
    // Canonical start: side_s = {0, ..., ceil(n/2)-1}.
    static Bisection initial(int n);

    int node_count() const { return n_; }
    int side_s_size() const { return size_s_; }
    int side_t_size() const { return n_ - size_s_; }

    bool in_s(NodeId v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }

    std::vector<NodeId> side_s() const;
    std::vector<NodeId> side_t() const;

    std::span<const std::uint64_t> side_s_words() const { return words_; }

    // Exchanges x (in side_s) and y (in side_t); sizes are preserved.
    void swap_pair(NodeId x, NodeId y);
    // Moves x from the larger side to the smaller one and renames the sides so
    // side_s stays the larger side (odd n only).
    void move_to_small_side(NodeId x);

    bool operator==(const Bisection& o) const = default;

private:
    int n_ = 0;
    int size_s_ = 0;
    std::vector<std::uint64_t> words_;  // membership mask of side_s
};

enum class BisectionClass { Weak, Strong, Zero };

const char* bisection_class_name(BisectionClass c);

enum class SpecialKind { M1, M2, M3 };

const char* special_kind_name(SpecialKind k);

// M1: z (def <= 0) on side `side`, u and v non-adjacent on the other side,
//     both adjacent to z, whose nodes all have def >= -1.
// M2: side `side` has all def >= -1 and u with def > 0.
// M3: side `side` has all def = 0; the other side has def in {-1, 0} and u is
//     a node there with def = -1.
struct SpecialWitness {
    SpecialKind kind;
    int side;  // 0 = side_s, 1 = side_t
    NodeId z = -1;
    NodeId u = -1;
    NodeId v = -1;
};

long width(const Graph& g, const Bisection& b);
int deficiency(const Graph& g, const Bisection& b, NodeId x);
std::vector<int> deficiencies(const Graph& g, const Bisection& b);

// Repeatedly applies the first strictly width-decreasing swap in lex (x, y)
// order; for odd n also the first strictly decreasing single move from the
// larger side.  At a local minimum every swap satisfies
// def(x) + def(y) + 2*W(x,y) >= 0 and (odd n) every node on the larger side
// has def >= 0.
Bisection local_search_bisection(const Graph& g, Bisection start);

// Weak: some def < -1.  Strong: all def >= -1, not all zero.  Zero: all zero.
BisectionClass classify_bisection(const Graph& g, const Bisection& b);

// All special shapes b satisfies, one witness per kind, each with the
// lexicographically smallest witness tuple.
std::vector<SpecialWitness> detect_special(const Graph& g, const Bisection& b);

// Escape from the one locally-minimal-but-useless shape on non-extremal even
// graphs: one side holds z with deg(z) = n-2 and def(z) = -2 while the other
// side is a clique of all-zero deficiencies.  Returns a strictly narrower
// bisection when that shape is present, nothing otherwise.
std::optional<Bisection> escape_strongly_minimal(const Graph& g, const Bisection& b);

// For a Zero-class bisection that is not M1: swaps a cross pair (u, z) chosen
// so the result has equal width but is no longer Zero.  Returns nothing iff b
// is M1.
std::optional<Bisection> zero_swap(const Graph& g, const Bisection& b);

struct StronglyMinimalResult {
    Bisection bisection;
    BisectionClass cls;
    std::vector<SpecialWitness> witnesses;
    long iterations;
};

// Local search + escape + zero-swap loop.  Requires n even and a
// non-forbidden, non-extremal graph; ends in a swap-locally-minimal bisection
// that admits at least one M1/M2/M3 witness.  Width strictly decreases at
// least every two loop iterations, so 2*n*n + 4 iterations always suffice.
StronglyMinimalResult strongly_minimal_search(const Graph& g);

inline long strongly_minimal_budget(int n) { return 2L * n * n + 4; }

}  // namespace mbm
