#pragma once

// The five graph families on which sequential majority dynamics can never turn
// a strict minority of ones into a non-minority, plus the "extremal" shape
// (even n, at most one node of degree < n-2) that gets its own construction.

#include <optional>
#include <utility>
#include <vector>

#include "mbm/graph.hpp"

namespace mbm {

enum class ForbiddenKind {
    F1,            // no edge at all
    OF2,           // odd clique
    EF2,           // even, every degree >= n-2
    EF3,           // even, n-1 nodes form a clique, remaining degree <= 2
    EF4,           // even, n-1 nodes of degree n-2 not forming a clique, remaining degree <= 4
    NotForbidden,
};

const char* forbidden_kind_name(ForbiddenKind k);

struct ForbiddenClass {
    ForbiddenKind kind = ForbiddenKind::NotForbidden;
    std::optional<NodeId> witness;  // the low-degree node for EF3/EF4
};

// First match in the order F1, OF2, EF2, EF3, EF4.
ForbiddenClass classify_forbidden(const Graph& g);

struct ExtremalPartition {
    NodeId u;                    // the minimum-degree node (the only one below n-2, if any)
    std::vector<NodeId> a_set;   // degree n-1
    std::vector<NodeId> b_set;   // degree n-2, adjacent to u
    std::vector<NodeId> c_set;   // degree n-2, not adjacent to u
    std::vector<std::pair<NodeId, NodeId>> companion_pairs;  // b_set split into
                                                             // mutual non-neighbors
};

// Engaged iff at most one node has degree < n-2 (n must be even).
std::optional<ExtremalPartition> is_extremal(const Graph& g);

}  // namespace mbm
