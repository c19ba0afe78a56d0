#include "mbm/classifier.hpp"

#include <algorithm>

namespace mbm {

const char* forbidden_kind_name(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::F1: return "F1";
        case ForbiddenKind::OF2: return "oF2";
        case ForbiddenKind::EF2: return "eF2";
        case ForbiddenKind::EF3: return "eF3";
        case ForbiddenKind::EF4: return "eF4";
        case ForbiddenKind::NotForbidden: return "NotForbidden";
    }
    return "Unknown";
}

namespace {

// Is V \ {u} a clique?
bool others_form_clique(const Graph& g, NodeId u) {
    int n = g.node_count();
    for (NodeId v = 0; v < n; ++v) {
        if (v == u) continue;
        for (NodeId w = v + 1; w < n; ++w) {
            if (w == u) continue;
            if (!g.adjacent(v, w)) return false;
        }
    }
    return true;
}

}  // namespace

ForbiddenClass classify_forbidden(const Graph& g) {
    const int n = g.node_count();

    if (g.edge_count() == 0) return {ForbiddenKind::F1, std::nullopt};

    if (n % 2 != 0) {
        bool clique = true;
        for (NodeId v = 0; v < n && clique; ++v)
            if (g.degree(v) != n - 1) clique = false;
        if (clique) return {ForbiddenKind::OF2, std::nullopt};
        return {ForbiddenKind::NotForbidden, std::nullopt};
    }

    int high = 0;  // nodes of degree >= n-2
    for (NodeId v = 0; v < n; ++v)
        if (g.degree(v) >= n - 2) ++high;
    if (high == n) return {ForbiddenKind::EF2, std::nullopt};

    // EF3/EF4 both need n-1 nodes of degree >= n-2 (clique-internal degree is
    // already n-2), so bail out early otherwise.
    if (high < n - 1) return {ForbiddenKind::NotForbidden, std::nullopt};

    // EF3: some u of degree <= 2 whose removal leaves a clique.
    for (NodeId u = 0; u < n; ++u) {
        if (g.degree(u) > 2) continue;
        if (others_form_clique(g, u)) return {ForbiddenKind::EF3, u};
    }

    // EF4: some u of degree <= 4 with all others of degree exactly n-2, not a
    // clique among themselves.
    for (NodeId u = 0; u < n; ++u) {
        if (g.degree(u) > 4) continue;
        bool ok = true;
        for (NodeId v = 0; v < n && ok; ++v)
            if (v != u && g.degree(v) != n - 2) ok = false;
        if (ok && !others_form_clique(g, u)) return {ForbiddenKind::EF4, u};
    }

    return {ForbiddenKind::NotForbidden, std::nullopt};
}

std::optional<ExtremalPartition> is_extremal(const Graph& g) {
    const int n = g.node_count();
    if (n % 2 != 0) throw Error(errc::odd_order, "extremal shape is defined for even n");

    NodeId low = -1;
    int low_count = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (g.degree(v) < n - 2) {
            ++low_count;
            if (low_count > 1) return std::nullopt;
            low = v;
        }
    }

    ExtremalPartition part;
    if (low >= 0) {
        part.u = low;
    } else {
        // All degrees >= n-2: take the minimum-degree node, lowest id first.
        NodeId best = 0;
        for (NodeId v = 1; v < n; ++v)
            if (g.degree(v) < g.degree(best)) best = v;
        part.u = best;
    }

    for (NodeId v = 0; v < n; ++v) {
        if (v == part.u) continue;
        if (g.degree(v) == n - 1)
            part.a_set.push_back(v);
        else if (g.adjacent(part.u, v))
            part.b_set.push_back(v);
        else
            part.c_set.push_back(v);
    }

    if (g.degree(part.u) !=
        static_cast<int>(part.a_set.size()) + static_cast<int>(part.b_set.size()))
        throw Error(errc::internal, "extremal pivot degree mismatch — bug");

    // Every b_set node has degree n-2, so exactly one non-neighbor; that
    // non-neighbor is again in b_set (it misses u's neighbor, so it is not in
    // a_set, and it is adjacent to u, so not in c_set... verified directly).
    std::vector<char> seen(n, 0);
    for (NodeId v : part.b_set) {
        if (seen[v]) continue;
        NodeId comp = -1;
        for (NodeId w = 0; w < n; ++w)
            if (w != v && w != part.u && !g.adjacent(v, w)) {
                comp = w;
                break;
            }
        if (comp < 0 || !std::binary_search(part.b_set.begin(), part.b_set.end(), comp) ||
            seen[comp])
            throw Error(errc::internal, "companion pairing failed in extremal partition — bug");
        seen[v] = seen[comp] = 1;
        part.companion_pairs.emplace_back(std::min(v, comp), std::max(v, comp));
    }

    return part;
}

}  // namespace mbm
