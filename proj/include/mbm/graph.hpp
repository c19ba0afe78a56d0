#pragma once

// Undirected simple graphs with both sorted adjacency lists (CSR layout) and
// per-node adjacency bitset rows, plus binary preference profiles.  The bitset
// rows make cut/deficiency queries a handful of popcounts, which matters for
// exhaustive small-graph enumeration.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbm/error.hpp"

namespace mbm {

using NodeId = int;

inline int words_for(int n) { return (n + 63) / 64; }

class GraphEnumerator;

class Graph {
public:
    Graph() = default;

    // Builds from an edge list; edges are validated (0 <= u,v < n, u != v),
    // symmetrized and deduplicated.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

    // Builds from adjacency bitset rows (rows must be symmetric with a zero
    // diagonal; n*words_for(n) words).  Fast path for enumeration.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int node_count() const { return n_; }
    long edge_count() const { return m_; }

    int degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }

    bool adjacent(NodeId u, NodeId v) const {
        return (rows_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int stride() const { return stride_; }

    // Bitset row of v: bit w set iff v and w are adjacent.
    const std::uint64_t* row(NodeId v) const {
        return rows_.data() + static_cast<std::size_t>(v) * stride_;
    }

    void check_node(NodeId v) const {
        if (v < 0 || v >= n_) throw Error(errc::out_of_range_node, "node id " + std::to_string(v));
    }

private:
    friend class GraphEnumerator;
    void rebuild_from_rows(int n, const std::uint64_t* rows);  // reuses capacity

    int n_ = 0;
    int stride_ = 0;
    long m_ = 0;
    std::vector<std::int32_t> offsets_;  // n+1
    std::vector<NodeId> neighbors_;      // 2m, ascending per node
    std::vector<std::uint64_t> rows_;    // n * stride
};

// Binary preference profile over n agents (bit i = preference of agent i).
class Profile {
public:
    Profile() = default;
    explicit Profile(int n) : n_(n), words_(words_for(n), 0) {}

    // Parses a string of '0'/'1' characters.
    static Profile from_string(std::string_view text);
    // Low n bits of mask (n <= 64).
    static Profile from_mask(int n, std::uint64_t mask);

    int size() const { return n_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool value) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    std::string to_string() const;
    std::uint64_t to_mask() const;  // n <= 64

    bool operator==(const Profile& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

int ones_count(const Profile& s);
inline int zeros_count(const Profile& s) { return s.size() - ones_count(s); }

// Number of edges with one endpoint in a and the other in b; a and b must be
// disjoint node sets.
long cut_weight(const Graph& g, std::span<const NodeId> a, std::span<const NodeId> b);

}  // namespace mbm
