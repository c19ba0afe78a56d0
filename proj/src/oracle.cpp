#include "mbm/oracle.hpp"

#include <algorithm>
#include <bit>

#include "mbm/decider.hpp"

namespace mbm {

namespace {

// Adjacency rows as plain 32-bit masks (n <= 16 here, so they fit twice over).
std::vector<std::uint32_t> small_rows(const Graph& g) {
    std::vector<std::uint32_t> rows(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);
    return rows;
}

}  // namespace

std::vector<Profile> reachable_stable_set(const Graph& g, const Profile& s0, int max_n) {
    const int n = g.node_count();
    if (n > max_n)
        throw Error(errc::too_large, "reachability oracle guarded at n <= " + std::to_string(max_n));
    if (n > 16) throw Error(errc::too_large, "reachability oracle supports n <= 16");
    if (s0.size() != n) throw Error(errc::parse_error, "profile length does not match node count");

    auto rows = small_rows(g);
    auto unhappy_mask = [&](std::uint32_t state) {
        std::uint32_t out = 0;
        for (NodeId v = 0; v < n; ++v) {
            int deg = std::popcount(rows[v]);
            if (deg == 0) continue;
            int ones = std::popcount(rows[v] & state);
            int differing = (state >> v) & 1u ? deg - ones : ones;
            if (2 * differing > deg) out |= std::uint32_t{1} << v;
        }
        return out;
    };

    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> queue;
    std::vector<std::uint32_t> stable;
    std::uint32_t start = static_cast<std::uint32_t>(s0.to_mask());
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
        std::uint32_t state = queue.back();
        queue.pop_back();
        std::uint32_t moves = unhappy_mask(state);
        if (moves == 0) {
            stable.push_back(state);
            continue;
        }
        while (moves) {
            int v = std::countr_zero(moves);
            moves &= moves - 1;
            std::uint32_t next = state ^ (std::uint32_t{1} << v);
            if (!seen[next]) {
                seen[next] = 1;
                queue.push_back(next);
            }
        }
    }
    std::sort(stable.begin(), stable.end());
    std::vector<Profile> out;
    out.reserve(stable.size());
    for (std::uint32_t s : stable) out.push_back(Profile::from_mask(n, s));
    return out;
}

bool oracle_is_mbm_profile(const Graph& g, const Profile& s0, int max_n) {
    const int n = g.node_count();
    if (2 * ones_count(s0) >= n)
        throw Error(errc::not_a_minority, "profile needs a strict majority of zeros");
    for (const Profile& s : reachable_stable_set(g, s0, max_n))
        if (2 * zeros_count(s) <= n) return true;
    return false;
}

bool oracle_is_mbm_graph(const Graph& g, int max_n) {
    const int n = g.node_count();
    if (n > max_n)
        throw Error(errc::too_large, "graph oracle guarded at n <= " + std::to_string(max_n));
    if (n > 16) throw Error(errc::too_large, "graph oracle supports n <= 16");
    if (n == 0) return false;

    // Strict minority of ones: ones <= floor((n-1)/2).
    const int max_ones = (n - 1) / 2;
    const std::uint32_t limit = std::uint32_t{1} << n;
    long index = 0;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) > max_ones) continue;
        Profile s0 = Profile::from_mask(n, mask);
        bool via_two_phase = max_ones_stable(g, s0) >= majority_threshold(n);
        if (index++ % 64 == 0) {
            bool via_search = oracle_is_mbm_profile(g, s0, max_n);
            if (via_search != via_two_phase)
                throw Error(errc::internal,
                            "two-phase and reachability oracle disagree on profile " +
                                s0.to_string());
        }
        if (via_two_phase) return true;
    }
    return false;
}

GraphEnumerator::GraphEnumerator(int n, int max_n) : n_(n) {
    if (n < 0 || n > max_n)
        throw Error(errc::too_large,
                    "graph enumeration guarded at n <= " + std::to_string(max_n));
    int bits = n * (n - 1) / 2;
    if (bits >= 63) throw Error(errc::too_large, "edge mask does not fit in 64 bits");
    total_ = std::uint64_t{1} << bits;
    edge_of_bit_.reserve(bits);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edge_of_bit_.emplace_back(u, v);
    rows_.assign(static_cast<std::size_t>(n) * words_for(n), 0);
}

bool GraphEnumerator::next() {
    if (!started_)
        started_ = true;
    else if (++mask_ >= total_)
        return false;

    std::fill(rows_.begin(), rows_.end(), 0);
    const int stride = words_for(n_);
    std::uint64_t bits = mask_;
    while (bits) {
        int k = std::countr_zero(bits);
        bits &= bits - 1;
        auto [u, v] = edge_of_bit_[k];
        rows_[static_cast<std::size_t>(u) * stride + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[static_cast<std::size_t>(v) * stride + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    current_.rebuild_from_rows(n_, rows_.data());
    return true;
}

}  // namespace mbm
