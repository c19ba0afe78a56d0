#pragma once

// Brute-force ground truth for small instances: exhaustive reachability over
// profile space and exhaustive enumeration of labeled graphs.

#include <cstdint>
#include <vector>

#include "mbm/graph.hpp"

namespace mbm {

// All stable profiles reachable from s0 by legal update sequences, ascending
// by bitmask value.  Walks up to 2^n states, so n is guarded (default 16).
std::vector<Profile> reachable_stable_set(const Graph& g, const Profile& s0, int max_n = 16);

// True iff some reachable stable profile has zeros <= n/2.  Requires a strict
// majority of zeros in s0.
bool oracle_is_mbm_profile(const Graph& g, const Profile& s0, int max_n = 16);

// True iff some profile with a strict majority of zeros can reach a stable
// profile with zeros <= n/2.  Uses the two-phase maximization per profile with
// periodic cross-checks against the reachability oracle.
bool oracle_is_mbm_graph(const Graph& g, int max_n = 12);

// Streams every labeled graph on n nodes in ascending edge-mask order; bit k
// of the mask is edge k in the lexicographic pair order (0,1), (0,2), ...,
// (0,n-1), (1,2), ...  The current() reference is reused between steps.
//
// The default guard refuses n > 7 (2^21 graphs); callers doing a deliberate
// larger sweep must raise max_n explicitly.
class GraphEnumerator {
public:
    explicit GraphEnumerator(int n, int max_n = 7);

    // Advances to the next graph; false once the range is exhausted.
    bool next();

    const Graph& current() const { return current_; }
    std::uint64_t mask() const { return mask_; }
    std::uint64_t total() const { return total_; }

private:
    int n_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
    bool started_ = false;
    std::vector<std::pair<int, int>> edge_of_bit_;
    std::vector<std::uint64_t> rows_;
    Graph current_;
};

}  // namespace mbm
