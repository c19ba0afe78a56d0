#pragma once

// Two-phase decision procedure: first flip unhappy 0-agents (ascending id)
// until none remain, then flip unhappy 1-agents until none remain.  The end
// profile is stable and has the maximum number of ones over all profiles
// reachable from s0 by legal updates.

#include "mbm/dynamics.hpp"
#include "mbm/graph.hpp"

namespace mbm {

UpdateTrace two_phase(const Graph& g, const Profile& s0);

// ones_count(two_phase(g, s0).end), computed without building the trace.
int max_ones_stable(const Graph& g, const Profile& s0);

struct MbmDecision {
    bool mbm;
    UpdateTrace trace;
};

// Requires a strict majority of zeros in s0 (else NotAMinority).  mbm is true
// iff some reachable stable profile has zeros <= n/2, i.e. the two-phase end
// has ones >= ceil(n/2) for odd n and >= n/2 for even n.
MbmDecision is_mbm_profile(const Graph& g, const Profile& s0);

// The ones threshold a final profile must reach: ceil(n/2) for odd n, n/2 for
// even n (equivalently zeros <= n/2).
inline int majority_threshold(int n) { return n - n / 2; }

}  // namespace mbm
