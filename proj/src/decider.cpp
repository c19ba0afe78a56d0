#include "mbm/decider.hpp"

#include <bit>

namespace mbm {

namespace {

// Runs both phases on `cur`, appending steps when `trace` is non-null.
// one_counts[v] tracks v's neighbors holding 1 and is updated incrementally.
void run_phases(const Graph& g, Profile& cur, UpdateTrace* trace) {
    const int n = g.node_count();
    std::vector<int> one_counts(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        const std::uint64_t* row = g.row(v);
        auto words = cur.words();
        int c = 0;
        for (int w = 0; w < g.stride(); ++w) c += std::popcount(row[w] & words[w]);
        one_counts[v] = c;
    }

    auto unhappy = [&](NodeId v, bool pref) {
        int deg = g.degree(v);
        if (deg == 0 || cur.get(v) != pref) return false;
        int differing = pref ? deg - one_counts[v] : one_counts[v];
        return 2 * differing > deg;
    };
    auto flip = [&](NodeId v) {
        bool old = cur.get(v);
        cur.set(v, !old);
        int delta = old ? -1 : 1;
        for (NodeId w : g.neighbors(v)) one_counts[w] += delta;
        if (trace) trace->steps.push_back({v, old, !old});
    };

    for (bool phase_pref : {false, true}) {  // phase 1 flips 0s, phase 2 flips 1s
        for (;;) {
            NodeId pick = -1;
            for (NodeId v = 0; v < n; ++v)
                if (unhappy(v, phase_pref)) {
                    pick = v;
                    break;
                }
            if (pick < 0) break;
            flip(pick);
        }
    }
}

}  // namespace

UpdateTrace two_phase(const Graph& g, const Profile& s0) {
    if (s0.size() != g.node_count())
        throw Error(errc::parse_error, "profile length does not match node count");
    UpdateTrace trace;
    trace.start = s0;
    Profile cur = s0;
    run_phases(g, cur, &trace);
    trace.end = std::move(cur);
    return trace;
}

int max_ones_stable(const Graph& g, const Profile& s0) {
    if (s0.size() != g.node_count())
        throw Error(errc::parse_error, "profile length does not match node count");
    Profile cur = s0;
    run_phases(g, cur, nullptr);
    return ones_count(cur);
}

MbmDecision is_mbm_profile(const Graph& g, const Profile& s0) {
    const int n = g.node_count();
    if (s0.size() != n) throw Error(errc::parse_error, "profile length does not match node count");
    if (2 * ones_count(s0) >= n)
        throw Error(errc::not_a_minority,
                    "profile needs a strict majority of zeros (" +
                        std::to_string(ones_count(s0)) + " ones over " + std::to_string(n) +
                        " agents)");
    UpdateTrace trace = two_phase(g, s0);
    bool mbm = ones_count(trace.end) >= majority_threshold(n);
    return {mbm, std::move(trace)};
}

}  // namespace mbm
