#include "mbm/dynamics.hpp"

#include <bit>

namespace mbm {

namespace {

// Number of v's neighbors currently holding preference 1.
int one_neighbors(const Graph& g, const Profile& s, NodeId v) {
    const std::uint64_t* row = g.row(v);
    auto words = s.words();
    int c = 0;
    for (int w = 0; w < g.stride(); ++w) c += std::popcount(row[w] & words[w]);
    return c;
}

}  // namespace

bool is_unhappy(const Graph& g, const Profile& s, NodeId v) {
    g.check_node(v);
    int deg = g.degree(v);
    if (deg == 0) return false;
    int ones = one_neighbors(g, s, v);
    int differing = s.get(v) ? deg - ones : ones;
    return 2 * differing > deg;  // strict majority; ties keep the preference
}

bool is_stable(const Graph& g, const Profile& s) {
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (is_unhappy(g, s, v)) return false;
    return true;
}

Profile apply_update(const Graph& g, const Profile& s, NodeId v) {
    if (!is_unhappy(g, s, v))
        throw Error(errc::update_not_legal, "node " + std::to_string(v) + " is not unhappy");
    Profile next = s;
    next.set(v, !s.get(v));
    return next;
}

UpdateTrace run_schedule(const Graph& g, const Profile& s0, std::span<const NodeId> schedule) {
    if (s0.size() != g.node_count())
        throw Error(errc::parse_error, "profile length does not match node count");
    UpdateTrace trace;
    trace.start = s0;
    Profile cur = s0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        NodeId v = schedule[i];
        g.check_node(v);
        if (!is_unhappy(g, cur, v))
            throw Error(errc::update_not_legal, "schedule position " + std::to_string(i) +
                                                    ": node " + std::to_string(v) +
                                                    " is not unhappy");
        bool old = cur.get(v);
        cur.set(v, !old);
        trace.steps.push_back({v, old, !old});
    }
    trace.end = std::move(cur);
    return trace;
}

UpdateTrace run_to_stable(const Graph& g, const Profile& s0, const SchedulerPolicy& policy,
                          long max_steps) {
    if (s0.size() != g.node_count())
        throw Error(errc::parse_error, "profile length does not match node count");
    const int n = g.node_count();
    if (max_steps < 0) max_steps = 4L * n * n;

    UpdateTrace trace;
    trace.start = s0;
    Profile cur = s0;
    SplitMix64 rng(policy.seed);
    std::vector<NodeId> unhappy;
    std::size_t script_pos = 0;

    for (long step = 0;; ++step) {
        unhappy.clear();
        for (NodeId v = 0; v < n; ++v)
            if (is_unhappy(g, cur, v)) unhappy.push_back(v);
        if (unhappy.empty()) break;
        if (step >= max_steps)
            throw Error(errc::step_budget_exceeded,
                        "no stable profile within " + std::to_string(max_steps) + " steps");

        NodeId v;
        switch (policy.kind) {
            case SchedulerPolicy::Kind::MinIndex:
                v = unhappy.front();
                break;
            case SchedulerPolicy::Kind::SeededRandom:
                v = unhappy[rng.next() % unhappy.size()];
                break;
            case SchedulerPolicy::Kind::Scripted:
                if (script_pos >= policy.script.size())
                    throw Error(errc::schedule_exhausted,
                                "script ended before reaching a stable profile");
                v = policy.script[script_pos++];
                g.check_node(v);
                if (!is_unhappy(g, cur, v))
                    throw Error(errc::update_not_legal,
                                "script position " + std::to_string(script_pos - 1) + ": node " +
                                    std::to_string(v) + " is not unhappy");
                break;
            default:
                throw Error(errc::internal, "unknown scheduler policy");
        }
        bool old = cur.get(v);
        cur.set(v, !old);
        trace.steps.push_back({v, old, !old});
    }
    trace.end = std::move(cur);
    return trace;
}

}  // namespace mbm
