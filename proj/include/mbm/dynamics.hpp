#pragma once

// Sequential majority dynamics: an agent is unhappy iff a strict majority of
// its neighbors hold the opposite preference (ties keep the own preference,
// degree-0 agents are never unhappy).  A legal update flips one unhappy agent.

#include <cstdint>
#include <span>
#include <vector>

#include "mbm/graph.hpp"

namespace mbm {

struct UpdateStep {
    NodeId node;
    bool from;
    bool to;
};

struct UpdateTrace {
    Profile start;
    std::vector<UpdateStep> steps;
    Profile end;
};

// splitmix-style state advance; fixed algorithm so seeded runs replay across
// platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

struct SchedulerPolicy {
    enum class Kind { MinIndex, SeededRandom, Scripted };

    Kind kind = Kind::MinIndex;
    std::uint64_t seed = 0;
    std::vector<NodeId> script;

    static SchedulerPolicy min_index() { return {}; }
    static SchedulerPolicy seeded_random(std::uint64_t seed) {
        return {Kind::SeededRandom, seed, {}};
    }
    static SchedulerPolicy scripted(std::vector<NodeId> script) {
        return {Kind::Scripted, 0, std::move(script)};
    }
};

bool is_unhappy(const Graph& g, const Profile& s, NodeId v);
bool is_stable(const Graph& g, const Profile& s);

// Flips v; v must be unhappy in s.
Profile apply_update(const Graph& g, const Profile& s, NodeId v);

// Applies the schedule node by node; every scheduled node must be unhappy at
// its turn.
UpdateTrace run_schedule(const Graph& g, const Profile& s0, std::span<const NodeId> schedule);

// Runs until stable.  max_steps < 0 means the default budget of 4*n*n steps;
// exceeding the budget raises StepBudgetExceeded.
UpdateTrace run_to_stable(const Graph& g, const Profile& s0, const SchedulerPolicy& policy,
                          long max_steps = -1);

}  // namespace mbm
