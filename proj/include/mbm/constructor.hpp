#pragma once

// Builds minority-becomes-majority certificates for every graph outside the
// forbidden families: an initial profile with floor((n-1)/2) ones (a strict
// minority) plus an update prefix of at most two nodes after which no 1-agent
// is unhappy and the ones count has reached the majority threshold.  From such
// a profile only 0->1 flips are possible, so the ones count never drops again.

#include <optional>
#include <string>
#include <vector>

#include "mbm/bisection.hpp"
#include "mbm/graph.hpp"

namespace mbm {

enum class Route { OddTone, Extremal, M1, M2a, M2b, M2c, M3 };

const char* route_name(Route r);

struct MbmCertificate {
    Profile s0;
    std::vector<NodeId> prefix;  // at most two nodes, replayable in order
    Profile post_prefix;         // profile after replaying the prefix
    Route route;
};

struct ProfilePrefix {
    Profile s0;
    std::vector<NodeId> prefix;
    Route route;
};

// Dispatch: forbidden -> ForbiddenGraph error; odd n -> construct_odd; even
// extremal -> construct_extremal; otherwise construct_nonextremal.
MbmCertificate construct_mbm(const Graph& g);

MbmCertificate construct_odd(const Graph& g);
MbmCertificate construct_extremal(const Graph& g);
MbmCertificate construct_nonextremal(const Graph& g);

// Profile builders for the special bisection shapes.  The M2/M3 builders
// return nothing when their case analysis lands in the sub-case that is
// really an M1 bisection; the caller re-dispatches with the M1 witness.
ProfilePrefix profile_from_m1(const Graph& g, const Bisection& b, const SpecialWitness& w);
std::optional<ProfilePrefix> profile_from_m2(const Graph& g, const Bisection& b,
                                             const SpecialWitness& w);
std::optional<ProfilePrefix> profile_from_m3(const Graph& g, const Bisection& b,
                                             const SpecialWitness& w);

struct CertificateCheck {
    bool ok;
    std::string reason;  // empty when ok
};

// Checks: ones(s0) == floor((n-1)/2); prefix length <= 2 and replayable;
// replay end == post_prefix; no unhappy 1-agent in post_prefix; ones reach the
// majority threshold.
CertificateCheck validate_certificate(const Graph& g, const MbmCertificate& cert);

}  // namespace mbm
