#include "mbm/constructor.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbm/classifier.hpp"
#include "mbm/decider.hpp"
#include "mbm/dynamics.hpp"
#include "mbm/error.hpp"

namespace mbm {

const char* route_name(Route r) {
    switch (r) {
        case Route::OddTone: return "OddTone";
        case Route::Extremal: return "Extremal";
        case Route::M1: return "M1";
        case Route::M2a: return "M2a";
        case Route::M2b: return "M2b";
        case Route::M2c: return "M2c";
        case Route::M3: return "M3";
    }
    return "Unknown";
}

namespace {

void require_not_forbidden(const Graph& g, const char* who) {
    ForbiddenClass fc = classify_forbidden(g);
    if (fc.kind == ForbiddenKind::NotForbidden) return;
    std::string msg = std::string(who) + ": graph belongs to forbidden class " +
                      forbidden_kind_name(fc.kind);
    if (fc.witness) msg += " (low-degree node " + std::to_string(*fc.witness) + ")";
    throw Error(errc::forbidden_graph, msg);
}

Profile ones_on(int n, std::span<const NodeId> nodes) {
    Profile s(n);
    for (NodeId v : nodes) s.set(v, true);
    return s;
}

// Replays the prefix (validating that every step is a legal update) and
// packages the certificate with the resulting profile.
MbmCertificate finish(const Graph& g, ProfilePrefix pp) {
    UpdateTrace trace = run_schedule(g, pp.s0, pp.prefix);
    return {std::move(pp.s0), std::move(pp.prefix), std::move(trace.end), pp.route};
}

// Single-flip profile for a side whose deficiencies are all >= 0 with v > 0:
// ones everywhere on the side except v, prefix [v].  After v flips, every
// agent of the side has at least as many same-preference as cross-preference
// neighbors, so the ones count can only grow from there.
ProfilePrefix tone_profile(int n, const std::vector<NodeId>& side, NodeId v, Route route) {
    Profile s0(n);
    for (NodeId x : side)
        if (x != v) s0.set(x, true);
    return {std::move(s0), {v}, route};
}

const SpecialWitness* find_witness(const std::vector<SpecialWitness>& ws, SpecialKind k) {
    for (const SpecialWitness& w : ws)
        if (w.kind == k) return &w;
    return nullptr;
}

}  // namespace

MbmCertificate construct_odd(const Graph& g) {
    const int n = g.node_count();
    if (n % 2 == 0)
        throw Error(errc::odd_order, "odd-order construction called on an even-order graph");
    require_not_forbidden(g, "construct_odd");

    Bisection bis = local_search_bisection(g, Bisection::initial(n));
    bool locally_minimal = true;

    // Each pass either emits the single-flip certificate or rebuilds the
    // bisection into a shape that provably admits one; the loop bound is
    // defensive (the case analysis below is exhaustive for non-forbidden odd
    // graphs, so two passes normally suffice).
    for (int attempt = 0; attempt < n + 2; ++attempt) {
        const std::vector<int> def = deficiencies(g, bis);
        const std::vector<NodeId> side = bis.side_s();  // the larger side
        const std::vector<NodeId> rest = bis.side_t();

        NodeId positive = -1;
        bool all_nonneg = true;
        for (NodeId x : side) {
            if (def[x] < 0) {
                all_nonneg = false;
                break;
            }
            if (def[x] > 0 && positive < 0) positive = x;
        }
        if (all_nonneg && positive >= 0)
            return finish(g, tone_profile(n, side, positive, Route::OddTone));

        if (!all_nonneg || !locally_minimal) {
            // A rebuilt bisection missed its target shape (or local search has
            // not run yet on it); minimize and retry.
            bis = local_search_bisection(g, bis);
            locally_minimal = true;
            continue;
        }

        // Here the bisection is swap- and move-locally minimal and every node
        // of the larger side has deficiency exactly 0.
        std::vector<NodeId> deficient;  // nodes of the smaller side with def < 0
        for (NodeId y : rest)
            if (def[y] < 0) deficient.push_back(y);

        std::vector<NodeId> next_side;
        if (!deficient.empty()) {
            // Each deficient node is adjacent to the whole larger side.  Trade
            // it for one endpoint of a non-adjacent pair (u, w) of that side;
            // w then ends up with strictly positive deficiency.
            NodeId u = -1;
            for (std::size_t i = 0; i + 1 < side.size() && u < 0; ++i)
                for (std::size_t j = i + 1; j < side.size(); ++j)
                    if (!g.adjacent(side[i], side[j])) {
                        u = side[i];
                        break;
                    }
            if (u < 0)
                throw Error(errc::internal,
                            "odd-order case analysis: larger side is a clique with a deficient "
                            "opposite node, which only happens on complete graphs (bug)");
            const NodeId v = deficient.front();
            for (NodeId x : side)
                if (x != u) next_side.push_back(x);
            next_side.push_back(v);
        } else {
            NodeId positive_rest = -1;
            for (NodeId y : rest)
                if (def[y] > 0) {
                    positive_rest = y;
                    break;
                }
            if (positive_rest >= 0) {
                // The smaller side is all-nonnegative with a positive node:
                // grow it by any node of the larger side (deficiency 0, so it
                // lands at 0 on the new side).
                next_side = rest;
                next_side.push_back(side.front());
            } else {
                // Every deficiency in the graph is zero, so any edge endpoint
                // has a cross neighbor.  Move one cross endpoint over; its
                // neighbor's deficiency becomes +2.
                NodeId mover = -1;
                for (NodeId x : side) {
                    for (NodeId y : rest)
                        if (g.adjacent(x, y)) {
                            mover = x;
                            break;
                        }
                    if (mover >= 0) break;
                }
                if (mover < 0)
                    throw Error(errc::internal,
                                "odd-order case analysis: all-zero bisection without cross "
                                "edges, which only happens on empty graphs (bug)");
                next_side = rest;
                next_side.push_back(mover);
            }
        }
        std::sort(next_side.begin(), next_side.end());
        bis = Bisection::from_side(n, next_side);
        locally_minimal = false;
    }
    throw Error(errc::forbidden_graph,
                "odd-order case analysis exhausted without a certificate (bug)");
}

MbmCertificate construct_extremal(const Graph& g) {
    const int n = g.node_count();
    std::optional<ExtremalPartition> part = is_extremal(g);  // throws OddOrder on odd n
    if (!part)
        throw Error(errc::precondition_violated,
                    "extremal construction requires at most one node of degree < n-2");
    require_not_forbidden(g, "construct_extremal");

    const NodeId u = part->u;
    const std::vector<NodeId>& a_set = part->a_set;
    const std::vector<NodeId>& b_set = part->b_set;
    const std::vector<NodeId>& c_set = part->c_set;
    const int alpha = static_cast<int>(a_set.size());
    const int beta = static_cast<int>(b_set.size());
    const int half = n / 2;

    // u is the unique low-degree node (all-high graphs are in the forbidden
    // families, which were just excluded), so deg(u) = alpha + beta <= n-3.
    std::vector<NodeId> ones;
    ones.reserve(half - 1);
    NodeId x = -1;

    auto take_front = [&ones](const std::vector<NodeId>& from, int count) {
        ones.insert(ones.end(), from.begin(), from.begin() + count);
    };

    if (b_set.empty()) {
        // deg(u) = alpha; alpha <= 2 would put the graph in a forbidden family
        // (everything outside u is a clique here).
        if (alpha < 3) throw Error(errc::internal, "extremal split: alpha < 3 (bug)");
        const int take_a = alpha / 2 + 1;
        const int take_c = half - alpha / 2 - 2;
        take_front(a_set, take_a);
        take_front(c_set, take_c);
        x = a_set[take_a];  // lowest-id neighbor of u left at preference 0
    } else if (!a_set.empty()) {
        const int take_b = beta / 2 + 1;
        const int take_a = alpha / 2;
        const int take_c = half - 2 - alpha / 2 - beta / 2;
        take_front(b_set, take_b);
        take_front(a_set, take_a);
        take_front(c_set, take_c);
        x = a_set[take_a];
    } else {
        // deg(u) = beta; beta <= 4 would put the graph in a forbidden family.
        if (beta < 6) throw Error(errc::internal, "extremal split: beta < 6 (bug)");
        const int k = beta / 2;
        // Companion order b_1, b_2, ..., b_{2k}: consecutive entries are
        // mutual non-neighbors.  The first k+1 get preference 1; since
        // k + 1 <= 2k - 2 the last pair stays at 0, so x = b_{2k} is a
        // 0-neighbor of u whose sole non-neighbor also holds 0.
        std::vector<NodeId> flat;
        flat.reserve(beta);
        for (const auto& [first, second] : part->companion_pairs) {
            flat.push_back(first);
            flat.push_back(second);
        }
        const int take_c = half - 2 - k;
        take_front(flat, k + 1);
        take_front(c_set, take_c);
        x = flat.back();
    }

    if (static_cast<int>(ones.size()) != half - 1 || x < 0)
        throw Error(errc::internal, "extremal profile sizing failed (bug)");

    return finish(g, {ones_on(n, ones), {u, x}, Route::Extremal});
}

MbmCertificate construct_nonextremal(const Graph& g) {
    const int n = g.node_count();
    if (n % 2 != 0)
        throw Error(errc::odd_order, "non-extremal construction called on an odd-order graph");
    require_not_forbidden(g, "construct_nonextremal");
    if (is_extremal(g))
        throw Error(errc::precondition_violated,
                    "non-extremal construction requires at least two nodes of degree < n-2");

    const StronglyMinimalResult res = strongly_minimal_search(g);
    const SpecialWitness* m1 = find_witness(res.witnesses, SpecialKind::M1);
    const SpecialWitness* m2 = find_witness(res.witnesses, SpecialKind::M2);
    const SpecialWitness* m3 = find_witness(res.witnesses, SpecialKind::M3);

    if (m2) {
        if (std::optional<ProfilePrefix> pp = profile_from_m2(g, res.bisection, *m2))
            return finish(g, std::move(*pp));
        if (!m1)
            throw Error(errc::internal, "M2 case delegated but no M1 witness was detected (bug)");
    }
    if (m1) return finish(g, profile_from_m1(g, res.bisection, *m1));
    if (m3) {
        if (std::optional<ProfilePrefix> pp = profile_from_m3(g, res.bisection, *m3))
            return finish(g, std::move(*pp));
        throw Error(errc::internal, "M3 case delegated but no M1 witness was detected (bug)");
    }
    throw Error(errc::no_special_found,
                "strongly minimal search returned no usable witness (bug)");
}

MbmCertificate construct_mbm(const Graph& g) {
    require_not_forbidden(g, "construct_mbm");
    if (g.node_count() % 2 != 0) return construct_odd(g);
    if (is_extremal(g)) return construct_extremal(g);
    return construct_nonextremal(g);
}

namespace {

void require_witness(bool cond, const char* what) {
    if (!cond) throw Error(errc::invalid_witness, what);
}

void check_witness_node(const Graph& g, NodeId v, const char* what) {
    if (v < 0 || v >= g.node_count()) throw Error(errc::invalid_witness, what);
}

}  // namespace

ProfilePrefix profile_from_m1(const Graph& g, const Bisection& b, const SpecialWitness& w) {
    require_witness(w.kind == SpecialKind::M1, "witness kind is not M1");
    check_witness_node(g, w.z, "M1 witness node z out of range");
    check_witness_node(g, w.u, "M1 witness node u out of range");
    check_witness_node(g, w.v, "M1 witness node v out of range");

    const bool z_in_s = w.side == 0;
    require_witness(b.in_s(w.z) == z_in_s, "M1 witness z is not on the declared side");
    require_witness(b.in_s(w.u) != z_in_s && b.in_s(w.v) != z_in_s,
                    "M1 witness u, v are not opposite z");
    require_witness(w.u != w.v && !g.adjacent(w.u, w.v), "M1 witness u, v must be non-adjacent");
    require_witness(g.adjacent(w.u, w.z) && g.adjacent(w.v, w.z),
                    "M1 witness u, v must both be adjacent to z");
    require_witness(deficiency(g, b, w.z) <= 0, "M1 witness z must have deficiency <= 0");

    const std::vector<NodeId> uv_side = z_in_s ? b.side_t() : b.side_s();
    for (NodeId x : uv_side)
        require_witness(deficiency(g, b, x) >= -1,
                        "M1 witness side of u, v must have deficiencies >= -1");

    Profile s0(g.node_count());
    s0.set(w.z, true);
    for (NodeId x : uv_side)
        if (x != w.u && x != w.v) s0.set(x, true);
    return {std::move(s0), {w.u, w.v}, Route::M1};
}

std::optional<ProfilePrefix> profile_from_m2(const Graph& g, const Bisection& b,
                                             const SpecialWitness& w) {
    require_witness(w.kind == SpecialKind::M2, "witness kind is not M2");
    check_witness_node(g, w.u, "M2 witness node u out of range");
    const bool u_in_s = w.side == 0;
    require_witness(b.in_s(w.u) == u_in_s, "M2 witness u is not on the declared side");

    const int n = g.node_count();
    const std::vector<int> def = deficiencies(g, b);
    require_witness(def[w.u] > 0, "M2 witness u must have positive deficiency");

    const std::vector<NodeId> side = u_in_s ? b.side_s() : b.side_t();
    const std::vector<NodeId> other = u_in_s ? b.side_t() : b.side_s();
    for (NodeId x : side)
        require_witness(def[x] >= -1, "M2 witness side must have deficiencies >= -1");

    const bool side_nonneg =
        std::all_of(side.begin(), side.end(), [&](NodeId x) { return def[x] >= 0; });
    if (side_nonneg) return tone_profile(n, side, w.u, Route::M2a);

    // Some node of the witness side sits at deficiency -1.
    NodeId z_neg = -1, other_pos = -1;
    bool other_all_zero = true;
    for (NodeId y : other) {
        if (def[y] < 0 && z_neg < 0) z_neg = y;
        if (def[y] > 0 && other_pos < 0) other_pos = y;
        if (def[y] != 0) other_all_zero = false;
    }

    if (z_neg >= 0) {
        // Opposite-side deficit: after u flips, z's cross neighbors outnumber
        // its own-side ones, so z follows.
        Profile s0(n);
        for (NodeId x : side)
            if (x != w.u) s0.set(x, true);
        return ProfilePrefix{std::move(s0), {w.u, z_neg}, Route::M2b};
    }
    if (other_pos >= 0) return tone_profile(n, other, other_pos, Route::M2a);

    if (!other_all_zero)
        throw Error(errc::internal, "M2 case analysis fell through (bug)");

    // The opposite side is all-zero.  If it is not a clique it hosts a
    // non-adjacent pair both adjacent to any deficiency-(-1) node of the
    // witness side, i.e. the bisection is really an M1 instance.
    bool clique = true;
    for (std::size_t i = 0; i + 1 < other.size() && clique; ++i)
        for (std::size_t j = i + 1; j < other.size(); ++j)
            if (!g.adjacent(other[i], other[j])) {
                clique = false;
                break;
            }
    if (!clique) return std::nullopt;

    NodeId z = -1;
    for (NodeId y : other)
        if (g.adjacent(w.u, y)) {
            z = y;
            break;
        }
    if (z < 0)
        throw Error(errc::precondition_violated,
                    "M2 case analysis reached an extremal graph shape "
                    "(u has no cross neighbor); the graph must be non-extremal");
    NodeId v = -1;
    for (NodeId x : side)
        if (def[x] == -1) {
            v = x;
            break;
        }
    if (v < 0) throw Error(errc::internal, "M2 case analysis lost its -1 node (bug)");

    Profile s0(n);
    s0.set(z, true);
    for (NodeId x : side)
        if (x != w.u && x != v) s0.set(x, true);
    return ProfilePrefix{std::move(s0), {w.u, v}, Route::M2c};
}

std::optional<ProfilePrefix> profile_from_m3(const Graph& g, const Bisection& b,
                                             const SpecialWitness& w) {
    require_witness(w.kind == SpecialKind::M3, "witness kind is not M3");
    check_witness_node(g, w.u, "M3 witness node u out of range");
    const bool zero_in_s = w.side == 0;
    require_witness(b.in_s(w.u) != zero_in_s, "M3 witness u must be opposite the all-zero side");

    const int n = g.node_count();
    const std::vector<int> def = deficiencies(g, b);
    require_witness(def[w.u] == -1, "M3 witness u must have deficiency -1");

    const std::vector<NodeId> zero_side = zero_in_s ? b.side_s() : b.side_t();
    const std::vector<NodeId> u_side = zero_in_s ? b.side_t() : b.side_s();
    for (NodeId x : zero_side)
        require_witness(def[x] == 0, "M3 zero side must have all deficiencies 0");
    for (NodeId y : u_side)
        require_witness(def[y] == -1 || def[y] == 0, "M3 deficient side must stay in {-1, 0}");

    bool clique = true;
    for (std::size_t i = 0; i + 1 < zero_side.size() && clique; ++i)
        for (std::size_t j = i + 1; j < zero_side.size(); ++j)
            if (!g.adjacent(zero_side[i], zero_side[j])) {
                clique = false;
                break;
            }
    if (!clique) return std::nullopt;  // really an M1 instance around u

    // The zero side being a clique forces its degrees to n-2 and every
    // deficiency-(-1) node to degree n-1; degree parity then supplies a second
    // such node, and a non-forbidden graph supplies a node of degree <= n-3,
    // which must sit at deficiency 0 on u's side.
    require_witness(g.degree(w.u) == n - 1, "M3 witness u must have degree n-1");
    NodeId v = -1;
    for (NodeId y : u_side)
        if (y != w.u && def[y] == -1) {
            v = y;
            break;
        }
    require_witness(v >= 0, "M3 shape needs a second deficiency-(-1) node beside u");
    require_witness(g.degree(v) == n - 1, "M3 second deficient node must have degree n-1");

    NodeId z = -1;
    for (NodeId y : u_side)
        if (def[y] == 0 && g.degree(y) <= n - 3) {
            z = y;
            break;
        }
    require_witness(z >= 0, "M3 shape needs a degree <= n-3 node on u's side");

    NodeId x1 = -1, x2 = -1;
    for (NodeId x : zero_side)
        if (!g.adjacent(z, x)) {
            if (x1 < 0)
                x1 = x;
            else {
                x2 = x;
                break;
            }
        }
    require_witness(x2 >= 0, "M3 low-degree node needs two non-neighbors on the zero side");

    Profile s0(n);
    s0.set(w.u, true);
    for (NodeId x : zero_side)
        if (x != x1 && x != x2) s0.set(x, true);
    return ProfilePrefix{std::move(s0), {z, v}, Route::M3};
}

CertificateCheck validate_certificate(const Graph& g, const MbmCertificate& cert) {
    const int n = g.node_count();
    if (cert.s0.size() != n || cert.post_prefix.size() != n) return {false, "SizeMismatch"};
    if (ones_count(cert.s0) != (n - 1) / 2) return {false, "WrongOnesCount"};
    if (cert.prefix.size() > 2) return {false, "PrefixTooLong"};

    Profile after;
    try {
        UpdateTrace trace = run_schedule(g, cert.s0, cert.prefix);
        for (const UpdateStep& step : trace.steps)
            if (!step.to) return {false, "IllegalPrefix"};  // prefixes may only flip 0 -> 1
        after = std::move(trace.end);
    } catch (const Error&) {
        return {false, "IllegalPrefix"};
    }
    if (!(after == cert.post_prefix)) return {false, "PostPrefixMismatch"};

    for (NodeId v = 0; v < n; ++v)
        if (after.get(v) && is_unhappy(g, after, v)) return {false, "UnhappyOneNode"};
    if (ones_count(after) < majority_threshold(n)) return {false, "InsufficientOnes"};
    return {true, ""};
}

}  // namespace mbm
