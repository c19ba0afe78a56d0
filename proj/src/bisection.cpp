#include "mbm/bisection.hpp"

#include <algorithm>
#include <bit>
#include <climits>

namespace mbm {

Bisection Bisection::from_side(int n, std::span<const NodeId> side_s) {
    if (n < 0) throw Error(errc::invalid_bisection, "negative node count");
    Bisection b;
    b.n_ = n;
    b.words_.assign(words_for(n), 0);
    for (NodeId v : side_s) {
        if (v < 0 || v >= n)
            throw Error(errc::out_of_range_node, "node id " + std::to_string(v));
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (b.words_[v >> 6] & bit)
            throw Error(errc::invalid_bisection, "duplicate node " + std::to_string(v));
        b.words_[v >> 6] |= bit;
    }
    b.size_s_ = static_cast<int>(side_s.size());
    if (b.size_s_ != (n + 1) / 2)
        throw Error(errc::invalid_bisection,
                    "side_s has " + std::to_string(side_s.size()) + " nodes, expected " +
                        std::to_string((n + 1) / 2));
    return b;
}

Bisection Bisection::from_side(int n, std::initializer_list<NodeId> side_s) {
    return from_side(n, std::span<const NodeId>(side_s.begin(), side_s.size()));
}

Bisection Bisection::initial(int n) {
    Bisection b;
    b.n_ = n;
    b.size_s_ = (n + 1) / 2;
    b.words_.assign(words_for(n), 0);
    for (int v = 0; v < b.size_s_; ++v) b.words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    return b;
}

std::vector<NodeId> Bisection::side_s() const {
    std::vector<NodeId> out;
    out.reserve(size_s_);
    for (NodeId v = 0; v < n_; ++v)
        if (in_s(v)) out.push_back(v);
    return out;
}

std::vector<NodeId> Bisection::side_t() const {
    std::vector<NodeId> out;
    out.reserve(n_ - size_s_);
    for (NodeId v = 0; v < n_; ++v)
        if (!in_s(v)) out.push_back(v);
    return out;
}

void Bisection::swap_pair(NodeId x, NodeId y) {
    if (!in_s(x) || in_s(y)) throw Error(errc::invalid_bisection, "swap pair not a cross pair");
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    words_[y >> 6] |= std::uint64_t{1} << (y & 63);
}

void Bisection::move_to_small_side(NodeId x) {
    if (n_ % 2 == 0) throw Error(errc::invalid_bisection, "single moves need odd n");
    if (!in_s(x)) throw Error(errc::invalid_bisection, "move source not on the larger side");
    // Drop x from side_s, then complement so side_s names the new larger side
    // (old side_t plus x).
    words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    for (auto& w : words_) w = ~w;
    int tail = n_ & 63;
    if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

const char* bisection_class_name(BisectionClass c) {
    switch (c) {
        case BisectionClass::Weak: return "Weak";
        case BisectionClass::Strong: return "Strong";
        case BisectionClass::Zero: return "Zero";
    }
    return "Unknown";
}

const char* special_kind_name(SpecialKind k) {
    switch (k) {
        case SpecialKind::M1: return "M1";
        case SpecialKind::M2: return "M2";
        case SpecialKind::M3: return "M3";
    }
    return "Unknown";
}

namespace {

void check_shapes(const Graph& g, const Bisection& b) {
    if (b.node_count() != g.node_count())
        throw Error(errc::invalid_bisection, "bisection size does not match graph");
}

int deficiency_raw(const Graph& g, const Bisection& b, NodeId x) {
    auto words = b.side_s_words();
    const std::uint64_t* row = g.row(x);
    int in_s = 0;
    for (std::size_t w = 0; w < words.size(); ++w) in_s += std::popcount(row[w] & words[w]);
    int own = b.in_s(x) ? in_s : g.degree(x) - in_s;
    return 2 * own - g.degree(x);
}

void swap_with_deficiencies(const Graph& g, Bisection& b, std::vector<int>& def, NodeId x,
                            NodeId y) {
    for (NodeId w : g.neighbors(x)) {
        if (w == y) continue;
        def[w] += b.in_s(w) ? -2 : 2;  // x leaves side_s
    }
    for (NodeId w : g.neighbors(y)) {
        if (w == x) continue;
        def[w] += b.in_s(w) ? 2 : -2;  // y joins side_s
    }
    b.swap_pair(x, y);
    def[x] = deficiency_raw(g, b, x);
    def[y] = deficiency_raw(g, b, y);
}

void move_with_deficiencies(const Graph& g, Bisection& b, std::vector<int>& def, NodeId x) {
    for (NodeId w : g.neighbors(x)) def[w] += b.in_s(w) ? -2 : 2;
    b.move_to_small_side(x);
    def[x] = deficiency_raw(g, b, x);
}

bool is_clique_side(const Graph& g, const Bisection& b, int side) {
    auto words = b.side_s_words();
    int stride = g.stride();
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if ((b.in_s(v) ? 0 : 1) != side) continue;
        const std::uint64_t* row = g.row(v);
        int in_side = 0;
        for (int w = 0; w < stride; ++w) {
            std::uint64_t side_bits = side == 0 ? words[w] : ~words[w];
            in_side += std::popcount(row[w] & side_bits);
        }
        // row has no bits outside [0, n), so no tail masking is needed for
        // side 0; for side 1 the complement is masked by the row itself.
        int size = side == 0 ? b.side_s_size() : b.side_t_size();
        if (in_side != size - 1) return false;
    }
    return true;
}

}  // namespace

long width(const Graph& g, const Bisection& b) {
    check_shapes(g, b);
    auto words = b.side_s_words();
    long total = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!b.in_s(v)) continue;
        const std::uint64_t* row = g.row(v);
        int in_s = 0;
        for (std::size_t w = 0; w < words.size(); ++w) in_s += std::popcount(row[w] & words[w]);
        total += g.degree(v) - in_s;
    }
    return total;
}

int deficiency(const Graph& g, const Bisection& b, NodeId x) {
    check_shapes(g, b);
    g.check_node(x);
    return deficiency_raw(g, b, x);
}

std::vector<int> deficiencies(const Graph& g, const Bisection& b) {
    check_shapes(g, b);
    std::vector<int> def(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) def[v] = deficiency_raw(g, b, v);
    return def;
}

Bisection local_search_bisection(const Graph& g, Bisection b) {
    check_shapes(g, b);
    const int n = g.node_count();
    const bool odd = n % 2 != 0;
    std::vector<int> def(n);
    for (NodeId v = 0; v < n; ++v) def[v] = deficiency_raw(g, b, v);

    for (;;) {
        int min_t = INT_MAX;
        for (NodeId y = 0; y < n; ++y)
            if (!b.in_s(y)) min_t = std::min(min_t, def[y]);

        bool changed = false;
        for (NodeId x = 0; x < n && !changed; ++x) {
            if (!b.in_s(x)) continue;
            if (min_t != INT_MAX && def[x] + min_t >= 0) continue;  // no swap with x can gain
            for (NodeId y = 0; y < n; ++y) {
                if (b.in_s(y)) continue;
                if (def[x] + def[y] + 2 * (g.adjacent(x, y) ? 1 : 0) < 0) {
                    swap_with_deficiencies(g, b, def, x, y);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed && odd) {
            for (NodeId x = 0; x < n; ++x) {
                if (b.in_s(x) && def[x] < 0) {
                    move_with_deficiencies(g, b, def, x);
                    changed = true;
                    break;
                }
            }
        }
        if (!changed) return b;
    }
}

BisectionClass classify_bisection(const Graph& g, const Bisection& b) {
    check_shapes(g, b);
    bool all_zero = true;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        int d = deficiency_raw(g, b, v);
        if (d < -1) return BisectionClass::Weak;
        if (d != 0) all_zero = false;
    }
    return all_zero ? BisectionClass::Zero : BisectionClass::Strong;
}

std::vector<SpecialWitness> detect_special(const Graph& g, const Bisection& b) {
    check_shapes(g, b);
    const int n = g.node_count();
    std::vector<int> def(n);
    int min_def[2] = {INT_MAX, INT_MAX};
    int max_def[2] = {INT_MIN, INT_MIN};
    for (NodeId v = 0; v < n; ++v) {
        def[v] = deficiency_raw(g, b, v);
        int side = b.in_s(v) ? 0 : 1;
        min_def[side] = std::min(min_def[side], def[v]);
        max_def[side] = std::max(max_def[side], def[v]);
    }

    std::vector<SpecialWitness> out;

    // M1: smallest (z, u, v) with def(z) <= 0, the opposite side all >= -1,
    // and u < v non-adjacent there, both adjacent to z.
    for (NodeId z = 0; z < n; ++z) {
        if (def[z] > 0) continue;
        int zs = b.in_s(z) ? 0 : 1;
        int other = 1 - zs;
        if (min_def[other] != INT_MAX && min_def[other] < -1) continue;
        bool found = false;
        for (NodeId u = 0; u < n && !found; ++u) {
            if ((b.in_s(u) ? 0 : 1) != other || !g.adjacent(z, u)) continue;
            for (NodeId v = u + 1; v < n; ++v) {
                if ((b.in_s(v) ? 0 : 1) != other) continue;
                if (g.adjacent(z, v) && !g.adjacent(u, v)) {
                    out.push_back({SpecialKind::M1, zs, z, u, v});
                    found = true;
                    break;
                }
            }
        }
        if (found) break;
    }

    // M2: first qualifying side, smallest positive-deficiency node there.
    for (int side = 0; side < 2; ++side) {
        if (min_def[side] == INT_MAX || min_def[side] < -1 || max_def[side] <= 0) continue;
        for (NodeId u = 0; u < n; ++u) {
            if ((b.in_s(u) ? 0 : 1) == side && def[u] > 0) {
                out.push_back({SpecialKind::M2, side, -1, u, -1});
                break;
            }
        }
        break;
    }

    // M3: one side all zero, the other inside {-1, 0} with some -1.
    for (int side = 0; side < 2; ++side) {
        int other = 1 - side;
        if (min_def[side] != 0 || max_def[side] != 0) continue;
        if (min_def[other] != -1 || max_def[other] > 0) continue;
        for (NodeId u = 0; u < n; ++u) {
            if ((b.in_s(u) ? 0 : 1) == other && def[u] == -1) {
                out.push_back({SpecialKind::M3, side, -1, u, -1});
                break;
            }
        }
        break;
    }

    return out;
}

std::optional<Bisection> escape_strongly_minimal(const Graph& g, const Bisection& b) {
    check_shapes(g, b);
    const int n = g.node_count();
    if (n % 2 != 0 || n < 4) return std::nullopt;

    std::vector<int> def(n);
    for (NodeId v = 0; v < n; ++v) def[v] = deficiency_raw(g, b, v);

    bool shape = false;
    for (int zside = 0; zside < 2 && !shape; ++zside) {
        bool has_z = false;
        for (NodeId v = 0; v < n; ++v) {
            if ((b.in_s(v) ? 0 : 1) != zside) continue;
            if (g.degree(v) == n - 2 && def[v] == -2) {
                has_z = true;
                break;
            }
        }
        if (!has_z) continue;
        int clique_side = 1 - zside;
        bool ok = true;
        for (NodeId v = 0; v < n && ok; ++v)
            if ((b.in_s(v) ? 0 : 1) == clique_side && def[v] != 0) ok = false;
        if (ok && is_clique_side(g, b, clique_side)) shape = true;
    }
    if (!shape) return std::nullopt;

    // Degree partition: a_set deg < n-2; b_set deg n-2 whose sole non-neighbor
    // has deg < n-2; c_set deg n-2 with its non-neighbor also of deg n-2;
    // d_set deg n-1.
    std::vector<NodeId> a_set, d_set;
    std::vector<char> in_b(n, 0), in_c(n, 0);
    std::vector<NodeId> companion(n, -1);
    for (NodeId v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d < n - 2) {
            a_set.push_back(v);
        } else if (d == n - 1) {
            d_set.push_back(v);
        } else {
            NodeId comp = -1;
            for (NodeId w = 0; w < n; ++w)
                if (w != v && !g.adjacent(v, w)) {
                    comp = w;
                    break;
                }
            companion[v] = comp;
            if (g.degree(comp) < n - 2)
                in_b[v] = 1;
            else
                in_c[v] = 1;
        }
    }
    int gamma = 0;
    for (NodeId v = 0; v < n; ++v) gamma += in_c[v];
    int delta = static_cast<int>(d_set.size());
    if (a_set.size() < 2)
        throw Error(errc::internal, "escape shape on an extremal graph — caller bug");
    if (gamma % 2 != 0) throw Error(errc::internal, "odd companion class in escape — bug");

    const int need = n / 2 - gamma / 2 - 1;
    const int k_min = need - delta;
    NodeId pivot = -1;
    int k = 0;
    for (NodeId u : a_set) {
        int cnt = 0;
        for (NodeId w : g.neighbors(u)) cnt += in_b[w];
        if (cnt >= k_min) {
            pivot = u;
            k = cnt;
            break;
        }
    }
    if (pivot < 0)
        throw Error(errc::internal, "no low-degree pivot with enough companion neighbors — bug");

    std::vector<NodeId> side;
    side.push_back(pivot);
    int take_b = std::min(k, need);
    for (NodeId w : g.neighbors(pivot)) {
        if (take_b == 0) break;
        if (in_b[w]) {
            side.push_back(w);
            --take_b;
        }
    }
    for (NodeId v = 0; v < n; ++v)
        if (in_c[v] && companion[v] > v) side.push_back(v);  // one node per companion pair
    int take_d = std::max(0, need - k);
    for (NodeId v : d_set) {
        if (take_d == 0) break;
        side.push_back(v);
        --take_d;
    }
    if (static_cast<int>(side.size()) != n / 2)
        throw Error(errc::internal, "escape side has wrong size — bug");

    Bisection out = Bisection::from_side(n, side);
    if (width(g, out) >= width(g, b))
        throw Error(errc::internal, "escape did not decrease the width — bug");
    return out;
}

std::optional<Bisection> zero_swap(const Graph& g, const Bisection& b) {
    check_shapes(g, b);
    if (classify_bisection(g, b) != BisectionClass::Zero)
        throw Error(errc::invalid_bisection, "zero_swap requires a zero bisection");

    for (const auto& w : detect_special(g, b))
        if (w.kind == SpecialKind::M1) return std::nullopt;

    bool any_edge = g.edge_count() > 0;
    if (!any_edge)
        throw Error(errc::structurally_forbidden, "graph has no edges");

    const int n = g.node_count();
    for (int side = 0; side < 2; ++side) {
        if (is_clique_side(g, b, side)) continue;
        // v: positive degree on this side; u: same side, non-adjacent to v;
        // z: v's neighbor on the other side.  With M1 excluded, u and z are
        // never adjacent, so the first triple works.
        for (NodeId v = 0; v < n; ++v) {
            if ((b.in_s(v) ? 0 : 1) != side || g.degree(v) == 0) continue;
            for (NodeId u = 0; u < n; ++u) {
                if (u == v || (b.in_s(u) ? 0 : 1) != side || g.adjacent(u, v)) continue;
                for (NodeId z = 0; z < n; ++z) {
                    if ((b.in_s(z) ? 0 : 1) == side || !g.adjacent(v, z)) continue;
                    if (g.adjacent(u, z)) continue;
                    Bisection out = b;
                    if (side == 0)
                        out.swap_pair(u, z);
                    else
                        out.swap_pair(z, u);
                    if (classify_bisection(g, out) == BisectionClass::Zero)
                        throw Error(errc::internal, "zero swap produced a zero bisection — bug");
                    return out;
                }
            }
        }
    }
    if (is_clique_side(g, b, 0) && is_clique_side(g, b, 1))
        throw Error(errc::structurally_forbidden,
                    "both sides are cliques — every degree is n-2");
    throw Error(errc::internal, "no zero-swap pair on a non-M1 zero bisection — bug");
}

StronglyMinimalResult strongly_minimal_search(const Graph& g) {
    const int n = g.node_count();
    if (n % 2 != 0) throw Error(errc::odd_order, "bisection search needs an even node count");
    const long budget = strongly_minimal_budget(n);

    Bisection b = Bisection::initial(n);
    long iter = 0;
    for (;;) {
        if (++iter > budget)
            throw Error(errc::step_budget_exceeded,
                        "bisection search exceeded " + std::to_string(budget) + " iterations");
        b = local_search_bisection(g, std::move(b));
        if (auto escaped = escape_strongly_minimal(g, b)) {
            b = std::move(*escaped);
            continue;
        }
        BisectionClass cls = classify_bisection(g, b);
        if (cls == BisectionClass::Zero) {
            if (auto swapped = zero_swap(g, b)) {
                b = std::move(*swapped);
                continue;
            }
        }
        auto witnesses = detect_special(g, b);
        if (witnesses.empty())
            throw Error(errc::no_special_found,
                        "strongly locally minimal bisection without M1/M2/M3 — bug or "
                        "forbidden/extremal input");
        return {std::move(b), cls, std::move(witnesses), iter};
    }
}

}  // namespace mbm
