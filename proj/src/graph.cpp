#include "mbm/graph.hpp"

#include <bit>

namespace mbm {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw Error(errc::out_of_range_node, "negative node count");
    Graph g;
    g.n_ = n;
    g.stride_ = words_for(n);
    g.rows_.assign(static_cast<std::size_t>(n) * g.stride_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::out_of_range_node,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw Error(errc::self_loop, "node " + std::to_string(u));
        g.rows_[static_cast<std::size_t>(u) * g.stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.rows_[static_cast<std::size_t>(v) * g.stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
    g.rebuild_from_rows(n, g.rows_.data());
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    if (n < 0) throw Error(errc::out_of_range_node, "negative node count");
    int stride = words_for(n);
    if (rows.size() != static_cast<std::size_t>(n) * stride)
        throw Error(errc::internal, "adjacency row buffer has wrong size");
    for (int v = 0; v < n; ++v) {
        if ((rows[static_cast<std::size_t>(v) * stride + (v >> 6)] >> (v & 63)) & 1u)
            throw Error(errc::self_loop, "node " + std::to_string(v));
    }
    Graph g;
    g.rebuild_from_rows(n, rows.data());
    return g;
}

void Graph::rebuild_from_rows(int n, const std::uint64_t* rows) {
    n_ = n;
    stride_ = words_for(n);
    std::size_t total = static_cast<std::size_t>(n) * stride_;
    if (rows != rows_.data()) rows_.assign(rows, rows + total);
    offsets_.resize(n + 1);
    long deg_sum = 0;
    offsets_[0] = 0;
    for (int v = 0; v < n; ++v) {
        int d = 0;
        const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(v) * stride_;
        for (int w = 0; w < stride_; ++w) d += std::popcount(row[w]);
        deg_sum += d;
        offsets_[v + 1] = offsets_[v] + d;
    }
    m_ = deg_sum / 2;
    neighbors_.resize(deg_sum);
    for (int v = 0; v < n; ++v) {
        NodeId* out = neighbors_.data() + offsets_[v];
        const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(v) * stride_;
        for (int w = 0; w < stride_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                int b = std::countr_zero(bits);
                *out++ = (w << 6) + b;
                bits &= bits - 1;
            }
        }
    }
}

Profile Profile::from_string(std::string_view text) {
    Profile s(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            s.set(static_cast<int>(i), true);
        else if (text[i] != '0')
            throw Error(errc::parse_error, "profile character '" + std::string(1, text[i]) + "'");
    }
    return s;
}

Profile Profile::from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw Error(errc::too_large, "mask profiles support n <= 64");
    Profile s(n);
    if (n > 0) s.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
    return s;
}

std::string Profile::to_string() const {
    std::string out(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) out[i] = '1';
    return out;
}

std::uint64_t Profile::to_mask() const {
    if (n_ > 64) throw Error(errc::too_large, "mask profiles support n <= 64");
    return n_ == 0 ? 0 : words_[0];
}

int ones_count(const Profile& s) {
    int c = 0;
    for (std::uint64_t w : s.words()) c += std::popcount(w);
    return c;
}

long cut_weight(const Graph& g, std::span<const NodeId> a, std::span<const NodeId> b) {
    int stride = g.stride();
    std::vector<std::uint64_t> amask(stride, 0), bmask(stride, 0);
    for (NodeId v : a) {
        g.check_node(v);
        amask[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    for (NodeId v : b) {
        g.check_node(v);
        if ((amask[v >> 6] >> (v & 63)) & 1u)
            throw Error(errc::overlapping_sets, "node " + std::to_string(v) + " in both sets");
        bmask[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    long total = 0;
    for (NodeId v : a) {
        const std::uint64_t* row = g.row(v);
        for (int w = 0; w < stride; ++w) total += std::popcount(row[w] & bmask[w]);
    }
    return total;
}

const char* errc_name(errc c) {
    switch (c) {
        case errc::out_of_range_node: return "OutOfRangeNode";
        case errc::self_loop: return "SelfLoop";
        case errc::overlapping_sets: return "OverlappingSets";
        case errc::invalid_bisection: return "InvalidBisection";
        case errc::update_not_legal: return "UpdateNotLegal";
        case errc::schedule_exhausted: return "ScheduleExhausted";
        case errc::step_budget_exceeded: return "StepBudgetExceeded";
        case errc::odd_order: return "OddOrder";
        case errc::forbidden_graph: return "ForbiddenGraph";
        case errc::invalid_witness: return "InvalidWitness";
        case errc::structurally_forbidden: return "StructurallyForbidden";
        case errc::no_special_found: return "NoSpecialFound";
        case errc::not_a_minority: return "NotAMinority";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::too_large: return "TooLarge";
        case errc::parse_error: return "ParseError";
        case errc::not_2p2n: return "Not2P2N";
        case errc::epsilon_out_of_range: return "EpsilonOutOfRange";
        case errc::clique_size_out_of_range: return "CliqueSizeOutOfRange";
        case errc::io_error: return "IoError";
        case errc::internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace mbm
