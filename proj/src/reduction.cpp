#include "mbm/reduction.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mbm/decider.hpp"
#include "mbm/error.hpp"

namespace mbm {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error(errc::parse_error, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    const auto parse_int = [](std::string_view part) -> long long {
        long long value = 0;
        const char* first = part.data();
        const char* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw Error(errc::parse_error, "bad rational component '" + std::string(part) + "'");
        return value;
    };
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_int(text), 1};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

CnfFormula parse_cnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    CnfFormula f;
    int declared_clauses = -1;
    std::vector<int> current;

    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first == "c" || first[0] == 'c') continue;
        if (first == "p") {
            if (declared_clauses >= 0) throw Error(errc::parse_error, "duplicate problem line");
            std::string kind;
            if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf" ||
                f.num_vars <= 0 || declared_clauses <= 0)
                throw Error(errc::parse_error, "malformed problem line '" + line + "'");
            continue;
        }
        if (declared_clauses < 0)
            throw Error(errc::parse_error, "clause data before the problem line");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw Error(errc::parse_error,
                                "clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                    std::to_string(current.size()) + " literals (want 3)");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                const int var = lit > 0 ? lit : -lit;
                if (var > f.num_vars)
                    throw Error(errc::parse_error,
                                "literal " + std::to_string(lit) + " out of range (V = " +
                                    std::to_string(f.num_vars) + ")");
                current.push_back(lit);
            }
        }
        if (ls.fail() && !ls.eof())
            throw Error(errc::parse_error, "bad token in clause line '" + line + "'");
    }
    if (!current.empty()) throw Error(errc::parse_error, "unterminated final clause");
    if (declared_clauses < 0) throw Error(errc::parse_error, "missing problem line");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw Error(errc::parse_error,
                    "problem line declares " + std::to_string(declared_clauses) +
                        " clauses but " + std::to_string(f.clauses.size()) + " were given");
    require_2p2n(f);
    return f;
}

void require_2p2n(const CnfFormula& f) {
    std::vector<int> pos(f.num_vars, 0), neg(f.num_vars, 0);
    for (std::size_t k = 0; k < f.clauses.size(); ++k) {
        const auto& cl = f.clauses[k];
        for (int a = 0; a < 3; ++a) {
            const int var = cl[a] > 0 ? cl[a] : -cl[a];
            if (var < 1 || var > f.num_vars)
                throw Error(errc::not_2p2n, "clause " + std::to_string(k + 1) +
                                                " uses out-of-range variable " +
                                                std::to_string(var));
            for (int b = a + 1; b < 3; ++b) {
                const int other = cl[b] > 0 ? cl[b] : -cl[b];
                if (var == other)
                    throw Error(errc::not_2p2n, "clause " + std::to_string(k + 1) +
                                                    " repeats variable " + std::to_string(var));
            }
            (cl[a] > 0 ? pos : neg)[var - 1]++;
        }
    }
    for (int v = 0; v < f.num_vars; ++v)
        if (pos[v] != 2 || neg[v] != 2)
            throw Error(errc::not_2p2n, "variable " + std::to_string(v + 1) + " occurs " +
                                            std::to_string(pos[v]) + " times positively and " +
                                            std::to_string(neg[v]) +
                                            " times negatively (want 2 and 2)");
    if (3 * f.num_clauses() != 4 * f.num_vars || f.num_clauses() % 4 != 0)
        throw Error(errc::internal, "2P2N occurrence counts violate 3C = 4V (bug)");
}

bool evaluate_formula(const CnfFormula& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw Error(errc::precondition_violated, "assignment length != variable count");
    for (const auto& cl : f.clauses) {
        bool satisfied = false;
        for (int lit : cl) {
            const int var = lit > 0 ? lit : -lit;
            if (assignment[var - 1] == (lit > 0)) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied) return false;
    }
    return true;
}

ReductionInstance build_reduction(const CnfFormula& f, const Rational& epsilon,
                                  std::optional<long long> clique_size) {
    require_2p2n(f);
    const long long V = f.num_vars;
    const long long C = f.num_clauses();
    const long long p = epsilon.num;
    const long long q = epsilon.den;
    if (p <= 0 || 8 * p >= q)
        throw Error(errc::epsilon_out_of_range,
                    "epsilon must satisfy 0 < epsilon < 1/8, got " + epsilon.to_string());

    const long long N = clique_size.value_or(12 * C);
    if (N % 2 != 0 || N < 12 * C)
        throw Error(errc::clique_size_out_of_range,
                    "clique size must be even and at least 12C = " + std::to_string(12 * C));
    // ones bound 7C/2 + N/2 <= n(1/4 - eps) with n = 2N + 123C/2, exactly:
    // 16 p N + 492 p C <= 95 q C.
    using Wide = __int128;
    if (Wide(16) * p * N + Wide(492) * p * C > Wide(95) * q * C)
        throw Error(errc::clique_size_out_of_range,
                    "clique size " + std::to_string(N) +
                        " breaks the minority bound for epsilon " + epsilon.to_string());

    ReductionInstance inst;
    inst.num_vars = static_cast<int>(V);
    inst.num_clauses = static_cast<int>(C);
    inst.clique_size = static_cast<int>(N);
    inst.epsilon = epsilon;

    const long long iso = N + 99 * C / 4;
    const long long total = 25 * V + 18 * C + N + iso;
    if (total > 2'000'000)
        throw Error(errc::too_large, "instance would have " + std::to_string(total) + " nodes");
    const int n = static_cast<int>(total);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(50 * V + 35 * C + N * (N - 1) / 2));

    for (int x = 0; x < V; ++x) {
        for (int side = 0; side < 2; ++side) {
            const bool positive = side == 0;
            const NodeId lit = inst.literal_node(x, positive);
            for (int i = 1; i <= 7; ++i) edges.emplace_back(lit, inst.v_node(x, positive, i));
            for (int i = 1; i <= 6; ++i)
                edges.emplace_back(inst.v_node(x, positive, i), inst.v_node(x, positive, i + 1));
            edges.emplace_back(inst.v0_node(x), inst.v_node(x, positive, 7));
        }
        edges.emplace_back(inst.v0_node(x), inst.w0_node(x));
        for (int i = 1; i <= 7; ++i) {
            edges.emplace_back(inst.w0_node(x), inst.v_node(x, true, i));
            edges.emplace_back(inst.w0_node(x), inst.v_node(x, false, i));
            edges.emplace_back(inst.w0_node(x), inst.w_node(x, i));
        }
    }

    for (int j = 0; j < C; ++j) {
        edges.emplace_back(inst.clause_node(j), inst.u_node(j, 1));
        edges.emplace_back(inst.clause_node(j), inst.u_node(j, 2));
        for (int i = 1; i <= 15; ++i) {
            edges.emplace_back(inst.u_node(j, 1), inst.y_node(j, i));
            edges.emplace_back(inst.u_node(j, 2), inst.y_node(j, i));
        }
        for (int lit : f.clauses[j])
            edges.emplace_back(inst.clause_node(j), inst.literal_node((lit > 0 ? lit : -lit) - 1, lit > 0));
    }

    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            edges.emplace_back(inst.clique_node(a), inst.clique_node(b));

    inst.graph = Graph::from_edges(n, edges);

    inst.labels.resize(n);
    for (int x = 0; x < V; ++x) {
        const std::string xs = "x" + std::to_string(x);
        inst.labels[inst.literal_node(x, true)] = xs;
        inst.labels[inst.literal_node(x, false)] = "~" + xs;
        for (int i = 1; i <= 7; ++i) {
            inst.labels[inst.v_node(x, true, i)] = "v" + std::to_string(i) + "(" + xs + ")";
            inst.labels[inst.v_node(x, false, i)] = "v" + std::to_string(i) + "(~" + xs + ")";
            inst.labels[inst.w_node(x, i)] = "w" + std::to_string(i) + "(" + xs + ")";
        }
        inst.labels[inst.v0_node(x)] = "v0(" + xs + ")";
        inst.labels[inst.w0_node(x)] = "w0(" + xs + ")";
    }
    for (int j = 0; j < C; ++j) {
        const std::string cs = "c" + std::to_string(j);
        inst.labels[inst.clause_node(j)] = cs;
        inst.labels[inst.u_node(j, 1)] = "u1(" + cs + ")";
        inst.labels[inst.u_node(j, 2)] = "u2(" + cs + ")";
        for (int i = 1; i <= 15; ++i)
            inst.labels[inst.y_node(j, i)] = "y" + std::to_string(i) + "(" + cs + ")";
    }
    for (int k = 0; k < N; ++k) inst.labels[inst.clique_node(k)] = "clique" + std::to_string(k);
    for (int k = 0; k < iso; ++k) inst.labels[inst.isolated_node(k)] = "iso" + std::to_string(k);

    return inst;
}

Profile proper_profile(const ReductionInstance& inst, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != inst.num_vars)
        throw Error(errc::precondition_violated, "assignment length != variable count");
    Profile s(inst.graph.node_count());
    for (int x = 0; x < inst.num_vars; ++x) {
        s.set(inst.w0_node(x), true);
        s.set(inst.literal_node(x, assignment[x]), true);
    }
    for (int j = 0; j < inst.num_clauses; ++j) {
        s.set(inst.u_node(j, 1), true);
        s.set(inst.u_node(j, 2), true);
    }
    for (int k = 0; k < inst.clique_size / 2; ++k) s.set(inst.clique_node(k), true);
    return s;
}

bool check_correspondence(const ReductionInstance& inst, const std::vector<bool>& assignment) {
    const int n = inst.graph.node_count();
    return max_ones_stable(inst.graph, proper_profile(inst, assignment)) >= n / 2;
}

}  // namespace mbm
