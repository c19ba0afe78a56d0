// Command-line front end for the majority-dynamics toolkit.
//
// Exit codes: 0 success; 1 validation, parse, or usage failure; 2 construct
// called on a graph from a forbidden family; 3 oracle mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mbm/bisection.hpp"
#include "mbm/classifier.hpp"
#include "mbm/constructor.hpp"
#include "mbm/decider.hpp"
#include "mbm/dynamics.hpp"
#include "mbm/error.hpp"
#include "mbm/graph.hpp"
#include "mbm/io.hpp"
#include "mbm/oracle.hpp"
#include "mbm/reduction.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using nlohmann::ordered_json;

void emit(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

ordered_json degree_histogram(const mbm::Graph& g) {
    std::vector<int> counts(static_cast<std::size_t>(g.node_count()) + 1, 0);
    for (mbm::NodeId v = 0; v < g.node_count(); ++v) counts[g.degree(v)]++;
    ordered_json h = ordered_json::object();
    for (std::size_t d = 0; d < counts.size(); ++d)
        if (counts[d] > 0) h[std::to_string(d)] = counts[d];
    return h;
}

int cmd_classify(const std::string& path, const std::string& format) {
    const mbm::Graph g = mbm::read_graph_file(path);
    const mbm::ForbiddenClass fc = mbm::classify_forbidden(g);
    const bool odd = g.node_count() % 2 != 0;
    std::optional<bool> extremal;
    if (!odd) extremal = mbm::is_extremal(g).has_value();

    if (format == "json") {
        ordered_json j{{"forbidden", fc.kind != mbm::ForbiddenKind::NotForbidden},
                       {"class", mbm::forbidden_kind_name(fc.kind)},
                       {"witness", fc.witness ? ordered_json(*fc.witness) : ordered_json(nullptr)},
                       {"degrees", degree_histogram(g)},
                       {"parity", odd ? "odd" : "even"}};
        if (extremal) j["extremal"] = *extremal;
        j["version"] = kVersion;
        emit(j);
    } else {
        if (fc.kind != mbm::ForbiddenKind::NotForbidden)
            std::cout << mbm::forbidden_kind_name(fc.kind) << " (forbidden)\n";
        else if (odd)
            std::cout << "NotForbidden, odd\n";
        else
            std::cout << "NotForbidden, even, " << (*extremal ? "extremal" : "non-extremal")
                      << '\n';
    }
    return 0;
}

int cmd_construct(const std::string& path, const std::string& format, const std::string& dot) {
    const mbm::Graph g = mbm::read_graph_file(path);
    const mbm::ForbiddenClass fc = mbm::classify_forbidden(g);
    if (fc.kind != mbm::ForbiddenKind::NotForbidden) {
        std::cerr << "forbidden: " << mbm::forbidden_kind_name(fc.kind) << '\n';
        return 2;
    }
    const mbm::MbmCertificate cert = mbm::construct_mbm(g);
    const mbm::CertificateCheck check = mbm::validate_certificate(g, cert);

    if (!dot.empty()) {
        std::ofstream out(dot);
        if (!out) throw mbm::Error(mbm::errc::io_error, "cannot open '" + dot + "' for writing");
        out << mbm::graph_to_dot(g, &cert.s0);
    }

    if (format == "json") {
        ordered_json j = mbm::certificate_to_json(g, cert, check.ok);
        j["version"] = kVersion;
        emit(j);
    } else {
        std::cout << "route " << mbm::route_name(cert.route) << '\n'
                  << "s0 " << cert.s0.to_string() << '\n';
        std::cout << "prefix";
        for (mbm::NodeId v : cert.prefix) std::cout << ' ' << v;
        std::cout << '\n'
                  << "post_prefix " << cert.post_prefix.to_string() << '\n'
                  << "ones " << mbm::ones_count(cert.s0) << " -> "
                  << mbm::ones_count(cert.post_prefix) << '\n'
                  << "validated " << (check.ok ? "true" : "false") << '\n';
    }
    if (!check.ok) {
        std::cerr << "certificate validation failed: " << check.reason << '\n';
        return 1;
    }
    return 0;
}

int cmd_decide(const std::string& path, const std::string& profile, const std::string& format) {
    const mbm::Graph g = mbm::read_graph_file(path);
    const mbm::Profile s0 = mbm::parse_profile(profile, g.node_count());
    const mbm::MbmDecision d = mbm::is_mbm_profile(g, s0);
    if (format == "json") {
        ordered_json j = mbm::decision_to_json(d);
        j["version"] = kVersion;
        emit(j);
    } else {
        std::cout << "mbm " << (d.mbm ? "true" : "false") << '\n'
                  << "final_ones " << mbm::ones_count(d.trace.end) << '\n'
                  << "steps " << d.trace.steps.size() << '\n';
    }
    return 0;
}

int cmd_simulate(const std::string& path, const std::string& profile, const std::string& policy,
                 std::uint64_t seed, const std::vector<int>& script, long max_steps,
                 const std::string& format) {
    const mbm::Graph g = mbm::read_graph_file(path);
    const mbm::Profile s0 = mbm::parse_profile(profile, g.node_count());

    mbm::SchedulerPolicy pol;
    if (policy == "min-index")
        pol = mbm::SchedulerPolicy::min_index();
    else if (policy == "random")
        pol = mbm::SchedulerPolicy::seeded_random(seed);
    else if (policy == "scripted")
        pol = mbm::SchedulerPolicy::scripted(std::vector<mbm::NodeId>(script.begin(), script.end()));
    else
        throw mbm::Error(mbm::errc::parse_error,
                         "unknown policy '" + policy + "' (want min-index|random|scripted)");

    const mbm::UpdateTrace t = mbm::run_to_stable(g, s0, pol, max_steps);
    if (format == "json") {
        ordered_json j = mbm::trace_to_json(t);
        j["policy"] = policy;
        if (policy == "random") j["seed"] = seed;
        j["version"] = kVersion;
        emit(j);
    } else {
        std::cout << "start " << t.start.to_string() << '\n';
        for (const auto& s : t.steps)
            std::cout << "flip " << s.node << ' ' << s.from << "->" << s.to << '\n';
        std::cout << "end " << t.end.to_string() << '\n';
    }
    return 0;
}

int cmd_bisect(const std::string& path, const std::string& format) {
    const mbm::Graph g = mbm::read_graph_file(path);
    const int n = g.node_count();

    mbm::Bisection bis;
    std::vector<mbm::SpecialWitness> witnesses;
    long iterations = 0;
    const bool full_search = n % 2 == 0 &&
                             mbm::classify_forbidden(g).kind == mbm::ForbiddenKind::NotForbidden &&
                             !mbm::is_extremal(g);
    if (full_search) {
        mbm::StronglyMinimalResult res = mbm::strongly_minimal_search(g);
        bis = std::move(res.bisection);
        witnesses = std::move(res.witnesses);
        iterations = res.iterations;
    } else {
        bis = mbm::local_search_bisection(g, mbm::Bisection::initial(n));
        witnesses = mbm::detect_special(g, bis);
    }

    const std::vector<int> defs = mbm::deficiencies(g, bis);
    const mbm::BisectionClass cls = mbm::classify_bisection(g, bis);

    if (format == "json") {
        ordered_json ws = ordered_json::array();
        for (const auto& w : witnesses)
            ws.push_back({{"kind", mbm::special_kind_name(w.kind)},
                          {"side", w.side},
                          {"z", w.z},
                          {"u", w.u},
                          {"v", w.v}});
        emit(ordered_json{{"n", n},
                          {"side_s", bis.side_s()},
                          {"width", mbm::width(g, bis)},
                          {"deficiencies", defs},
                          {"class", mbm::bisection_class_name(cls)},
                          {"witnesses", std::move(ws)},
                          {"iterations", iterations},
                          {"version", kVersion}});
    } else {
        std::cout << "side_s";
        for (mbm::NodeId v : bis.side_s()) std::cout << ' ' << v;
        std::cout << '\n'
                  << "width " << mbm::width(g, bis) << '\n'
                  << "class " << mbm::bisection_class_name(cls) << '\n';
        for (const auto& w : witnesses) {
            std::cout << "witness " << mbm::special_kind_name(w.kind) << " side=" << w.side;
            if (w.z >= 0) std::cout << " z=" << w.z;
            if (w.u >= 0) std::cout << " u=" << w.u;
            if (w.v >= 0) std::cout << " v=" << w.v;
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_oracle_graphs(int n, int max_n, bool inject_mismatch) {
    if (n < 1 || n > max_n)
        throw mbm::Error(mbm::errc::too_large,
                         "--n must be between 1 and " + std::to_string(max_n) +
                             " (raise with --max-n)");
    mbm::GraphEnumerator en(n, max_n);
    std::uint64_t checked = 0, mismatches = 0;
    while (en.next()) {
        const mbm::Graph& g = en.current();
        const bool not_forbidden =
            mbm::classify_forbidden(g).kind == mbm::ForbiddenKind::NotForbidden;
        bool oracle = mbm::oracle_is_mbm_graph(g);
        if (inject_mismatch && en.mask() == 1) oracle = !oracle;  // test hook
        if (not_forbidden != oracle) {
            ++mismatches;
            std::cerr << "mismatch: edge mask " << en.mask() << " n " << n << " classify "
                      << (not_forbidden ? "NotForbidden" : "forbidden") << " oracle "
                      << (oracle ? "mbm" : "not-mbm") << '\n';
        }
        ++checked;
    }
    std::cout << checked << " graphs checked, " << mismatches << " mismatches\n";
    return mismatches == 0 ? 0 : 3;
}

int cmd_oracle_profile(const std::string& path, const std::string& profile) {
    const mbm::Graph g = mbm::read_graph_file(path);
    const mbm::Profile s0 = mbm::parse_profile(profile, g.node_count());
    const bool decider = mbm::is_mbm_profile(g, s0).mbm;
    const bool oracle = mbm::oracle_is_mbm_profile(g, s0);
    std::cout << "decider " << (decider ? "mbm" : "not-mbm") << ", oracle "
              << (oracle ? "mbm" : "not-mbm") << (decider == oracle ? ", agree" : ", MISMATCH")
              << '\n';
    return decider == oracle ? 0 : 3;
}

int cmd_reduce(const std::string& cnf_path, const std::string& epsilon_text,
               std::optional<long long> clique_size, bool check, const std::string& graph_out,
               const std::string& labels_out, const std::string& format) {
    std::ifstream in(cnf_path);
    if (!in) throw mbm::Error(mbm::errc::io_error, "cannot open '" + cnf_path + "' for reading");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const mbm::CnfFormula f = mbm::parse_cnf(buffer.str());
    const mbm::Rational eps = mbm::Rational::parse(epsilon_text);
    const mbm::ReductionInstance inst = mbm::build_reduction(f, eps, clique_size);

    if (!graph_out.empty())
        mbm::write_graph_file(inst.graph, graph_out);
    else if (!check)
        std::cout << mbm::graph_to_text(inst.graph);

    if (!labels_out.empty()) {
        ordered_json lj = ordered_json::object();
        for (std::size_t v = 0; v < inst.labels.size(); ++v)
            lj[std::to_string(v)] = inst.labels[v];
        std::ofstream lout(labels_out);
        if (!lout)
            throw mbm::Error(mbm::errc::io_error, "cannot open '" + labels_out + "' for writing");
        lout << lj.dump(2) << '\n';
    }

    if (check) {
        if (f.num_vars > 12)
            throw mbm::Error(mbm::errc::too_large,
                             "--check enumerates 2^V assignments; V <= 12 required");
        const int n = inst.graph.node_count();
        ordered_json rows = ordered_json::array();
        for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
            std::vector<bool> assignment(f.num_vars);
            std::string bits(f.num_vars, '0');
            for (int v = 0; v < f.num_vars; ++v)
                if ((mask >> v) & 1u) {
                    assignment[v] = true;
                    bits[v] = '1';
                }
            const bool sat = mbm::evaluate_formula(f, assignment);
            const int final_ones =
                mbm::max_ones_stable(inst.graph, mbm::proper_profile(inst, assignment));
            const bool mbm_reached = final_ones >= n / 2;
            if (format == "json") {
                rows.push_back({{"assignment", bits},
                                {"satisfies", sat},
                                {"final_ones", final_ones},
                                {"threshold", n / 2},
                                {"mbm", mbm_reached}});
            } else {
                std::cout << bits << " satisfies=" << (sat ? "true" : "false")
                          << " final_ones=" << final_ones << " threshold=" << n / 2
                          << " mbm=" << (mbm_reached ? "true" : "false") << '\n';
            }
        }
        if (format == "json")
            emit(ordered_json{{"n", inst.graph.node_count()},
                              {"epsilon", eps.to_string()},
                              {"clique_size", inst.clique_size},
                              {"rows", std::move(rows)},
                              {"version", kVersion}});
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majority-dynamics toolkit: can a strict minority of ones take over?"};
    app.require_subcommand(1);

    std::string graph_path, profile, format = "text", dot, policy = "min-index";
    std::string cnf_path, epsilon_text = "1/16", graph_out, labels_out;
    std::uint64_t seed = 0;
    long max_steps = -1;
    int oracle_n = 5, max_n = 7;
    long long clique_size_raw = -1;
    std::string oracle_mode = "graphs";
    std::vector<int> script;
    bool check = false, inject_mismatch = false;

    CLI::App* classify = app.add_subcommand("classify", "Forbidden-family and shape report");
    classify->add_option("graph", graph_path, "edge-list file")->required();
    classify->add_option("--format", format, "text|json");

    CLI::App* construct = app.add_subcommand("construct", "Build a minority-takeover certificate");
    construct->add_option("graph", graph_path, "edge-list file")->required();
    construct->add_option("--format", format, "text|json");
    construct->add_option("--dot", dot, "write a DOT rendering with s0 highlighted");

    CLI::App* decide = app.add_subcommand("decide", "Decide whether a minority profile can take over");
    decide->add_option("graph", graph_path, "edge-list file")->required();
    decide->add_option("profile", profile, "0/1 string")->required();
    decide->add_option("--format", format, "text|json");

    CLI::App* simulate = app.add_subcommand("simulate", "Run the dynamics to a stable profile");
    simulate->add_option("graph", graph_path, "edge-list file")->required();
    simulate->add_option("profile", profile, "0/1 string")->required();
    simulate->add_option("--policy", policy, "min-index|random|scripted");
    simulate->add_option("--seed", seed, "seed for --policy random");
    simulate->add_option("--script", script, "node ids for --policy scripted");
    simulate->add_option("--max-steps", max_steps, "step budget (default 4n^2)");
    simulate->add_option("--format", format, "text|json");

    CLI::App* bisect = app.add_subcommand("bisect", "Locally minimal bisection diagnostics");
    bisect->add_option("graph", graph_path, "edge-list file")->required();
    bisect->add_option("--format", format, "text|json");

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
    oracle->add_option("--n", oracle_n, "node count for --mode graphs");
    oracle->add_option("--mode", oracle_mode, "graphs|profile");
    oracle->add_option("--graph", graph_path, "edge-list file for --mode profile");
    oracle->add_option("--profile", profile, "0/1 string for --mode profile");
    oracle->add_option("--max-n", max_n, "raise the enumeration guard");
    oracle->add_flag("--inject-mismatch", inject_mismatch)->group("");  // hidden test hook

    CLI::App* reduce = app.add_subcommand("reduce", "Compile a 2P2N-3SAT formula to a hardness graph");
    reduce->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    reduce->add_option("--epsilon", epsilon_text, "minority-bound parameter p/q in (0, 1/8)");
    reduce->add_option("--clique-size", clique_size_raw, "even clique size (default 12C)");
    reduce->add_flag("--check", check, "enumerate all assignments and report correspondence");
    reduce->add_option("--graph-out", graph_out, "write the edge list to a file");
    reduce->add_option("--labels-out", labels_out, "write the node label map as JSON");
    reduce->add_option("--format", format, "text|json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(graph_path, format);
        if (construct->parsed()) return cmd_construct(graph_path, format, dot);
        if (decide->parsed()) return cmd_decide(graph_path, profile, format);
        if (simulate->parsed())
            return cmd_simulate(graph_path, profile, policy, seed, script, max_steps, format);
        if (bisect->parsed()) return cmd_bisect(graph_path, format);
        if (oracle->parsed()) {
            if (oracle_mode == "graphs") return cmd_oracle_graphs(oracle_n, max_n, inject_mismatch);
            if (oracle_mode == "profile") return cmd_oracle_profile(graph_path, profile);
            throw mbm::Error(mbm::errc::parse_error,
                             "unknown oracle mode '" + oracle_mode + "' (want graphs|profile)");
        }
        if (reduce->parsed())
            return cmd_reduce(cnf_path, epsilon_text,
                              clique_size_raw >= 0 ? std::optional<long long>(clique_size_raw)
                                                   : std::nullopt,
                              check, graph_out, labels_out, format);
    } catch (const mbm::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
