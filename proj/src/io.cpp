#include "mbm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "mbm/error.hpp"

namespace mbm {

namespace {

bool skippable(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // all whitespace
}

}  // namespace

Graph read_graph_text(std::istream& in) {
    std::string line;
    int n = -1;
    long m = -1;
    std::vector<std::pair<NodeId, NodeId>> edges;

    while (std::getline(in, line)) {
        if (skippable(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw Error(errc::parse_error, "bad graph header line '" + line + "'");
            edges.reserve(static_cast<std::size_t>(m));
            continue;
        }
        NodeId u, v;
        if (!(ls >> u >> v)) throw Error(errc::parse_error, "bad edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw Error(errc::parse_error, "missing graph header line");
    if (static_cast<long>(edges.size()) != m)
        throw Error(errc::parse_error, "header declares " + std::to_string(m) +
                                           " edges but " + std::to_string(edges.size()) +
                                           " were given");
    return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open '" + path + "' for reading");
    return read_graph_text(in);
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << '\n';
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return std::move(out).str();
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot open '" + path + "' for writing");
    out << graph_to_text(g);
    if (!out) throw Error(errc::io_error, "short write to '" + path + "'");
}

Profile parse_profile(std::string_view text, int expected_n) {
    if (text.empty()) throw Error(errc::parse_error, "empty profile string");
    if (expected_n >= 0 && static_cast<int>(text.size()) != expected_n)
        throw Error(errc::parse_error, "profile has " + std::to_string(text.size()) +
                                           " characters, expected " + std::to_string(expected_n));
    for (char ch : text)
        if (ch != '0' && ch != '1')
            throw Error(errc::parse_error, "profile characters must be 0 or 1");
    return Profile::from_string(text);
}

nlohmann::ordered_json trace_to_json(const UpdateTrace& t) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const UpdateStep& s = t.steps[i];
        steps.push_back({{"step", i},
                         {"node", s.node},
                         {"from", s.from ? 1 : 0},
                         {"to", s.to ? 1 : 0}});
    }
    return {{"start", t.start.to_string()},
            {"steps", std::move(steps)},
            {"end", t.end.to_string()},
            {"ones_before", ones_count(t.start)},
            {"ones_after", ones_count(t.end)}};
}

nlohmann::ordered_json certificate_to_json(const Graph& g, const MbmCertificate& cert,
                                           bool validated) {
    return {{"n", g.node_count()},
            {"s0", cert.s0.to_string()},
            {"prefix", cert.prefix},
            {"post_prefix", cert.post_prefix.to_string()},
            {"route", route_name(cert.route)},
            {"ones_before", ones_count(cert.s0)},
            {"ones_after", ones_count(cert.post_prefix)},
            {"validated", validated}};
}

nlohmann::ordered_json decision_to_json(const MbmDecision& d) {
    return {{"mbm", d.mbm},
            {"initial_ones", ones_count(d.trace.start)},
            {"final_ones", ones_count(d.trace.end)},
            {"trace", trace_to_json(d.trace)}};
}

std::string graph_to_dot(const Graph& g, const Profile* highlight,
                         const std::vector<std::string>* labels) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  " << v << " [label=\"" << v;
        if (labels && v < static_cast<int>(labels->size()) && !(*labels)[v].empty())
            out << ": " << (*labels)[v];
        out << "\"";
        if (highlight && highlight->get(v)) out << ", style=filled, fillcolor=gold";
        out << "];\n";
    }
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return std::move(out).str();
}

}  // namespace mbm
