#pragma once

// File formats and report serialization: edge-list graph files, 0/1 profile
// strings, JSON records for traces / certificates / decisions, and DOT export
// for visualization.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mbm/constructor.hpp"
#include "mbm/decider.hpp"
#include "mbm/dynamics.hpp"
#include "mbm/graph.hpp"

namespace mbm {

// Edge-list text: first line "n m", then m lines "u v" (0-indexed); blank
// lines and lines starting with '#' are ignored.
Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);
void write_graph_file(const Graph& g, const std::string& path);

// A string of exactly n characters from {0,1}; expected_n < 0 accepts any
// positive length.
Profile parse_profile(std::string_view text, int expected_n = -1);

nlohmann::ordered_json trace_to_json(const UpdateTrace& t);
nlohmann::ordered_json certificate_to_json(const Graph& g, const MbmCertificate& cert,
                                           bool validated);
nlohmann::ordered_json decision_to_json(const MbmDecision& d);

// Undirected DOT; when a profile is given its 1-nodes are filled.  Optional
// labels annotate nodes ("id: label").
std::string graph_to_dot(const Graph& g, const Profile* highlight = nullptr,
                         const std::vector<std::string>* labels = nullptr);

}  // namespace mbm
