#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "chromspec/bounds.h"
#include "chromspec/coloring.h"
#include "chromspec/graph.h"
#include "chromspec/spectral.h"

namespace chromspec {

// "n m" on the first line, then m lines "u v" (0-based). Blank trailing lines
// are ignored; anything else malformed is a Parse error naming the line.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);

// Undirected DOT without attributes.
std::string write_dot(const Graph& g);

nlohmann::json spectrum_json(const Spectrum& s);
nlohmann::json coloring_json(const Coloring& c);
nlohmann::json graph_json(const Graph& g);
// Versioned ("schema": 1).
nlohmann::json report_json(const BoundReport& r);

// Human-readable report: exact values as p/q, measured values with 12
// significant digits.
std::string report_text(const BoundReport& r);

// %.12g
std::string format_measured(double x);

}  // namespace chromspec
