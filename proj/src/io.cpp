#include "chromspec/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chromspec/error.h"

namespace chromspec {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, "edge list line " + std::to_string(line) + ": " + what);
}

// Reads exactly `count` unsigned integers from a line, nothing else.
std::vector<unsigned long long> numbers(const std::string& text, std::size_t count,
                                        std::size_t line) {
  std::istringstream in(text);
  std::vector<unsigned long long> out;
  std::string token;
  while (in >> token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 9) {
      parse_error(line, "expected a non-negative integer, got '" + token + "'");
    }
    out.push_back(std::stoull(token));
  }
  if (out.size() != count) {
    parse_error(line, "expected " + std::to_string(count) + " integers, got " +
                          std::to_string(out.size()));
  }
  return out;
}

json exact(const Rational& r) { return {{"exact", to_string(r)}, {"value", to_double(r)}}; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos) {
    lines.pop_back();
  }
  if (lines.empty()) fail(ErrorCode::Parse, "edge list is empty");
  const auto header = numbers(lines[0], 2, 1);
  const std::size_t n = header[0];
  const std::size_t m = header[1];
  if (lines.size() - 1 != m) {
    fail(ErrorCode::Parse, "edge list header announces " + std::to_string(m) + " edges but " +
                               std::to_string(lines.size() - 1) + " lines follow");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = numbers(lines[i], 2, i + 1);
    if (uv[0] >= n || uv[1] >= n) parse_error(i + 1, "endpoint out of range for n = " + std::to_string(n));
    if (uv[0] == uv[1]) parse_error(i + 1, "self-loop at " + std::to_string(uv[0]));
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string write_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

json spectrum_json(const Spectrum& s) {
  json groups = json::array();
  for (const auto& grp : s.groups()) groups.push_back({{"value", grp.value}, {"mult", grp.multiplicity}});
  return {{"n", s.order()},
          {"tol", s.tolerance()},
          {"eigenvalues", std::vector<double>(s.eigenvalues().begin(), s.eigenvalues().end())},
          {"groups", groups}};
}

json coloring_json(const Coloring& c) { return {{"k", c.k()}, {"classes", c.classes()}}; }

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

json report_json(const BoundReport& r) {
  json out;
  out["schema"] = 1;
  out["n"] = r.n;
  out["edges"] = r.edges;
  out["chi"] = r.chi;
  out["lambda_max"] = {{"value", r.lambda_n}, {"multiplicity", r.lambda_multiplicity}};
  out["chi_bound"] = exact(r.chi_bound);
  out["gap"] = r.gap;
  out["sharp"] = r.sharp;
  out["multiplicity_at_bound"] = r.multiplicity_at_bound;
  out["spectral_chi_lower"] = r.spectral_chi_lower;
  if (r.hoffman) {
    out["hoffman"] = {{"value", r.hoffman->value}, {"regular", r.hoffman->regular}};
  } else {
    out["hoffman"] = nullptr;
  }
  json ub = json::array();
  for (const auto& e : r.upper_bounds) {
    json item = {{"name", e.name}, {"applicable", e.value.has_value()}, {"satisfied", e.satisfied}};
    if (e.value) {
      item["exact"] = to_string(*e.value);
      item["value"] = to_double(*e.value);
    } else {
      item["reason"] = e.reason;
    }
    ub.push_back(item);
  }
  out["upper_bounds"] = ub;
  if (r.multiplicity_bounds) {
    out["multiplicity_bounds"] = {{"lower", r.multiplicity_bounds->lower},
                                  {"upper", r.multiplicity_bounds->upper},
                                  {"y", r.multiplicity_bounds->y}};
  } else {
    out["multiplicity_bounds"] = nullptr;
  }
  json cols = json::array();
  for (std::size_t i = 0; i < r.colorings.size(); ++i) {
    cols.push_back({{"k", r.colorings[i].size()},
                    {"classes", r.colorings[i]},
                    {"equitable", static_cast<bool>(r.equitable[i])}});
  }
  out["colorings"] = cols;
  out["all_equitable"] = r.all_equitable;
  out["partial"] = r.partial;
  out["omissions"] = r.omissions;
  out["spectrum"] = spectrum_json(r.spectrum);
  return out;
}

std::string format_measured(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string report_text(const BoundReport& r) {
  std::ostringstream out;
  out << "vertices            " << r.n << "\n";
  out << "edges               " << r.edges << "\n";
  out << "chromatic number    " << r.chi << "\n";
  out << "lambda_max          " << format_measured(r.lambda_n) << " (multiplicity "
      << r.lambda_multiplicity << ")\n";
  out << "chi/(chi-1)         " << to_string(r.chi_bound) << "\n";
  out << "gap                 " << format_measured(r.gap) << "\n";
  out << "sharp               " << (r.sharp ? "yes" : "no") << "\n";
  out << "m(chi/(chi-1))      " << r.multiplicity_at_bound << "\n";
  out << "chi >= lambda/(lambda-1) = " << format_measured(r.spectral_chi_lower) << "\n";
  if (r.hoffman) {
    out << "hoffman bound       " << format_measured(r.hoffman->value)
        << (r.hoffman->regular ? " (regular)" : " (not regular)") << "\n";
  }
  out << "upper bounds on lambda_max:\n";
  for (const auto& e : r.upper_bounds) {
    out << "  " << e.name << ": ";
    if (e.value) {
      out << to_string(*e.value) << (e.satisfied ? " holds" : " VIOLATED") << "\n";
    } else {
      out << "n/a (" << e.reason << ")\n";
    }
  }
  if (r.multiplicity_bounds) {
    out << "multiplicity bounds " << r.multiplicity_bounds->lower << " <= m <= "
        << r.multiplicity_bounds->upper << "\n";
  }
  out << "chi-colorings       " << r.colorings.size() << (r.partial ? " (partial)" : "") << "\n";
  out << "all equitable       " << (r.all_equitable ? "yes" : "no") << "\n";
  for (const auto& o : r.omissions) out << "note: " << o << "\n";
  out << "spectrum:\n";
  for (auto it = r.spectrum.groups().rbegin(); it != r.spectrum.groups().rend(); ++it) {
    out << "  " << format_measured(it->value) << " x" << it->multiplicity << "\n";
  }
  return out.str();
}

}  // namespace chromspec
