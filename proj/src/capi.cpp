#include "chromspec/chromspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "chromspec/bounds.h"
#include "chromspec/coloring.h"
#include "chromspec/compose.h"
#include "chromspec/error.h"
#include "chromspec/families.h"
#include "chromspec/io.h"
#include "chromspec/search.h"
#include "chromspec/verify.h"

struct cs_graph {
  chromspec::Graph g;
};

namespace {

using namespace chromspec;

thread_local std::string last_error;

cs_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return CS_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return CS_ERR_PARSE;
    case ErrorCode::NotConnected: return CS_ERR_NOT_CONNECTED;
    case ErrorCode::CapExceeded: return CS_ERR_CAP_EXCEEDED;
    case ErrorCode::NoConvergence: return CS_ERR_NO_CONVERGENCE;
    case ErrorCode::Io: return CS_ERR_IO;
    case ErrorCode::Verification: return CS_ERR_VERIFICATION;
  }
  return CS_ERR_INTERNAL;
}

template <class F>
cs_status guarded(F&& body) {
  try {
    body();
    return CS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return CS_ERR_INTERNAL;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cs_graph* wrap(Graph g) { return new cs_graph{std::move(g)}; }

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string search_text(const SearchResult& r, bool edges_only) {
  std::ostringstream out;
  if (!edges_only) {
    out << "predicate " << to_string(r.predicate) << ", max_n " << r.max_n << "\n";
    out << "n  connected  sharp  hits\n";
    for (std::size_t n = 2; n <= r.max_n; ++n) {
      out << n << "  " << r.connected_counts[n] << "  " << r.sharp_counts[n] << "  "
          << r.hit_counts[n] << "\n";
    }
  }
  for (const auto& h : r.hits) {
    if (!edges_only) {
      out << "\n# n=" << h.graph.order() << " chi=" << h.chi
          << " lambda_max=" << format_measured(h.lambda_max) << " mult=" << h.multiplicity << "\n";
    } else if (&h != &r.hits.front()) {
      out << "\n";
    }
    out << write_edge_list(h.graph);
  }
  return out.str();
}

nlohmann::json search_json(const SearchResult& r) {
  nlohmann::json counts = nlohmann::json::array();
  for (std::size_t n = 2; n <= r.max_n; ++n) {
    counts.push_back({{"n", n},
                      {"connected", r.connected_counts[n]},
                      {"sharp", r.sharp_counts[n]},
                      {"hits", r.hit_counts[n]}});
  }
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : r.hits) {
    nlohmann::json item = graph_json(h.graph);
    item["chi"] = h.chi;
    item["lambda_max"] = h.lambda_max;
    item["multiplicity"] = h.multiplicity;
    hits.push_back(item);
  }
  return {{"max_n", r.max_n},
          {"predicate", to_string(r.predicate)},
          {"counts", counts},
          {"hits", hits}};
}

}  // namespace

extern "C" {

const char* cs_version(void) { return "1.0.0"; }

const char* cs_last_error(void) { return last_error.c_str(); }

void cs_string_free(char* s) { std::free(s); }

cs_status cs_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, cs_graph** out) {
  return guarded([&] {
    need(out, "out");
    if (m > 0) need(pairs, "pairs");
    std::vector<Edge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {pairs[2 * i], pairs[2 * i + 1]};
    *out = wrap(Graph::from_edge_list(n, edges));
  });
}

cs_status cs_graph_from_family(const char* spec, cs_graph** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = wrap(parse_family(spec));
  });
}

cs_status cs_graph_parse_edge_list(const char* text, cs_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(parse_edge_list(text));
  });
}

cs_status cs_graph_read_edge_list(const char* path, cs_graph** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = wrap(read_edge_list_file(path));
  });
}

void cs_graph_free(cs_graph* g) { delete g; }

size_t cs_graph_order(const cs_graph* g) { return g ? g->g.order() : 0; }

size_t cs_graph_size(const cs_graph* g) { return g ? g->g.size() : 0; }

int cs_graph_is_connected(const cs_graph* g) {
  return g && g->g.order() > 0 && is_connected(g->g) ? 1 : 0;
}

size_t cs_graph_edges(const cs_graph* g, uint32_t* pairs, size_t cap) {
  if (!g) return 0;
  const auto edges = g->g.edges();
  for (size_t i = 0; i < edges.size() && i < cap && pairs; ++i) {
    pairs[2 * i] = edges[i].first;
    pairs[2 * i + 1] = edges[i].second;
  }
  return edges.size();
}

cs_status cs_graph_export(const cs_graph* g, cs_format fmt, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    switch (fmt) {
      case CS_FORMAT_JSON: *out = dup(dump(graph_json(g->g))); return;
      case CS_FORMAT_DOT: *out = dup(write_dot(g->g)); return;
      case CS_FORMAT_TEXT:
      case CS_FORMAT_EDGELIST: *out = dup(write_edge_list(g->g)); return;
    }
    fail(ErrorCode::InvalidArgument, "unknown output format");
  });
}

cs_status cs_spectrum_json(const cs_graph* g, double tol, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(dump(spectrum_json(spectrum(g->g, tol))));
  });
}

cs_status cs_largest_eigenvalue(const cs_graph* g, double tol, double* value,
                                size_t* multiplicity) {
  return guarded([&] {
    need(g, "graph");
    const auto [v, m] = largest_eigenvalue(spectrum(g->g, tol));
    if (value) *value = v;
    if (multiplicity) *multiplicity = m;
  });
}

cs_status cs_chromatic_number(const cs_graph* g, size_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = chromatic_number(g->g);
  });
}

cs_status cs_report(const cs_graph* g, double tol, cs_format fmt, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    if (fmt != CS_FORMAT_JSON && fmt != CS_FORMAT_TEXT) {
      fail(ErrorCode::InvalidArgument, "reports are available as json or text");
    }
    const BoundReport r = full_report(g->g, tol);
    *out = dup(fmt == CS_FORMAT_JSON ? dump(report_json(r)) : report_text(r));
  });
}

cs_status cs_one_sum(const cs_graph* g1, uint32_t x1, const cs_graph* g2, uint32_t x2,
                     cs_graph** out) {
  return guarded([&] {
    need(g1, "g1");
    need(g2, "g2");
    need(out, "out");
    *out = wrap(one_sum(g1->g, x1, g2->g, x2).result);
  });
}

cs_status cs_join(const cs_graph* g1, const cs_graph* g2, cs_graph** out) {
  return guarded([&] {
    need(g1, "g1");
    need(g2, "g2");
    need(out, "out");
    *out = wrap(join(g1->g, g2->g));
  });
}

cs_status cs_edge_disjoint_union(const cs_graph* g1, const cs_graph* g2, cs_graph** out) {
  return guarded([&] {
    need(g1, "g1");
    need(g2, "g2");
    need(out, "out");
    *out = wrap(edge_disjoint_union(g1->g, g2->g).result);
  });
}

cs_status cs_verify(const char* suite, uint64_t seed, size_t max_n, double tol, cs_format fmt,
                    char** out, int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(out, "out");
    if (fmt != CS_FORMAT_JSON && fmt != CS_FORMAT_TEXT) {
      fail(ErrorCode::InvalidArgument, "verification results are available as json or text");
    }
    VerifyOptions o;
    o.suite = suite;
    o.seed = seed;
    o.max_n = max_n;
    o.tol = tol;
    const VerifyReport r = run_verify(o);
    *out = dup(fmt == CS_FORMAT_JSON ? dump(verify_json(r)) : verify_text(r));
    if (passed) *passed = r.passed() ? 1 : 0;
  });
}

cs_status cs_search(size_t max_n, const char* predicate, double tol, cs_format fmt, char** out) {
  return guarded([&] {
    need(predicate, "predicate");
    need(out, "out");
    if (fmt == CS_FORMAT_DOT) fail(ErrorCode::InvalidArgument, "search output is json, text or edgelist");
    const SearchResult r = search_sharp(max_n, parse_predicate(predicate), tol);
    switch (fmt) {
      case CS_FORMAT_JSON: *out = dup(dump(search_json(r))); return;
      case CS_FORMAT_EDGELIST: *out = dup(search_text(r, true)); return;
      default: *out = dup(search_text(r, false)); return;
    }
  });
}

}  // extern "C"
