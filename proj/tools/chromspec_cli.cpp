// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chromspec/chromspec.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
  void operator()(cs_graph* g) const { cs_graph_free(g); }
};
using GraphPtr = std::unique_ptr<cs_graph, GraphDeleter>;

struct Failure {
  int code;
  std::string message;
};

void check(cs_status st) {
  if (st != CS_OK) throw Failure{kExitUsage, cs_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  cs_string_free(s);
  return out;
}

// An existing file is read as an edge list, anything else as a family spec.
GraphPtr load(const std::string& input) {
  cs_graph* g = nullptr;
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    check(cs_graph_read_edge_list(input.c_str(), &g));
  } else {
    check(cs_graph_from_family(input.c_str(), &g));
  }
  return GraphPtr(g);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "cannot write " + out_path};
  f << text;
}

uint32_t vertex_arg(const std::string& s) {
  try {
    size_t used = 0;
    const unsigned long v = std::stoul(s, &used);
    if (used == s.size() && v <= 0xffffffffUL) return static_cast<uint32_t>(v);
  } catch (const std::exception&) {
  }
  throw Failure{kExitUsage, "expected a vertex index, got '" + s + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normalized Laplacian spectra, chromatic bounds and sharp graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-8;
  uint64_t seed = 0;
  std::string format;
  size_t max_n = 0;
  std::string out_path;
  app.add_option("--tol", tol, "grouping and sharpness tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for random corpora")->capture_default_str();
  app.add_option("--format", format, "json | text | dot | edgelist")
      ->check(CLI::IsMember({"json", "text", "dot", "edgelist"}));
  app.add_option("--max-n", max_n, "size cap (verify: corpus order, search: graph order)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write output to PATH instead of stdout");

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "emit a family graph");
  gen->add_option("spec", gen_spec, "family spec, e.g. petal(6) or Gktd(4,3,2)")->required();

  std::string report_input;
  auto* report = app.add_subcommand("report", "bound report for a graph");
  report->add_option("input", report_input, "edge-list file or family spec")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("suite", suite, "families | sharp | onesum | bounds | all")
      ->check(CLI::IsMember({"families", "sharp", "onesum", "bounds", "all"}));

  std::vector<std::string> compose_args;
  auto* compose = app.add_subcommand("compose", "compose two graphs and report the result");
  compose->add_option("args", compose_args,
                      "onesum A x1 B x2 | join A B | edu A B (A, B: file or family spec)")
      ->required();

  std::string predicate = "sharp";
  auto* search = app.add_subcommand("search", "exhaustive scan of small connected graphs");
  search->add_option("predicate", predicate, "sharp | sharp-mult=K | sharp-mult=N-J");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  static const std::map<std::string, cs_format> formats = {{"json", CS_FORMAT_JSON},
                                                           {"text", CS_FORMAT_TEXT},
                                                           {"dot", CS_FORMAT_DOT},
                                                           {"edgelist", CS_FORMAT_EDGELIST}};
  auto fmt_or = [&](const char* fallback) { return formats.at(format.empty() ? fallback : format); };

  try {
    if (*gen) {
      GraphPtr g = load(gen_spec);
      char* s = nullptr;
      check(cs_graph_export(g.get(), fmt_or("edgelist"), &s));
      emit(take(s), out_path);
      return kExitPass;
    }
    if (*report) {
      GraphPtr g = load(report_input);
      char* s = nullptr;
      check(cs_report(g.get(), tol, fmt_or("json"), &s));
      emit(take(s), out_path);
      return kExitPass;
    }
    if (*verify) {
      char* s = nullptr;
      int passed = 0;
      check(cs_verify(suite.c_str(), seed, max_n ? max_n : 10, tol, fmt_or("text"), &s, &passed));
      emit(take(s), out_path);
      return passed ? kExitPass : kExitFail;
    }
    if (*compose) {
      const std::string& op = compose_args.front();
      GraphPtr result;
      cs_graph* raw = nullptr;
      if (op == "onesum") {
        if (compose_args.size() != 5) throw Failure{kExitUsage, "usage: compose onesum A x1 B x2"};
        GraphPtr a = load(compose_args[1]);
        GraphPtr b = load(compose_args[3]);
        check(cs_one_sum(a.get(), vertex_arg(compose_args[2]), b.get(),
                         vertex_arg(compose_args[4]), &raw));
      } else if (op == "join" || op == "edu") {
        if (compose_args.size() != 3) throw Failure{kExitUsage, "usage: compose " + op + " A B"};
        GraphPtr a = load(compose_args[1]);
        GraphPtr b = load(compose_args[2]);
        check(op == "join" ? cs_join(a.get(), b.get(), &raw)
                           : cs_edge_disjoint_union(a.get(), b.get(), &raw));
      } else {
        throw Failure{kExitUsage, "unknown composition '" + op + "' (onesum, join or edu)"};
      }
      result.reset(raw);
      const cs_format f = fmt_or("json");
      char* s = nullptr;
      if (f == CS_FORMAT_DOT || f == CS_FORMAT_EDGELIST) {
        check(cs_graph_export(result.get(), f, &s));
      } else {
        check(cs_report(result.get(), tol, f, &s));
      }
      emit(take(s), out_path);
      return kExitPass;
    }
    if (*search) {
      char* s = nullptr;
      check(cs_search(max_n ? max_n : 5, predicate.c_str(), tol, fmt_or("text"), &s));
      emit(take(s), out_path);
      return kExitPass;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}
