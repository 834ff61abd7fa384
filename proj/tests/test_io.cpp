#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chromspec/error.h"
#include "chromspec/families.h"
#include "chromspec/io.h"
#include "chromspec/random.h"
#include "doctest.h"

using namespace chromspec;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("edge list round trip") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const Graph g = corpus_graph(61, i, 1, 14);
    CHECK(parse_edge_list(write_edge_list(g)) == g);
  }
  CHECK(write_edge_list(path(3)) == "3 2\n0 1\n1 2\n");
  CHECK(parse_edge_list("3 1\r\n2 0\r\n\n\n") == Graph::from_edge_list(3, {{0, 2}}));
  CHECK(parse_edge_list("4 0").order() == 4);
}

TEST_CASE("malformed edge lists are parse errors naming the line") {
  for (const char* bad : {"", "3", "3 1", "3 1\n0", "3 1\n0 3", "3 1\n1 1", "3 2\n0 1", "x 1\n0 1",
                          "3 1\n0 -1", "3 1\n0 1 2", "3 1\n0 1\n1 2"}) {
    INFO(bad);
    CHECK(code_of(bad) == ErrorCode::Parse);
  }
  try {
    parse_edge_list("3 2\n0 1\n0 9\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("edge list files") {
  const auto path_ = std::filesystem::temp_directory_path() / "chromspec_io_test.txt";
  {
    std::ofstream f(path_);
    f << write_edge_list(petal(2));
  }
  CHECK(read_edge_list_file(path_.string()) == petal(2));
  std::filesystem::remove(path_);
  try {
    read_edge_list_file(path_.string());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("dot output") {
  CHECK(write_dot(path(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

TEST_CASE("json views") {
  const auto gj = graph_json(path(3));
  CHECK(gj["n"] == 3);
  CHECK(gj["edges"][1][0] == 1);
  const auto sj = spectrum_json(spectrum(complete(3)));
  CHECK(sj["groups"].size() == 2);
  CHECK(sj["groups"][1]["mult"] == 2);
  const auto cj = coloring_json(optimal_coloring(cycle(4)));
  CHECK(cj["k"] == 2);
  CHECK(cj["classes"][0] == nlohmann::json::array({0, 2}));
}

TEST_CASE("report json schema") {
  const auto j = report_json(full_report(petal(3)));
  CHECK(j["schema"] == 1);
  CHECK(j["sharp"] == true);
  CHECK(j["chi_bound"]["exact"] == "3/2");
  CHECK(j["multiplicity_bounds"]["lower"].is_number());
  CHECK(j["upper_bounds"].size() == 3);
  CHECK(j["upper_bounds"][0]["name"] == "equal_classes");
  CHECK(j["upper_bounds"][0]["applicable"] == false);
  CHECK(j["upper_bounds"][1]["exact"].is_string());
  for (const char* key : {"n", "edges", "chi", "lambda_max", "gap", "multiplicity_at_bound",
                          "spectral_chi_lower", "hoffman", "colorings", "all_equitable", "partial",
                          "omissions", "spectrum"}) {
    INFO(key);
    CHECK(j.contains(key));
  }
  // same input, same bytes
  CHECK(report_json(full_report(petal(3))).dump() == j.dump());
}

TEST_CASE("text report") {
  const std::string t = report_text(full_report(turan(9, 3)));
  CHECK(t.find("sharp               yes\n") != std::string::npos);
  CHECK(t.find("chi/(chi-1)         3/2\n") != std::string::npos);
  CHECK(t.find("equal_classes: 3/2 holds") != std::string::npos);
  CHECK(format_measured(1.0 / 3.0) == "0.333333333333");
}
