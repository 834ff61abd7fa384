#include <cstring>
#include <string>
#include <vector>

#include "chromspec/chromspec.h"
#include "doctest.h"

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  cs_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  const uint32_t pairs[] = {0, 1, 1, 2, 2, 0};
  cs_graph* g = nullptr;
  REQUIRE(cs_graph_from_edges(3, pairs, 3, &g) == CS_OK);
  CHECK(cs_graph_order(g) == 3);
  CHECK(cs_graph_size(g) == 3);
  CHECK(cs_graph_is_connected(g) == 1);
  std::vector<uint32_t> out(6);
  CHECK(cs_graph_edges(g, out.data(), 3) == 3);
  CHECK(out == std::vector<uint32_t>{0, 1, 0, 2, 1, 2});
  size_t chi = 0;
  CHECK(cs_chromatic_number(g, &chi) == CS_OK);
  CHECK(chi == 3);
  double top = 0;
  size_t mult = 0;
  CHECK(cs_largest_eigenvalue(g, 1e-8, &top, &mult) == CS_OK);
  CHECK(top == doctest::Approx(1.5));
  CHECK(mult == 2);
  char* s = nullptr;
  CHECK(cs_graph_export(g, CS_FORMAT_EDGELIST, &s) == CS_OK);
  CHECK(take(s) == "3 3\n0 1\n0 2\n1 2\n");
  CHECK(cs_spectrum_json(g, 1e-8, &s) == CS_OK);
  CHECK(take(s).find("\"groups\"") != std::string::npos);
  cs_graph_free(g);
  cs_graph_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  cs_graph* g = nullptr;
  CHECK(cs_graph_from_family("petal(", &g) == CS_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(cs_last_error()).find("unrecognised family spec") != std::string::npos);
  const uint32_t loop[] = {1, 1};
  CHECK(cs_graph_from_edges(2, loop, 1, &g) == CS_ERR_INVALID_ARGUMENT);
  CHECK(cs_graph_from_family("K_3", nullptr) == CS_ERR_INVALID_ARGUMENT);
  CHECK(cs_graph_parse_edge_list("2 1\n0 5\n", &g) == CS_ERR_PARSE);
  CHECK(cs_graph_read_edge_list("/nonexistent/graph.txt", &g) == CS_ERR_IO);

  REQUIRE(cs_graph_from_family("2xK_2", &g) == CS_OK);
  char* s = nullptr;
  CHECK(cs_report(g, 1e-8, CS_FORMAT_JSON, &s) == CS_ERR_NOT_CONNECTED);
  CHECK(std::string(cs_last_error()) == "connected graph required");
  cs_graph_free(g);

  CHECK(cs_search(10, "sharp", 1e-8, CS_FORMAT_TEXT, &s) == CS_ERR_CAP_EXCEEDED);
  CHECK(cs_verify("nope", 0, 10, 1e-8, CS_FORMAT_TEXT, &s, nullptr) == CS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reports and compositions") {
  cs_graph* k3 = nullptr;
  REQUIRE(cs_graph_from_family("K_3", &k3) == CS_OK);
  cs_graph* bow = nullptr;
  REQUIRE(cs_one_sum(k3, 0, k3, 0, &bow) == CS_OK);
  CHECK(cs_graph_order(bow) == 5);
  char* s = nullptr;
  REQUIRE(cs_report(bow, 1e-8, CS_FORMAT_JSON, &s) == CS_OK);
  const std::string j = take(s);
  CHECK(j.find("\"sharp\": true") != std::string::npos);
  CHECK(j.find("\"multiplicity\": 3") != std::string::npos);
  REQUIRE(cs_report(bow, 1e-8, CS_FORMAT_TEXT, &s) == CS_OK);
  CHECK(take(s).find("sharp               yes") != std::string::npos);
  CHECK(cs_report(bow, 1e-8, CS_FORMAT_DOT, &s) == CS_ERR_INVALID_ARGUMENT);

  cs_graph* k1 = nullptr;
  cs_graph* m = nullptr;
  cs_graph* petal = nullptr;
  cs_graph* joined = nullptr;
  REQUIRE(cs_graph_from_family("K_1", &k1) == CS_OK);
  REQUIRE(cs_graph_from_family("3xK_2", &m) == CS_OK);
  REQUIRE(cs_graph_from_family("petal(3)", &petal) == CS_OK);
  REQUIRE(cs_join(k1, m, &joined) == CS_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(cs_graph_export(joined, CS_FORMAT_EDGELIST, &a) == CS_OK);
  REQUIRE(cs_graph_export(petal, CS_FORMAT_EDGELIST, &b) == CS_OK);
  CHECK(take(a).size() == take(b).size());

  cs_graph* k2 = nullptr;
  cs_graph* edu = nullptr;
  REQUIRE(cs_graph_from_family("K_2", &k2) == CS_OK);
  CHECK(cs_edge_disjoint_union(k3, k2, &edu) == CS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(cs_last_error()).find("shared edges: {0,1}") != std::string::npos);
  for (cs_graph* g : {k3, bow, k1, m, petal, joined, k2}) cs_graph_free(g);
}

TEST_CASE("verify and search through the C interface") {
  char* s = nullptr;
  int passed = 0;
  REQUIRE(cs_verify("families", 0, 10, 1e-8, CS_FORMAT_TEXT, &s, &passed) == CS_OK);
  CHECK(passed == 1);
  CHECK(take(s).find("all checks passed") != std::string::npos);
  REQUIRE(cs_search(5, "sharp-mult=N-2", 1e-8, CS_FORMAT_JSON, &s) == CS_OK);
  const std::string j = take(s);
  CHECK(j.find("\"predicate\": \"sharp-mult=N-2\"") != std::string::npos);
  REQUIRE(cs_search(4, "sharp-mult=N-1", 1e-8, CS_FORMAT_EDGELIST, &s) == CS_OK);
  CHECK(take(s) == "2 1\n0 1\n\n3 3\n0 1\n0 2\n1 2\n\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  CHECK(std::strlen(cs_version()) > 0);
}
