#include <algorithm>

#include "chromspec/coloring.h"
#include "chromspec/error.h"
#include "chromspec/families.h"
#include "chromspec/random.h"
#include "doctest.h"
#include "support/oracles.h"

using namespace chromspec;

TEST_CASE("chromatic number agrees with plain backtracking") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    const Graph g = corpus_graph(21, i, 1, 11);
    const Coloring c = optimal_coloring(g);
    CHECK(is_proper(g, c));
    CHECK(c.k() == oracle::chromatic_number(g));
    CHECK(dsatur_coloring(g).k() >= c.k());
    CHECK(is_proper(g, dsatur_coloring(g)));
  }
}

TEST_CASE("chromatic numbers of families") {
  CHECK(chromatic_number(complete(7)) == 7);
  CHECK(chromatic_number(cycle(7)) == 3);
  CHECK(chromatic_number(cycle(8)) == 2);
  CHECK(chromatic_number(petal(4)) == 3);
  CHECK(chromatic_number(turan(12, 4)) == 4);
  CHECK(chromatic_number(empty_graph(3)) == 1);
  CHECK(chromatic_number(g_ktd(2, 5, 1)) == 5);
  // d = k < t drops the chromatic number below t
  CHECK(chromatic_number(g_ktd(2, 3, 2)) == 2);
  CHECK_THROWS_AS(chromatic_number(complete(65)), Error);
}

TEST_CASE("enumeration matches restricted growth strings") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const Graph g = corpus_graph(8, i, 2, 9);
    const std::size_t chi = chromatic_number(g);
    const auto mine = enumerate_chi_colorings(g, chi);
    auto ref = oracle::colorings(g, chi);
    std::vector<std::vector<std::uint32_t>> got;
    for (const auto& c : mine) got.emplace_back(c.assignment().begin(), c.assignment().end());
    std::sort(got.begin(), got.end());
    std::sort(ref.begin(), ref.end());
    CHECK(got == ref);
    for (const auto& c : mine) {
      std::vector<std::uint32_t> a(c.assignment().begin(), c.assignment().end());
      CHECK(is_equitable_dinv_a(g, c) == oracle::equitable_dinv_a(g, a, chi));
    }
  }
}

TEST_CASE("colorings: canonical relabelling and classes") {
  const Graph g = cycle(4);
  const Coloring c(g, {1, 0, 1, 0});
  CHECK(c.k() == 2);
  CHECK(c.canonical().assignment()[0] == 0);
  CHECK(c.classes() == std::vector<std::vector<Vertex>>{{1, 3}, {0, 2}});
  CHECK_THROWS_AS(Coloring(g, {0, 2, 0, 2}), Error);  // color 1 unused
  CHECK_THROWS_AS(Coloring(g, {0, 1}), Error);
  CHECK_FALSE(is_proper(g, Coloring(g, {0, 0, 1, 1})));
}

TEST_CASE("equitability") {
  const Graph t = turan(9, 3);
  const Coloring tc(t, g_ktd_class_colors(3, 3));
  CHECK(is_equitable_dinv_a(t, tc));
  CHECK(is_equitable_a(t, tc));
  // petal(3) colored hub / one leaf per triangle / other leaf
  const Graph p = petal(3);
  const Coloring pc(p, {0, 1, 1, 1, 2, 2, 2});
  CHECK(is_equitable_dinv_a(p, pc));
  // the hub sends 3 edges to each leaf class, each leaf sends 1 back: still
  // constant within every class
  CHECK(is_equitable_a(p, pc));
  const Graph c5a = cycle(5);
  CHECK_FALSE(is_equitable_a(c5a, Coloring(c5a, {0, 1, 0, 1, 2})));
  // bipartite colorings of connected graphs are always equitable
  const Graph p3 = path(3);
  CHECK(is_equitable_dinv_a(p3, Coloring(p3, {0, 1, 0})));
  const Graph p4 = path(4);
  CHECK(is_equitable_dinv_a(p4, Coloring(p4, {0, 1, 0, 1})));
  const Graph c5 = cycle(5);
  CHECK_FALSE(is_equitable_dinv_a(c5, Coloring(c5, {0, 1, 0, 1, 2})));
  CHECK_THROWS_AS(is_equitable_dinv_a(p4, Coloring(p4, {0, 0, 1, 1})), Error);
}

TEST_CASE("plus/minus functions decided exactly") {
  const Graph p = petal(3);
  // twins v_1, w_1 = (1, 4): eigenvalue (d+1)/d with d = 2
  const auto twin = plus_minus_check(p, VertexSubset(p, {1}), VertexSubset(p, {4}));
  REQUIRE(twin.has_value());
  CHECK(*twin == ratio(3, 2));
  const Graph kab = complete_bipartite(3, 3);
  const auto dup = plus_minus_check(kab, VertexSubset(kab, {0}), VertexSubset(kab, {1}));
  REQUIRE(dup.has_value());
  CHECK(*dup == 1);
  const Graph p4 = path(4);
  CHECK_FALSE(plus_minus_check(p4, VertexSubset(p4, {0}), VertexSubset(p4, {1})).has_value());
  const Graph k4 = complete(4);
  const Coloring kc = optimal_coloring(k4);
  const VertexFunction f = class_indicator_pm(k4, kc, 0, 2);
  CHECK(verify_eigenpair(k4, 4.0 / 3.0, f).valid);
  CHECK(verify_eigenpair(k4, 4.0 / 3.0, pair_pm(k4, 1, 3)).valid);
}

TEST_CASE("class indicator functions of equitable colorings sit at k/(k-1)") {
  for (const Graph& g : {turan(8, 4), petal(5), g_ktd(3, 4, 2), cycle(6)}) {
    const std::size_t chi = chromatic_number(g);
    for (const Coloring& c : enumerate_chi_colorings(g, chi)) {
      if (!is_equitable_dinv_a(g, c)) continue;
      for (std::size_t i = 0; i < chi; ++i) {
        for (std::size_t j = i + 1; j < chi; ++j) {
          const auto p = verify_eigenpair(g, double(chi) / double(chi - 1), class_indicator_pm(g, c, i, j));
          CHECK(p.valid);
          CHECK(p.residual <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("support decomposition of the Rayleigh quotient") {
  const Graph t = turan(12, 4);
  const Coloring c(t, g_ktd_class_colors(3, 4));
  std::vector<double> v(12, 0.0);
  // supported on classes 0 and 2
  for (Vertex x = 0; x < 3; ++x) v[x] = 1.0 + x;
  for (Vertex x = 6; x < 9; ++x) v[x] = -2.0 + 0.5 * x;
  const VertexFunction f(t, v);
  const std::size_t classes[] = {0, 2};
  const auto d = support_rq_decomposition(t, c, f, classes);
  CHECK(d.lhs == doctest::Approx(d.rhs).epsilon(1e-12));
  CHECK(restricted_eigenvalue_prediction(4.0 / 3.0, 4, 2) == doctest::Approx(2.0));
}
