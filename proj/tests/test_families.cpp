#include <cmath>

#include "chromspec/coloring.h"
#include "chromspec/error.h"
#include "chromspec/families.h"
#include "chromspec/spectral.h"
#include "chromspec/verify.h"
#include "doctest.h"
#include "support/certificates.h"
#include "support/oracles.h"

using namespace chromspec;

namespace {

// Groupwise comparison of the independent Jacobi spectrum against exact terms.
bool jacobi_matches(const Graph& g, const ExactSpectrum& exact) {
  const auto groups = oracle::cluster(oracle::laplacian_eigenvalues(g), 1e-8);
  const auto& terms = exact.groups();
  if (groups.size() != terms.size()) return false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (std::abs(groups[i].first - to_double(terms[i].first)) > 1e-8) return false;
    if (groups[i].second != terms[i].second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("generator shapes") {
  CHECK(complete(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(turan(12, 3).size() == 48);
  const Graph p = petal(6);
  CHECK(p.order() == 13);
  CHECK(p.size() == 18);
  CHECK(p.adjacent(1, 7));
  CHECK(p.degree(0) == 12);
  const Graph gp = generalized_petal(3, 4);
  CHECK(gp.order() == 10);
  CHECK(gp.size() == 18);
  CHECK(complete_split(4, 3).order() == 6);
  CHECK(complete_split(4, 3).size() == 4 * 2 + 1);
  CHECK(cycle(5).size() == 5);
  CHECK(path(5).size() == 4);
  CHECK(empty_graph(3).size() == 0);
  CHECK_THROWS_AS(turan(10, 3), Error);
}

TEST_CASE("Gktd: removed cliques and degrees") {
  const std::size_t k = 4, t = 3, d = 2;
  const Graph g = g_ktd(k, t, d);
  CHECK(g.order() == 12);
  // v_1^1 and v_1^2 lie on a removed clique; v_3^1 and v_3^2 do not
  CHECK_FALSE(g.adjacent(g_ktd_vertex(k, 1, 1), g_ktd_vertex(k, 2, 1)));
  CHECK(g.adjacent(g_ktd_vertex(k, 1, 3), g_ktd_vertex(k, 2, 3)));
  CHECK_FALSE(g.adjacent(g_ktd_vertex(k, 1, 1), g_ktd_vertex(k, 1, 2)));
  CHECK(g.degree(g_ktd_vertex(k, 1, 1)) == (t - 1) * (k - 1));
  CHECK(g.degree(g_ktd_vertex(k, 1, 4)) == (t - 1) * k);
  CHECK(g_ktd(3, 3, 0) == turan(9, 3));
}

TEST_CASE("closed-form family spectra match an independent eigensolver") {
  for (std::size_t n = 2; n <= 12; ++n) CHECK(jacobi_matches(complete(n), oracle_spectrum_complete(n)));
  for (std::size_t a = 1; a <= 11; ++a)
    for (std::size_t b = a; a + b <= 12; ++b)
      CHECK(jacobi_matches(complete_bipartite(a, b), oracle_spectrum_bipartite(a, b)));
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t k = 2; k <= n; ++k)
      if (n % k == 0) CHECK(jacobi_matches(turan(n, k), oracle_spectrum_turan(n, k)));
  for (std::size_t m = 1; m <= 6; ++m) CHECK(jacobi_matches(petal(m), oracle_spectrum_petal(m)));
}

TEST_CASE("closed forms reproduce the published spectra") {
  CHECK(oracle_spectrum_complete(4).to_string() == "{4/3 x3, 0 x1}");
  CHECK(oracle_spectrum_bipartite(2, 3).to_string() == "{2 x1, 1 x3, 0 x1}");
  CHECK(oracle_spectrum_turan(9, 3).to_string() == "{3/2 x2, 1 x6, 0 x1}");
  CHECK(oracle_spectrum_petal(3).to_string() == "{3/2 x4, 1/2 x2, 0 x1}");
  // K_{1,1} = K_2: the middle term vanishes
  CHECK(oracle_spectrum_bipartite(1, 1).to_string() == "{2 x1, 0 x1}");
}

TEST_CASE("Gktd closed form against the Jacobi solver") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t t = 2; t <= 5; ++t) {
      for (std::size_t d = 1; d <= k; ++d) {
        if (d == k && (k < t || k * t <= 4)) continue;
        const ExactSpectrum ex = oracle_spectrum_g_ktd(k, t, d);
        CHECK(ex.total() == k * t);
        INFO("k=" << k << " t=" << t << " d=" << d << " " << ex.to_string());
        CHECK(jacobi_matches(g_ktd(k, t, d), ex));
      }
    }
  }
  CHECK_THROWS_AS(oracle_spectrum_g_ktd(2, 3, 2), Error);
  CHECK_THROWS_AS(oracle_spectrum_g_ktd(2, 2, 2), Error);
}

TEST_CASE("ExactSpectrum merges coinciding terms") {
  // k = 3, t = 4, d = 1: 1 - (k-d)/(k(k-1)(t-1)) = 8/9 and (k^2-d)/(k(k-1)) = 4/3 = t/(t-1)
  const ExactSpectrum ex = oracle_spectrum_g_ktd(3, 4, 1);
  CHECK(ex.groups().size() == 4);
  bool found = false;
  for (const auto& [v, m] : ex.groups()) {
    if (v == ratio(4, 3)) {
      CHECK(m == 4);
      found = true;
    }
  }
  CHECK(found);
  const ExactSpectrum merged({{ratio(1, 2), 2}, {ratio(2, 4), 1}, {Rational(3), 0}});
  CHECK(merged.to_string() == "{1/2 x3}");
}

TEST_CASE("case table: the six cases") {
  CHECK(g_ktd_lambda_max_case(4, 3, 2).case_id == 1);
  CHECK(g_ktd_lambda_max_case(3, 3, 2).case_id == 2);
  CHECK(g_ktd_lambda_max_case(3, 3, 1).case_id == 3);
  CHECK(g_ktd_lambda_max_case(3, 4, 1).case_id == 4);
  const auto five = g_ktd_lambda_max_case(2, 5, 1);
  CHECK(five.case_id == 5);
  CHECK(five.value == ratio(3, 2));
  CHECK(five.multiplicity == 1);
  CHECK(five.value > ratio(5, 4));
  const auto six = g_ktd_lambda_max_case(3, 5, 2);
  CHECK(six.case_id == 6);
  CHECK(six.value == ratio(3, 2));
  CHECK_THROWS_AS(g_ktd_lambda_max_case(2, 2, 2), Error);
  CHECK_THROWS_AS(g_ktd_lambda_max_case(2, 3, 2), Error);
  CHECK_THROWS_AS(g_ktd_lambda_max_case(1, 3, 1), Error);
}

TEST_CASE("case table agrees with the measured top eigenvalue") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t t = 2; t <= 5; ++t) {
      for (std::size_t d = 1; d <= k; ++d) {
        if (k == 2 && t == 2 && d == 2) continue;
        if (d == k && k < t) continue;
        const auto c = g_ktd_lambda_max_case(k, t, d);
        const auto top = oracle::cluster(oracle::laplacian_eigenvalues(g_ktd(k, t, d)), 1e-8).back();
        INFO("k=" << k << " t=" << t << " d=" << d);
        CHECK(std::abs(top.first - to_double(c.value)) <= 1e-8);
        CHECK(top.second == c.multiplicity);
        CHECK(oracle::chromatic_number(g_ktd(k, t, d)) == t);
      }
    }
  }
}

TEST_CASE("Gktd certificates are eigenfunctions and span the spectrum") {
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t t = 2; t <= 5; ++t) {
      for (std::size_t d = 1; d <= k; ++d) {
        if (d == k && (k < t || k * t <= 4)) continue;
        const Graph g = g_ktd(k, t, d);
        const auto certs = certs::g_ktd_certificates(k, t, d);
        CHECK(certs.size() + 1 == k * t);
        for (const auto& c : certs) {
          const auto p = verify_eigenpair(g, to_double(c.eigenvalue), VertexFunction(g, c.values));
          INFO("k=" << k << " t=" << t << " d=" << d << " " << c.family);
          CHECK(p.valid);
          CHECK(p.residual <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("complete split graphs: lambda_max = 1 + t/(N-1)") {
  for (std::size_t t = 1; t <= 8; ++t) {
    for (std::size_t chi = 2; chi <= 5; ++chi) {
      const auto top = oracle::laplacian_eigenvalues(complete_split(t, chi)).back();
      CHECK(std::abs(top - to_double(oracle_lambda_max_complete_split(t, chi))) <= 1e-8);
    }
  }
}

TEST_CASE("family spec parsing") {
  CHECK(parse_family("K_4") == complete(4));
  CHECK(parse_family("K_{4}") == complete(4));
  CHECK(parse_family("K_{2,3}") == complete_bipartite(2, 3));
  CHECK(parse_family(" T(9, 3) ") == turan(9, 3));
  CHECK(parse_family("petal(6)") == petal(6));
  CHECK(parse_family("gpetal(3,4)") == generalized_petal(3, 4));
  CHECK(parse_family("Gktd(4,3,2)") == g_ktd(4, 3, 2));
  CHECK(parse_family("split(4,3)") == complete_split(4, 3));
  CHECK(parse_family("C_5") == cycle(5));
  CHECK(parse_family("P_3") == path(3));
  CHECK(parse_family("E_2") == empty_graph(2));
  CHECK(parse_family("3xK_2").size() == 3);
  CHECK(parse_family("3xK_2").order() == 6);
  for (const char* bad : {"petal(", "K_", "T(10,3)", "foo", "", "0xK_2", "C_2", "K_9999999"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_family(bad), Error);
  }
  try {
    parse_family("petal(");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  try {
    parse_family("K_6000");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("family corpus is connected and named") {
  const auto corpus = family_corpus();
  CHECK(corpus.size() > 50);
  for (const auto& ng : corpus) {
    CHECK_FALSE(ng.name.empty());
    CHECK(is_connected(ng.graph));
  }
}
