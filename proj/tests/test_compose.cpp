#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "chromspec/coloring.h"
#include "chromspec/compose.h"
#include "chromspec/error.h"
#include "chromspec/families.h"
#include "chromspec/random.h"
#include "chromspec/search.h"
#include "chromspec/spectral.h"
#include "doctest.h"
#include "support/oracles.h"

using namespace chromspec;

namespace {

double top(const Graph& g) { return oracle::laplacian_eigenvalues(g).back(); }

std::size_t top_mult(const Graph& g) {
  return oracle::cluster(oracle::laplacian_eigenvalues(g), 1e-8).back().second;
}

Graph bowtie() { return one_sum(complete(3), 0, complete(3), 0).result; }

}  // namespace

TEST_CASE("1-sum layout") {
  const GluedGraph s = one_sum(path(3), 2, complete(3), 1);
  CHECK(s.result.order() == 5);
  CHECK(s.result.size() == 5);
  CHECK(s.shared == std::vector<Vertex>{0});
  CHECK(s.embeddings[0] == std::vector<Vertex>{1, 2, 0});
  CHECK(s.embeddings[1] == std::vector<Vertex>{3, 0, 4});
  CHECK_THROWS_AS(one_sum(path(3), 3, complete(3), 0), Error);
}

TEST_CASE("1-sums of triangles give petal graphs up to relabelling") {
  std::vector<std::pair<Graph, Vertex>> parts(3, {complete(3), 0});
  const Graph g = one_sum_many(parts).result;
  CHECK(oracle::isomorphic(g, petal(3)));
  CHECK(oracle::isomorphic(join(complete(1), parse_family("3xK_2")), petal(3)));
  CHECK(oracle::isomorphic(bowtie(), petal(2)));
}

TEST_CASE("join and disjoint union") {
  const Graph j = join(complete(1), parse_family("3xK_2"));
  CHECK(j.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {3, 4}, {5, 6}});
  CHECK(join(empty_graph(2), empty_graph(3)) == complete_bipartite(2, 3));
  const std::vector<Graph> parts{complete(2), path(3)};
  const Graph u = disjoint_union(parts);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});
}

TEST_CASE("interlacing and chromatic number over random pairs") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    auto rng = instance_engine(17, i);
    const Graph a = random_connected_graph(rng, 2 + rng() % 8, 0.4);
    const Graph b = random_connected_graph(rng, 2 + rng() % 8, 0.4);
    const Vertex xa = static_cast<Vertex>(rng() % a.order());
    const Vertex xb = static_cast<Vertex>(rng() % b.order());
    const Graph s = one_sum(a, xa, b, xb).result;
    CHECK(top(s) <= std::max(top(a), top(b)) + 1e-8);
    CHECK(oracle::chromatic_number(s) == std::max(oracle::chromatic_number(a), oracle::chromatic_number(b)));
    const auto chk = one_sum_lambda_max_check(a, xa, b, xb);
    CHECK(chk.ok);
  }
}

TEST_CASE("top multiplicity of 1-sums") {
  // sharp pieces with equal chi
  struct P {
    Graph g;
    Vertex x;
  };
  const std::vector<P> pieces{{complete(3), 0}, {petal(2), 0}, {petal(2), 1}, {turan(6, 3), 0}, {bowtie(), 0}, {bowtie(), 2}};
  for (const auto& p : pieces) {
    for (const auto& q : pieces) {
      const auto pred = predict_one_sum_top_multiplicity(p.g, p.x, q.g, q.x);
      const Graph s = one_sum(p.g, p.x, q.g, q.x).result;
      CHECK(std::abs(top(s) - 1.5) < 1e-8);
      CHECK(top_mult(s) == top_mult(p.g) + top_mult(q.g) - 1);
      CHECK(pred.predicted == top_mult(s));
      CHECK(pred.glue_case == GlueCase::Otherwise);
    }
  }
  // a bipartite piece with a smaller-top partner: K_2 (top 2) with K_3
  const auto pred = predict_one_sum_top_multiplicity(complete(3), 0, complete(2), 0);
  CHECK(pred.swapped);
  CHECK(pred.lambda == doctest::Approx(2.0));
  CHECK(pred.m1 == 1);
  CHECK(pred.m2 == 0);
  CHECK(pred.predicted == 0);  // a triangle with a pendant edge is not bipartite
  CHECK(top(one_sum(complete(3), 0, complete(2), 0).result) < 2.0);
  CHECK(one_sum_multiplicity_prediction(2, 3, GlueCase::BothVanish) == 5);
  CHECK(one_sum_multiplicity_prediction(2, 3, GlueCase::Otherwise) == 4);
  CHECK(one_sum_multiplicity_lower_bound(0, 0) == 0);
}

TEST_CASE("both-vanish case adds multiplicities") {
  // look for a small graph and vertex where the whole top eigenspace vanishes
  std::size_t found = 0;
  for (std::size_t n = 3; n <= 6 && found < 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (Vertex x = 0; x < n; ++x) {
        const auto self = predict_one_sum_top_multiplicity(g, x, g, x);
        if (self.glue_case != GlueCase::BothVanish) continue;
        ++found;
        CHECK(self.predicted == 2 * self.m1);
        const Graph s = one_sum(g, x, g, x).result;
        CHECK(std::abs(top(s) - self.lambda) < 1e-8);
        CHECK(top_mult(s) == self.predicted);
      }
    }
  }
  CHECK(found > 0);
  const auto pred = predict_one_sum_top_multiplicity(cycle(4), 0, cycle(6), 0);
  CHECK(pred.glue_case == GlueCase::Otherwise);
  CHECK(pred.predicted == 1);
  CHECK(top_mult(one_sum(cycle(4), 0, cycle(6), 0).result) == 1);
}

TEST_CASE("glued eigenbases are independent eigenfunctions") {
  const std::vector<std::pair<Graph, Vertex>> pieces{{petal(2), 1}, {turan(6, 3), 2}, {complete(3), 0}, {petal(3), 0}};
  for (const auto& [a, xa] : pieces) {
    for (const auto& [b, xb] : pieces) {
      const GluedGraph s = one_sum(a, xa, b, xb);
      const auto ba = eigenspace_basis(a, 1.5);
      const auto bb = eigenspace_basis(b, 1.5);
      const auto glued = glue_eigenbasis(s, a, ba, b, bb, 1.5);
      CHECK(glued.size() == ba.size() + bb.size() - 1);
      Eigen::MatrixXd m(s.result.order(), glued.size());
      for (std::size_t j = 0; j < glued.size(); ++j) {
        const auto p = verify_eigenpair(s.result, 1.5, glued[j]);
        CHECK(p.valid);
        CHECK(p.residual <= 1e-9);
        for (std::size_t v = 0; v < s.result.order(); ++v) m(v, j) = glued[j][static_cast<Vertex>(v)];
      }
      Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
      lu.setThreshold(1e-9);
      CHECK(static_cast<std::size_t>(lu.rank()) == glued.size());
    }
  }
  // wrong eigenvalue is rejected
  const GluedGraph s = one_sum(complete(3), 0, complete(3), 0);
  const auto b3 = eigenspace_basis(complete(3), 1.5);
  CHECK_THROWS_AS(glue_eigenbasis(s, complete(3), b3, complete(3), b3, 1.5), Error);
}

TEST_CASE("glue_functions and zero_extend enforce their contracts") {
  const Graph k3 = complete(3);
  const Graph p3 = path(3);
  const GluedGraph s = one_sum(k3, 0, p3, 1);
  const VertexFunction f(k3, {1.0, 2.0, 3.0});
  const VertexFunction h(p3, {4.0, 1.0, 5.0});
  const VertexFunction glued = glue_functions(s, f, h);
  CHECK(glued[0] == 1.0);
  CHECK(glued[1] == 2.0);
  CHECK(glued[3] == 4.0);
  CHECK_THROWS_AS(glue_functions(s, f, VertexFunction(p3, {4.0, 1.5, 5.0})), Error);
  CHECK_THROWS_AS(zero_extend(s, 0, f), Error);
  const VertexFunction z = zero_extend(s, 1, VertexFunction(p3, {1.0, 0.0, -1.0}));
  CHECK(z[0] == 0.0);
  CHECK(z[3] == 1.0);
  CHECK_THROWS_AS(zero_extend(s, 0, h), Error);
}

TEST_CASE("generalized petals: lambda_max = n/(n-1), multiplicity N - m") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 5; ++m) {
      const Graph g = generalized_petal(m, n);
      std::vector<std::pair<Graph, Vertex>> parts(m, {complete(n), 0});
      CHECK(one_sum_many(parts).result == g);
      CHECK(std::abs(top(g) - double(n) / double(n - 1)) < 1e-8);
      CHECK(top_mult(g) == g.order() - m);
    }
  }
}

TEST_CASE("2-clique-sums of triangles") {
  CHECK(std::abs(top(cycle(4)) - 2.0) < 1e-10);
  const Graph k4e = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(std::abs(top(k4e) - 5.0 / 3.0) < 1e-10);
}

TEST_CASE("edge-disjoint union") {
  const std::uint32_t l1[] = {0, 1, 2};
  const std::uint32_t l2[] = {2, 3, 4};
  const GluedGraph u = edge_disjoint_union(complete(3), l1, complete(3), l2);
  CHECK(u.result.order() == 5);
  CHECK(u.shared == std::vector<Vertex>{2});
  CHECK(oracle::isomorphic(u.result, petal(2)));

  // labels are compacted in increasing order
  const std::uint32_t s1[] = {10, 30};
  const std::uint32_t s2[] = {30, 20};
  const GluedGraph c = edge_disjoint_union(complete(2), s1, complete(2), s2);
  CHECK(c.result.edges() == std::vector<Edge>{{0, 2}, {1, 2}});

  try {
    edge_disjoint_union(complete(3), complete(2));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("shared edges: {0,1}") != std::string::npos);
  }
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto rng = instance_engine(9, i);
    const Overlay o = random_overlay(rng, 3 + rng() % 8);
    const GluedGraph e = edge_disjoint_union(o.g1, o.labels1, o.g2, o.labels2);
    CHECK(top(e.result) <= std::max(top(o.g1), top(o.g2)) + 1e-8);
  }
}

TEST_CASE("edge-disjoint union over one vertex is the 1-sum") {
  const Graph a = petal(2);
  const Graph b = cycle(5);
  const Vertex xa = 4, xb = 2;
  // label the glue vertex 0 and keep the 1-sum order for the rest
  std::vector<std::uint32_t> la, lb;
  std::uint32_t next = 1;
  for (Vertex v = 0; v < a.order(); ++v) la.push_back(v == xa ? 0 : next++);
  for (Vertex v = 0; v < b.order(); ++v) lb.push_back(v == xb ? 0 : next++);
  const GluedGraph e = edge_disjoint_union(a, la, b, lb);
  const GluedGraph s = one_sum(a, xa, b, xb);
  CHECK(e.result == s.result);
  CHECK(e.embeddings == s.embeddings);
  CHECK(e.shared == s.shared);
}
