#include "chromspec/compose.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "chromspec/error.h"

namespace chromspec {

namespace {

void check_vertex(const Graph& g, Vertex x, const char* what) {
  if (x >= g.order()) {
    fail(ErrorCode::InvalidArgument, std::string(what) + " " + std::to_string(x) +
                                         " is not a vertex of a graph on " +
                                         std::to_string(g.order()) + " vertices");
  }
}

void check_function(const GluedGraph& glue, std::size_t s, const VertexFunction& f) {
  if (s >= glue.embeddings.size()) fail(ErrorCode::InvalidArgument, "no such summand");
  if (f.graph_id() != glue.summand_ids[s] || f.size() != glue.embeddings[s].size()) {
    fail(ErrorCode::InvalidArgument,
         "function does not live on summand " + std::to_string(s + 1));
  }
}

Vertex preimage_of(const GluedGraph& glue, std::size_t s, Vertex target) {
  const auto& emb = glue.embeddings[s];
  const auto it = std::find(emb.begin(), emb.end(), target);
  if (it == emb.end()) fail(ErrorCode::InvalidArgument, "summand does not contain the glue vertex");
  return static_cast<Vertex>(it - emb.begin());
}

double top_eigenvalue(const Graph& g) { return largest_eigenvalue(spectrum(g)).first; }

// Orthogonal change of basis after which only the first element may be
// nonzero at x. Returns the rotated basis.
std::vector<std::vector<double>> rotate_at(std::span<const VertexFunction> basis, Vertex x) {
  const std::size_t m = basis.size();
  std::vector<std::vector<double>> out;
  out.reserve(m);
  for (const auto& b : basis) out.emplace_back(b.values().begin(), b.values().end());
  if (m <= 1) return out;

  std::vector<double> a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = basis[i][x];
  double norm = 0.0;
  for (double t : a) norm += t * t;
  norm = std::sqrt(norm);
  if (norm == 0.0) return out;

  // Householder reflector H = I - 2 v v^T / v^T v with H a = -sign(a0) |a| e0.
  std::vector<double> v(a);
  v[0] += (a[0] >= 0.0 ? norm : -norm);
  double vv = 0.0;
  for (double t : v) vv += t * t;
  const std::size_t n = out[0].size();
  std::vector<std::vector<double>> rotated(m, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const double h = (i == j ? 1.0 : 0.0) - 2.0 * v[i] * v[j] / vv;
      if (h == 0.0) continue;
      for (std::size_t p = 0; p < n; ++p) rotated[j][p] += h * out[i][p];
    }
  }
  for (std::size_t j = 1; j < m; ++j) rotated[j][x] = 0.0;
  return rotated;
}

bool vanishes_at(const std::vector<double>& f, Vertex x) {
  double scale = 0.0;
  for (double t : f) scale = std::max(scale, std::abs(t));
  return std::abs(f[x]) <= 1e-9 * scale;
}

}  // namespace

GluedGraph one_sum(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2) {
  const std::pair<Graph, Vertex> parts[] = {{g1, x1}, {g2, x2}};
  return one_sum_many(parts);
}

GluedGraph one_sum_many(std::span<const std::pair<Graph, Vertex>> summands) {
  if (summands.empty()) fail(ErrorCode::InvalidArgument, "1-sum of no graphs");
  GluedGraph out;
  std::size_t next = 1;
  std::vector<Edge> edges;
  for (const auto& [g, x] : summands) {
    check_vertex(g, x, "glue vertex");
    std::vector<Vertex> emb(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      emb[v] = (v == x) ? 0 : static_cast<Vertex>(next++);
    }
    for (auto [u, v] : g.edges()) edges.emplace_back(emb[u], emb[v]);
    out.embeddings.push_back(std::move(emb));
    out.summand_ids.push_back(g.id());
  }
  out.result = Graph::from_edge_list(next, edges);
  out.shared = {0};
  return out;
}

Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (auto [u, v] : g2.edges()) {
    edges.emplace_back(static_cast<Vertex>(u + n1), static_cast<Vertex>(v + n1));
  }
  for (Vertex u = 0; u < n1; ++u) {
    for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, static_cast<Vertex>(v + n1));
  }
  return Graph::from_edge_list(n1 + g2.order(), edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t offset = 0;
  std::vector<Edge> edges;
  for (const auto& g : parts) {
    for (auto [u, v] : g.edges()) {
      edges.emplace_back(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
    }
    offset += g.order();
  }
  return Graph::from_edge_list(offset, edges);
}

GluedGraph edge_disjoint_union(const Graph& g1, std::span<const std::uint32_t> labels1,
                               const Graph& g2, std::span<const std::uint32_t> labels2) {
  if (labels1.size() != g1.order() || labels2.size() != g2.order()) {
    fail(ErrorCode::InvalidArgument, "one universe label per vertex is required");
  }
  for (auto labels : {labels1, labels2}) {
    std::vector<std::uint32_t> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorCode::InvalidArgument, "universe labels within one summand must be distinct");
    }
  }
  std::map<std::uint32_t, Vertex> compact;
  for (auto l : labels1) compact[l] = 0;
  for (auto l : labels2) compact[l] = 0;
  Vertex next = 0;
  for (auto& [label, idx] : compact) idx = next++;

  GluedGraph out;
  std::vector<std::uint8_t> seen(next, 0);
  for (auto labels : {labels1, labels2}) {
    std::vector<Vertex> emb;
    for (auto l : labels) emb.push_back(compact[l]);
    for (Vertex v : emb) ++seen[v];
    out.embeddings.push_back(std::move(emb));
  }
  for (Vertex v = 0; v < next; ++v) {
    if (seen[v] == 2) out.shared.push_back(v);
  }
  out.summand_ids = {g1.id(), g2.id()};

  std::vector<Edge> edges;
  for (auto [u, v] : g1.edges()) {
    edges.emplace_back(out.embeddings[0][u], out.embeddings[0][v]);
  }
  const Graph first = Graph::from_edge_list(next, edges);
  std::vector<Edge> clash;
  for (auto [u, v] : g2.edges()) {
    const Vertex a = out.embeddings[1][u];
    const Vertex b = out.embeddings[1][v];
    if (first.adjacent(a, b)) clash.emplace_back(std::min(a, b), std::max(a, b));
    edges.emplace_back(a, b);
  }
  if (!clash.empty()) {
    std::sort(clash.begin(), clash.end());
    std::string list;
    for (auto [a, b] : clash) {
      if (!list.empty()) list += ", ";
      list += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    }
    fail(ErrorCode::InvalidArgument, "edge sets are not disjoint; shared edges: " + list);
  }
  out.result = Graph::from_edge_list(next, edges);
  return out;
}

GluedGraph edge_disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::uint32_t> l1(g1.order());
  std::vector<std::uint32_t> l2(g2.order());
  for (std::uint32_t v = 0; v < l1.size(); ++v) l1[v] = v;
  for (std::uint32_t v = 0; v < l2.size(); ++v) l2[v] = v;
  return edge_disjoint_union(g1, l1, g2, l2);
}

VertexFunction glue_functions(const GluedGraph& glue, const VertexFunction& f1,
                              const VertexFunction& f2) {
  if (glue.embeddings.size() != 2) fail(ErrorCode::InvalidArgument, "gluing needs two summands");
  check_function(glue, 0, f1);
  check_function(glue, 1, f2);
  std::vector<double> out(glue.result.order(), 0.0);
  std::vector<std::uint8_t> set(out.size(), 0);
  const VertexFunction* fs[] = {&f1, &f2};
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& emb = glue.embeddings[s];
    for (Vertex v = 0; v < emb.size(); ++v) {
      const double value = (*fs[s])[v];
      if (set[emb[v]] && out[emb[v]] != value) {
        fail(ErrorCode::InvalidArgument,
             "functions disagree at shared vertex " + std::to_string(emb[v]) + " (" +
                 std::to_string(out[emb[v]]) + " vs " + std::to_string(value) + ")");
      }
      out[emb[v]] = value;
      set[emb[v]] = 1;
    }
  }
  return VertexFunction(glue.result, std::move(out));
}

VertexFunction zero_extend(const GluedGraph& glue, std::size_t summand, const VertexFunction& f) {
  check_function(glue, summand, f);
  const auto& emb = glue.embeddings[summand];
  std::vector<double> out(glue.result.order(), 0.0);
  for (Vertex v = 0; v < emb.size(); ++v) out[emb[v]] = f[v];
  for (Vertex y : glue.shared) {
    if (out[y] != 0.0) {
      fail(ErrorCode::InvalidArgument,
           "zero extension needs f = 0 at shared vertex " + std::to_string(y));
    }
  }
  return VertexFunction(glue.result, std::move(out));
}

InterlacingCheck one_sum_lambda_max_check(const Graph& g1, Vertex x1, const Graph& g2,
                                          Vertex x2) {
  const GluedGraph glue = one_sum(g1, x1, g2, x2);
  const double result = top_eigenvalue(glue.result);
  const double bound = std::max(top_eigenvalue(g1), top_eigenvalue(g2));
  return {result, bound, result <= bound + kGroupTolerance};
}

std::size_t one_sum_multiplicity_prediction(std::size_t m1, std::size_t m2, GlueCase c) {
  if (c == GlueCase::BothVanish) return m1 + m2;
  return one_sum_multiplicity_lower_bound(m1, m2);
}

std::size_t one_sum_multiplicity_lower_bound(std::size_t m1, std::size_t m2) {
  return m1 + m2 == 0 ? 0 : m1 + m2 - 1;
}

TopMultiplicityPrediction predict_one_sum_top_multiplicity(const Graph& g1, Vertex x1,
                                                           const Graph& g2, Vertex x2,
                                                           double tol) {
  check_vertex(g1, x1, "glue vertex");
  check_vertex(g2, x2, "glue vertex");
  const Spectrum s1 = spectrum(g1, tol);
  const Spectrum s2 = spectrum(g2, tol);
  const double l1 = largest_eigenvalue(s1).first;
  const double l2 = largest_eigenvalue(s2).first;
  // The case split is stated for λ_max(G1) >= λ_max(G2); otherwise the roles
  // are exchanged.
  const bool swapped = l2 > l1 + tol;
  const Graph& a = swapped ? g2 : g1;
  const Graph& b = swapped ? g1 : g2;
  const Vertex xa = swapped ? x2 : x1;
  const Vertex xb = swapped ? x1 : x2;
  const double lambda = swapped ? l2 : l1;

  TopMultiplicityPrediction out{};
  out.lambda = lambda;
  out.swapped = swapped;
  out.m1 = multiplicity_of(swapped ? s2 : s1, lambda);
  out.m2 = multiplicity_of(swapped ? s1 : s2, lambda);

  bool all_vanish = true;
  for (auto [g, x] : {std::pair<const Graph*, Vertex>{&a, xa}, {&b, xb}}) {
    const auto basis = eigenspace_basis(*g, lambda, tol);
    for (const auto& f : rotate_at(basis, x)) {
      if (!vanishes_at(f, x)) all_vanish = false;
    }
  }
  out.glue_case = all_vanish ? GlueCase::BothVanish : GlueCase::Otherwise;
  out.predicted = one_sum_multiplicity_prediction(out.m1, out.m2, out.glue_case);
  return out;
}

std::vector<VertexFunction> glue_eigenbasis(const GluedGraph& glue, const Graph& g1,
                                            std::span<const VertexFunction> basis1,
                                            const Graph& g2,
                                            std::span<const VertexFunction> basis2,
                                            double lambda) {
  if (glue.embeddings.size() != 2 || glue.shared.size() != 1 ||
      glue.summand_ids[0] != g1.id() || glue.summand_ids[1] != g2.id()) {
    fail(ErrorCode::InvalidArgument, "glue_eigenbasis needs the 1-sum of exactly g1 and g2");
  }
  const Graph* gs[] = {&g1, &g2};
  const std::span<const VertexFunction> bases[] = {basis1, basis2};
  Vertex xs[2];
  std::vector<std::vector<double>> rotated[2];
  int distinguished[2] = {-1, -1};
  for (std::size_t s = 0; s < 2; ++s) {
    xs[s] = preimage_of(glue, s, glue.shared[0]);
    for (const auto& f : bases[s]) {
      const EigenPair p = verify_eigenpair(*gs[s], lambda, f);
      if (!p.valid) {
        fail(ErrorCode::Verification, "input basis function fails the eigenpair check (residual " +
                                          std::to_string(p.residual) + ")");
      }
    }
    rotated[s] = rotate_at(bases[s], xs[s]);
    if (!rotated[s].empty() && !vanishes_at(rotated[s][0], xs[s])) distinguished[s] = 0;
  }

  std::vector<VertexFunction> out;
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t j = 0; j < rotated[s].size(); ++j) {
      if (distinguished[s] == static_cast<int>(j)) continue;
      std::vector<double> f = rotated[s][j];
      f[xs[s]] = 0.0;
      out.push_back(zero_extend(glue, s, VertexFunction(*gs[s], std::move(f))));
    }
  }
  if (distinguished[0] == 0 && distinguished[1] == 0) {
    std::vector<double> a = rotated[0][0];
    std::vector<double> b = rotated[1][0];
    const double ca = a[xs[0]];
    const double cb = b[xs[1]];
    for (double& t : a) t /= ca;
    for (double& t : b) t /= cb;
    a[xs[0]] = 1.0;
    b[xs[1]] = 1.0;
    out.push_back(glue_functions(glue, VertexFunction(g1, std::move(a)),
                                 VertexFunction(g2, std::move(b))));
  }
  return out;
}

}  // namespace chromspec
