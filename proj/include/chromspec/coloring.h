#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chromspec/graph.h"
#include "chromspec/rational.h"
#include "chromspec/spectral.h"

namespace chromspec {

// Exact solvers refuse larger inputs instead of approximating.
inline constexpr std::size_t kChromaticNumberCap = 64;
inline constexpr std::size_t kEnumerationCap = 32;
inline constexpr std::size_t kMaxEnumeratedColorings = 1'000'000;

// Vertex coloring using every color 0..k-1 at least once.
class Coloring {
 public:
  Coloring(const Graph& g, std::vector<std::uint32_t> assignment);

  std::uint64_t graph_id() const { return graph_id_; }
  std::size_t k() const { return k_; }
  std::uint32_t color(Vertex v) const { return assignment_[v]; }
  std::span<const std::uint32_t> assignment() const { return assignment_; }

  // classes()[i] lists the vertices of color i in increasing order.
  std::vector<std::vector<Vertex>> classes() const;
  VertexSubset class_subset(const Graph& g, std::size_t i) const;

  // Classes relabelled in order of their least vertex.
  Coloring canonical() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.graph_id_ == b.graph_id_ && a.assignment_ == b.assignment_;
  }

 private:
  Coloring() = default;

  std::uint64_t graph_id_ = 0;
  std::vector<std::uint32_t> assignment_;
  std::size_t k_ = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// A proper coloring with exactly chi(g) colors (canonical form), found by
// DSATUR branch and bound. Refuses graphs above kChromaticNumberCap.
Coloring optimal_coloring(const Graph& g);
std::size_t chromatic_number(const Graph& g);

// Greedy DSATUR coloring (upper bound only).
Coloring dsatur_coloring(const Graph& g);

// All proper chi-colorings up to permutation of the classes, canonical and
// sorted. `chi` must equal chromatic_number(g).
std::vector<Coloring> enumerate_chi_colorings(const Graph& g, std::size_t chi);

// (k-1) e(v, V_i) == deg v for every v outside V_i. Throws on an improper
// coloring.
bool is_equitable_dinv_a(const Graph& g, const Coloring& c);
// e(v, V_j) constant over v in V_i, for all i, j (i == j included).
bool is_equitable_a(const Graph& g, const Coloring& c);

// +1 on class i, -1 on class j, 0 elsewhere.
VertexFunction class_indicator_pm(const Graph& g, const Coloring& c, std::size_t i, std::size_t j);
// +1 at v, -1 at w, 0 elsewhere.
VertexFunction pair_pm(const Graph& g, Vertex v, Vertex w);
// +1 on `plus`, -1 on `minus`, 0 elsewhere.
VertexFunction subset_pm(const Graph& g, const VertexSubset& plus, const VertexSubset& minus);

// The eigenvalue of the +1/-1 function on (plus, minus), if it is an
// eigenfunction at all. Decided in exact integer arithmetic.
std::optional<Rational> plus_minus_check(const Graph& g, const VertexSubset& plus,
                                         const VertexSubset& minus);

struct SupportDecomposition {
  double lhs;  // RQ_G(f)
  double rhs;  // ((|I|-1) RQ_{G_I}(f_I) + k - |I|) / (k - 1)
};

// Rayleigh quotient of f, supported on the classes in `classes`, against the
// value predicted from the subgraph induced by those classes. The coloring
// must be proper and equitable w.r.t. D^{-1}A.
SupportDecomposition support_rq_decomposition(const Graph& g, const Coloring& c,
                                              const VertexFunction& f,
                                              std::span<const std::size_t> classes);

// 1 + (k-1)(λ-1)/(|I|-1); |I| >= 2.
double restricted_eigenvalue_prediction(double lambda, std::size_t k, std::size_t class_count);

}  // namespace chromspec
