#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chromspec/graph.h"
#include "chromspec/spectral.h"

namespace chromspec {

// A composed graph together with the maps from each summand into it.
struct GluedGraph {
  Graph result;
  // embeddings[s][v] = image of vertex v of summand s in `result`
  std::vector<std::vector<Vertex>> embeddings;
  // Glue vertex y (1-sums) or the shared vertices (edge-disjoint union),
  // sorted, as vertices of `result`.
  std::vector<Vertex> shared;
  // Identity tokens of the summands, for checking functions handed back in.
  std::vector<std::uint64_t> summand_ids;
};

// G1[x1] ⊕ G2[x2]. The glue vertex y is vertex 0 of the result; the other
// vertices of g1 follow in order, then those of g2.
GluedGraph one_sum(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2);
// All x_i identified with a single y = 0; summands follow in input order.
GluedGraph one_sum_many(std::span<const std::pair<Graph, Vertex>> summands);

// g1 on 0..n1-1, g2 on n1..n1+n2-1, plus every edge between the two.
Graph join(const Graph& g1, const Graph& g2);
// Copies placed consecutively.
Graph disjoint_union(std::span<const Graph> parts);

// Union over a shared vertex universe. labels_s[v] is the universe label of
// vertex v of summand s; the labels actually used are compacted in increasing
// order to 0..N-1. A shared edge is an error and every such edge is listed.
GluedGraph edge_disjoint_union(const Graph& g1, std::span<const std::uint32_t> labels1,
                               const Graph& g2, std::span<const std::uint32_t> labels2);
// Both graphs already live on the index space 0..max(n1, n2)-1.
GluedGraph edge_disjoint_union(const Graph& g1, const Graph& g2);

// The common extension of f1 and f2 along the embeddings. The two must agree
// exactly on every shared vertex.
VertexFunction glue_functions(const GluedGraph& glue, const VertexFunction& f1,
                              const VertexFunction& f2);
// f on one summand, 0 on the rest of the result; f must vanish on the shared
// vertices.
VertexFunction zero_extend(const GluedGraph& glue, std::size_t summand, const VertexFunction& f);

struct InterlacingCheck {
  double result;  // λ_max of the 1-sum
  double bound;   // max of the summands' λ_max
  bool ok;        // result <= bound + 1e-8
};

InterlacingCheck one_sum_lambda_max_check(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2);

enum class GlueCase { BothVanish, Otherwise };

// m1 + m2 when every top eigenfunction on both sides vanishes at the glue
// vertex, m1 + m2 - 1 otherwise.
std::size_t one_sum_multiplicity_prediction(std::size_t m1, std::size_t m2, GlueCase c);
// max(0, m1 + m2 - 1), valid for any eigenvalue.
std::size_t one_sum_multiplicity_lower_bound(std::size_t m1, std::size_t m2);

struct TopMultiplicityPrediction {
  double lambda;  // λ_max of the summand with the larger top eigenvalue
  std::size_t m1;
  std::size_t m2;
  GlueCase glue_case;
  std::size_t predicted;
  bool swapped;  // true when g2 had the strictly larger λ_max
};

// Measures both summands and applies the case split at λ = max λ_max.
TopMultiplicityPrediction predict_one_sum_top_multiplicity(const Graph& g1, Vertex x1,
                                                           const Graph& g2, Vertex x2,
                                                           double tol = kGroupTolerance);

// Eigenfunctions of a two-summand 1-sum for λ built from eigenbases of the
// summands (g1, g2 as passed to one_sum). Each basis is rotated so that at
// most one element is nonzero at the glue vertex; the rest are zero-extended
// and the two distinguished elements are glued when both exist. Inputs are
// verified first.
std::vector<VertexFunction> glue_eigenbasis(const GluedGraph& glue, const Graph& g1,
                                            std::span<const VertexFunction> basis1,
                                            const Graph& g2,
                                            std::span<const VertexFunction> basis2, double lambda);

}  // namespace chromspec
