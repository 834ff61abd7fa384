#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chromspec {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency is held twice: sorted neighbor lists for iteration and one bitset
// row per vertex for O(n/64) pair and set queries. Copies share the identity
// token, so subsets and functions built on a copy remain valid on the
// original.
class Graph {
 public:
  Graph();

  // Rejects self-loops and out-of-range endpoints; duplicate pairs (in either
  // orientation) are collapsed.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  std::uint64_t id() const { return id_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::span<const std::size_t> degrees() const { return degrees_; }
  bool adjacent(Vertex v, Vertex w) const;

  // Bitset row of v: words_per_row() 64-bit words, bit w set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const;
  std::size_t words_per_row() const { return words_; }

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool has_isolated_vertex() const;

  // Structural equality on the labelled graph (identity tokens ignored).
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t words_ = 0;
  std::uint64_t id_ = 0;
  std::vector<std::size_t> offsets_;  // CSR offsets into adjacency_
  std::vector<Vertex> adjacency_;
  std::vector<std::size_t> degrees_;
  std::vector<std::uint64_t> bits_;
};

// A set of vertices of one specific graph.
class VertexSubset {
 public:
  VertexSubset(const Graph& g, std::span<const Vertex> members);
  VertexSubset(const Graph& g, std::initializer_list<Vertex> members);

  std::uint64_t graph_id() const { return graph_id_; }
  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const {
    return v < mask_.size() && mask_[v] != 0;
  }

 private:
  std::uint64_t graph_id_;
  std::vector<Vertex> members_;   // sorted, unique
  std::vector<std::uint8_t> mask_;  // length n
};

enum class PairKind { Twin, Duplicate, Neither };

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);

// e(U1, U2): number of edges {u, v} with u in U1 and v in U2. An edge with
// both endpoints in U1 ∩ U2 is counted once.
std::size_t edge_count_between(const Graph& g, const VertexSubset& u1,
                               const VertexSubset& u2);
// e(v, U)
std::size_t edge_count_to(const Graph& g, Vertex v, const VertexSubset& u);

bool is_independent_set(const Graph& g, const VertexSubset& u);

PairKind classify_pair(const Graph& g, Vertex v, Vertex w);

struct InducedSubgraph {
  Graph graph;
  // old index -> new index; absent for vertices outside the subset.
  std::vector<std::optional<Vertex>> relabel;
  // new index -> old index
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& u);

std::size_t min_degree(const Graph& g);
std::optional<std::size_t> regular_degree(const Graph& g);

// Maximal classes (size >= 2) of the twin and duplicate equivalence relations.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);
std::vector<std::vector<Vertex>> duplicate_classes(const Graph& g);

}  // namespace chromspec
