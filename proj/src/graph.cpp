#include "chromspec/graph.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <string>

#include "chromspec/error.h"

namespace chromspec {

namespace {

std::uint64_t next_graph_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

void check_subset(const Graph& g, const VertexSubset& u) {
  if (u.graph_id() != g.id()) {
    fail(ErrorCode::InvalidArgument, "vertex subset belongs to a different graph");
  }
}

}  // namespace

Graph::Graph() : id_(next_graph_id()) {}

Graph Graph::from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorCode::InvalidArgument,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      fail(ErrorCode::InvalidArgument,
           "self-loop at vertex " + std::to_string(u) + " is not allowed in a simple graph");
    }
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = n;
  g.edge_count_ = norm.size();
  g.words_ = (n + 63) / 64;
  g.degrees_.assign(n, 0);
  for (auto [u, v] : norm) {
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + g.degrees_[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  g.bits_.assign(n * g.words_, 0);
  for (auto [u, v] : norm) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
    g.bits_[u * g.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    g.bits_[v * g.words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], degrees_[v]);
}

bool Graph::adjacent(Vertex v, Vertex w) const {
  return (bits_[v * words_ + w / 64] >> (w % 64)) & 1u;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  return std::span<const std::uint64_t>(bits_).subspan(v * words_, words_);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(degrees_.begin(), degrees_.end(), [](std::size_t d) { return d == 0; });
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.bits_ == b.bits_;
}

VertexSubset::VertexSubset(const Graph& g, std::initializer_list<Vertex> members)
    : VertexSubset(g, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSubset::VertexSubset(const Graph& g, std::span<const Vertex> members)
    : graph_id_(g.id()), members_(members.begin(), members.end()), mask_(g.order(), 0) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    fail(ErrorCode::InvalidArgument, "vertex subset contains a duplicate index");
  }
  for (Vertex v : members_) {
    if (v >= g.order()) {
      fail(ErrorCode::InvalidArgument,
           "vertex " + std::to_string(v) + " is not a vertex of the graph");
    }
    mask_[v] = 1;
  }
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  return component_count(g) == 1;
}

std::size_t edge_count_to(const Graph& g, Vertex v, const VertexSubset& u) {
  check_subset(g, u);
  std::size_t count = 0;
  for (Vertex w : g.neighbors(v)) count += u.contains(w) ? 1 : 0;
  return count;
}

std::size_t edge_count_between(const Graph& g, const VertexSubset& u1,
                               const VertexSubset& u2) {
  check_subset(g, u1);
  check_subset(g, u2);
  // Each undirected edge is visited once as (a, b) with a < b and counted if
  // either orientation lands in U1 x U2.
  std::size_t count = 0;
  for (auto [a, b] : g.edges()) {
    bool fwd = u1.contains(a) && u2.contains(b);
    bool bwd = u1.contains(b) && u2.contains(a);
    if (fwd || bwd) ++count;
  }
  return count;
}

bool is_independent_set(const Graph& g, const VertexSubset& u) {
  check_subset(g, u);
  for (Vertex v : u.members()) {
    for (Vertex w : g.neighbors(v)) {
      if (u.contains(w)) return false;
    }
  }
  return true;
}

PairKind classify_pair(const Graph& g, Vertex v, Vertex w) {
  if (v >= g.order() || w >= g.order()) {
    fail(ErrorCode::InvalidArgument, "vertex out of range");
  }
  if (v == w) fail(ErrorCode::InvalidArgument, "classify_pair requires distinct vertices");
  const auto rv = g.row(v);
  const auto rw = g.row(w);
  for (std::size_t i = 0; i < g.words_per_row(); ++i) {
    std::uint64_t a = rv[i];
    std::uint64_t b = rw[i];
    if (i == w / 64) a &= ~(std::uint64_t{1} << (w % 64));
    if (i == v / 64) b &= ~(std::uint64_t{1} << (v % 64));
    if (a != b) return PairKind::Neither;
  }
  return g.adjacent(v, w) ? PairKind::Twin : PairKind::Duplicate;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSubset& u) {
  check_subset(g, u);
  if (u.empty()) fail(ErrorCode::InvalidArgument, "induced subgraph of an empty vertex set");
  InducedSubgraph out;
  out.relabel.assign(g.order(), std::nullopt);
  out.original.assign(u.members().begin(), u.members().end());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    out.relabel[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (out.relabel[a] && out.relabel[b]) edges.emplace_back(*out.relabel[a], *out.relabel[b]);
  }
  out.graph = Graph::from_edge_list(out.original.size(), edges);
  return out;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  return *std::min_element(g.degrees().begin(), g.degrees().end());
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  const auto d = g.degrees();
  if (std::all_of(d.begin(), d.end(), [&](std::size_t x) { return x == d[0]; })) return d[0];
  return std::nullopt;
}

namespace {

// Groups vertices by (bitset row with or without the self bit) and keeps
// groups of size >= 2.
std::vector<std::vector<Vertex>> neighborhood_classes(const Graph& g, bool closed) {
  std::map<std::vector<std::uint64_t>, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto r = g.row(v);
    std::vector<std::uint64_t> key(r.begin(), r.end());
    if (closed) key[v / 64] |= std::uint64_t{1} << (v % 64);
    groups[key].push_back(v);
  }
  std::vector<std::vector<Vertex>> out;
  for (auto& [key, members] : groups) {
    if (members.size() >= 2) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  return neighborhood_classes(g, true);
}

std::vector<std::vector<Vertex>> duplicate_classes(const Graph& g) {
  return neighborhood_classes(g, false);
}

}  // namespace chromspec
