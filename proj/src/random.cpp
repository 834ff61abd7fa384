#include "chromspec/random.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "chromspec/error.h"

namespace chromspec {

std::mt19937_64 instance_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "random graph needs n >= 1");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution extra(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (extra(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph corpus_graph(std::uint64_t seed, std::uint64_t index, std::size_t min_n, std::size_t max_n) {
  if (min_n < 1 || max_n < min_n) fail(ErrorCode::InvalidArgument, "bad corpus order range");
  auto rng = instance_engine(seed, index);
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const std::size_t n = order(rng);
  return random_connected_graph(rng, n, density(rng));
}

Overlay random_overlay(std::mt19937_64& rng, std::size_t universe) {
  if (universe < 3) fail(ErrorCode::InvalidArgument, "overlay needs a universe of >= 3 labels");
  std::uniform_real_distribution<double> density(0.0, 0.7);
  while (true) {
    std::vector<std::uint32_t> labels(universe);
    std::iota(labels.begin(), labels.end(), 0u);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::uniform_int_distribution<std::size_t> size1(2, universe - 1);
    const std::size_t n1 = size1(rng);
    std::vector<std::uint32_t> l1(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n1));

    // Second label set: everything outside l1 plus a random nonempty part of l1.
    std::vector<std::uint32_t> l2(labels.begin() + static_cast<std::ptrdiff_t>(n1), labels.end());
    std::uniform_int_distribution<std::size_t> overlap(1, n1);
    const std::size_t k = overlap(rng);
    l2.insert(l2.end(), l1.begin(), l1.begin() + static_cast<std::ptrdiff_t>(k));
    std::shuffle(l2.begin(), l2.end(), rng);

    Graph g1 = random_connected_graph(rng, n1, density(rng));
    std::set<std::pair<std::uint32_t, std::uint32_t>> used;
    for (auto [u, v] : g1.edges()) used.emplace(std::min(l1[u], l1[v]), std::max(l1[u], l1[v]));

    // Spanning tree on l2 that avoids g1's edges, then sparse extras.
    const std::size_t n2 = l2.size();
    std::vector<Edge> edges2;
    bool ok = true;
    for (std::size_t i = 1; i < n2 && ok; ++i) {
      std::vector<std::size_t> options;
      for (std::size_t j = 0; j < i; ++j) {
        if (!used.count({std::min(l2[i], l2[j]), std::max(l2[i], l2[j])})) options.push_back(j);
      }
      if (options.empty()) {
        ok = false;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      edges2.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(options[pick(rng)]));
    }
    if (!ok) continue;
    std::bernoulli_distribution extra(density(rng));
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t b = a + 1; b < n2; ++b) {
        if (used.count({std::min(l2[a], l2[b]), std::max(l2[a], l2[b])})) continue;
        if (extra(rng)) edges2.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
    Graph g2 = Graph::from_edge_list(n2, edges2);
    return {std::move(g1), std::move(l1), std::move(g2), std::move(l2)};
  }
}

}  // namespace chromspec
