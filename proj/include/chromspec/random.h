#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "chromspec/compose.h"
#include "chromspec/graph.h"

namespace chromspec {

// Engine for instance `index` of a corpus drawn with `seed`; instances are
// independent of each other and of evaluation order.
std::mt19937_64 instance_engine(std::uint64_t seed, std::uint64_t index);

// Uniform random spanning tree shape (random attachment order) plus each
// remaining pair independently with probability p.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p);

// Connected graph with a random order in [min_n, max_n] and random density.
Graph corpus_graph(std::uint64_t seed, std::uint64_t index, std::size_t min_n, std::size_t max_n);

// Two connected graphs on overlapping label sets within 0..universe-1 with
// disjoint edge sets and at least one shared vertex.
struct Overlay {
  Graph g1;
  std::vector<std::uint32_t> labels1;
  Graph g2;
  std::vector<std::uint32_t> labels2;
};
Overlay random_overlay(std::mt19937_64& rng, std::size_t universe);

}  // namespace chromspec
