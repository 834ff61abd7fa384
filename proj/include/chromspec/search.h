#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chromspec/graph.h"
#include "chromspec/spectral.h"

namespace chromspec {

inline constexpr std::size_t kSearchMaxOrder = 9;
// Largest order the canonical form accepts (code must fit in 64 bits).
inline constexpr std::size_t kCanonicalMaxOrder = 10;

// Canonical relabelling by colour refinement and individualisation: two
// graphs are isomorphic iff their canonical forms are equal.
Graph canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);

// All connected graphs on n vertices up to isomorphism, in canonical form,
// sorted by canonical code. n <= kSearchMaxOrder.
std::vector<Graph> connected_graphs(std::size_t n);

enum class PredicateKind {
  Sharp,            // λ_max = χ/(χ-1)
  SharpMult,        // ... with multiplicity exactly `value`
  SharpMultMinus,   // ... with multiplicity exactly N - `value`
};

struct SearchPredicate {
  PredicateKind kind = PredicateKind::Sharp;
  std::size_t value = 0;
};

// "sharp", "sharp-mult=K" or "sharp-mult=N-J".
SearchPredicate parse_predicate(std::string_view text);
std::string to_string(const SearchPredicate& p);

struct SearchHit {
  Graph graph;  // canonical labelling
  std::size_t chi;
  double lambda_max;
  std::size_t multiplicity;  // of λ_max
};

struct SearchResult {
  std::size_t max_n = 0;
  SearchPredicate predicate;
  // Indexed by n (entries 0 and 1 unused for counting sharp graphs).
  std::vector<std::size_t> connected_counts;
  std::vector<std::size_t> sharp_counts;
  std::vector<std::size_t> hit_counts;
  std::vector<SearchHit> hits;  // ordered by n, then canonical code
};

// Exhaustive scan over connected graphs with 2..max_n vertices.
SearchResult search_sharp(std::size_t max_n, const SearchPredicate& predicate,
                          double tol = kGroupTolerance);

}  // namespace chromspec
