#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromspec/coloring.h"
#include "chromspec/graph.h"
#include "chromspec/rational.h"
#include "chromspec/spectral.h"

namespace chromspec {

// Global tolerance for bound comparisons and the sharpness flag.
inline constexpr double kBoundTolerance = 1e-8;

// λ_N / (λ_N - 1), a lower bound for χ. Needs λ_N > 1.
double chromatic_lower_bound_from_spectrum(double lambda_n);

struct HoffmanBound {
  double value;  // 1 - μ_max / μ_min on the adjacency spectrum
  bool regular;  // only then does it coincide with the normalized-Laplacian bound
};

// Throws on an edgeless graph.
HoffmanBound hoffman_bound(const Graph& g);

struct MultiplicityBounds {
  std::size_t lower;
  std::size_t upper;
  std::size_t y;  // number of coloring classes meeting the twin sets
};

// Bounds on m(χ/(χ-1)) from disjoint duplicate and twin collections, for a
// graph attaining the bound and a proper χ-coloring c. The structure is
// verified (disjointness, pairwise duplicates / twins).
MultiplicityBounds multiplicity_bounds_from_structure(const Graph& g, const Coloring& c,
                                                      std::span<const VertexSubset> duplicates,
                                                      std::span<const VertexSubset> twins);

// An upper bound on λ_N, or the reason it does not apply.
struct OptionalBound {
  std::optional<Rational> value;
  std::string reason;  // empty when value is present
};

// N/δ, when every class of c has size N/k.
OptionalBound upper_bound_equal_classes(const Graph& g, const Coloring& c);
// (1/x) N/(N - N_1), x = min over classes i and v in V_i of deg v/(N - N_i).
Rational upper_bound_general(const Graph& g, const Coloring& c);
// max{(N/d)(k-1)/k, k/(k-1)} for d-regular g with c equitable w.r.t. D^{-1}A.
OptionalBound upper_bound_regular_equitable(const Graph& g, const Coloring& c);

struct UpperBoundEntry {
  std::string name;
  std::optional<Rational> value;
  std::string reason;  // why absent
  bool satisfied;      // value >= λ_N - tol (true when absent)
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t chi = 0;
  double lambda_n = 0.0;
  std::size_t lambda_multiplicity = 0;
  Rational chi_bound;  // χ/(χ-1)
  double gap = 0.0;    // λ_N - χ/(χ-1)
  bool sharp = false;
  std::size_t multiplicity_at_bound = 0;  // m(χ/(χ-1))
  double spectral_chi_lower = 0.0;        // λ_N/(λ_N - 1)
  std::optional<HoffmanBound> hoffman;
  std::vector<UpperBoundEntry> upper_bounds;
  std::optional<MultiplicityBounds> multiplicity_bounds;  // sharp graphs only
  std::vector<std::vector<std::vector<Vertex>>> colorings;  // classes per coloring
  std::vector<bool> equitable;  // per coloring, w.r.t. D^{-1}A
  bool all_equitable = false;
  bool partial = false;               // colorings not enumerated exhaustively
  std::vector<std::string> omissions;
  Spectrum spectrum{{}, kGroupTolerance};
};

// Everything above for one connected graph; tol is the grouping and
// sharpness tolerance.
BoundReport full_report(const Graph& g, double tol = kBoundTolerance);

}  // namespace chromspec
