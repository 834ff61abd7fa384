#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromspec/graph.h"
#include "chromspec/rational.h"

namespace chromspec {

// Exact eigenvalue multiset. Groups are sorted by value and pairwise distinct;
// equal values coming from different closed-form terms are merged.
class ExactSpectrum {
 public:
  ExactSpectrum() = default;
  // Drops zero multiplicities and merges equal values.
  explicit ExactSpectrum(std::vector<std::pair<Rational, std::size_t>> terms);

  const std::vector<std::pair<Rational, std::size_t>>& groups() const { return groups_; }
  std::size_t total() const;
  std::string to_string() const;  // "{3/2 x3, 5/6 x2, 0 x1}" (descending)

 private:
  std::vector<std::pair<Rational, std::size_t>> groups_;
};

// Vertex orders are part of the contract:
//  complete_bipartite(a, b): side A = 0..a-1, side B = a..a+b-1
//  turan(N, k): class i = {i*N/k, ..., (i+1)*N/k - 1}
//  petal(m): x = 0, v_i = i, w_i = m + i (i = 1..m)
//  generalized_petal(m, n): hub 0, copy c occupies 1 + c(n-1) .. (c+1)(n-1)
//  g_ktd(k, θ, d): v_j^i at (i-1)k + (j-1), classes V_i = {v_1^i..v_k^i}
//  complete_split(t, χ): independent class 0..t-1, clique t..t+χ-2
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph turan(std::size_t n, std::size_t k);
Graph petal(std::size_t m);
Graph generalized_petal(std::size_t m, std::size_t n);
Graph g_ktd(std::size_t k, std::size_t theta, std::size_t d);
Graph complete_split(std::size_t t, std::size_t chi);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph empty_graph(std::size_t n);
// Vertex index of v_j^i in g_ktd (1-based i, j as in the definition).
inline Vertex g_ktd_vertex(std::size_t k, std::size_t i, std::size_t j) {
  return static_cast<Vertex>((i - 1) * k + (j - 1));
}
// Class assignment V_i -> color i-1 of g_ktd, and of complete multipartite
// generators in general.
std::vector<std::uint32_t> g_ktd_class_colors(std::size_t k, std::size_t theta);

ExactSpectrum oracle_spectrum_complete(std::size_t n);
ExactSpectrum oracle_spectrum_bipartite(std::size_t a, std::size_t b);
ExactSpectrum oracle_spectrum_turan(std::size_t n, std::size_t k);
ExactSpectrum oracle_spectrum_petal(std::size_t m);
// 0 < d < k; d = k >= θ with kθ > 4; d = 0 reduces to the Turán graph.
ExactSpectrum oracle_spectrum_g_ktd(std::size_t k, std::size_t theta, std::size_t d);

struct LambdaMaxCase {
  Rational value;
  std::size_t multiplicity;
  int case_id;  // 1..6
};

// Largest eigenvalue of g_ktd(k, θ, d) by case: k, θ > 1, 0 < d <= k, not
// all three equal to 2, and k >= θ whenever d == k.
LambdaMaxCase g_ktd_lambda_max_case(std::size_t k, std::size_t theta, std::size_t d);

// 1 + t/(N-1) with N = t + χ - 1.
Rational oracle_lambda_max_complete_split(std::size_t t, std::size_t chi);

// Family spec strings: K_n, K_{a,b}, T(N,k), petal(m), gpetal(m,n),
// Gktd(k,t,d), split(t,chi), plus C_n, P_n, E_n; a prefix "mx" takes m
// disjoint copies (e.g. "3xK_2").
Graph parse_family(std::string_view spec);

}  // namespace chromspec
