#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "chromspec/graph.h"

namespace chromspec {

// Absolute tolerance used to group eigenvalues into multiplicity clusters.
inline constexpr double kGroupTolerance = 1e-8;
// Relative tolerance (w.r.t. the max-norm of the function) for eigenpairs.
inline constexpr double kVerifyTolerance = 1e-9;

// Row-major dense n x n matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t size = 0) : n(size), data(size * size, 0.0) {}
  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * n + j]; }
};

// A real-valued function on the vertices of one graph.
class VertexFunction {
 public:
  VertexFunction(const Graph& g, std::vector<double> values);

  static VertexFunction zero(const Graph& g);
  static VertexFunction constant(const Graph& g, double c);

  std::uint64_t graph_id() const { return graph_id_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](Vertex v) const { return values_[v]; }

  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  VertexFunction scaled(double factor) const;
  // this + factor * other; both must live on the same graph.
  VertexFunction plus(const VertexFunction& other, double factor = 1.0) const;

 private:
  VertexFunction(std::uint64_t id, std::vector<double> values)
      : graph_id_(id), values_(std::move(values)) {}

  std::uint64_t graph_id_;
  std::vector<double> values_;
};

struct EigenGroup {
  double value;  // mean of the clustered eigenvalues
  std::size_t multiplicity;
};

// Sorted normalized-Laplacian eigenvalues with tolerance-grouped
// multiplicities.
class Spectrum {
 public:
  // Sorts the input and splits wherever consecutive values differ by > tol.
  Spectrum(std::vector<double> eigenvalues, double tol);

  std::size_t order() const { return eigenvalues_.size(); }
  double tolerance() const { return tol_; }
  std::span<const double> eigenvalues() const { return eigenvalues_; }
  std::span<const EigenGroup> groups() const { return groups_; }

 private:
  std::vector<double> eigenvalues_;
  double tol_;
  std::vector<EigenGroup> groups_;
};

struct EigenPair {
  double eigenvalue;
  VertexFunction function;
  double residual;  // max_v |(1-λ)f(v) - mean_{w~v} f(w)| / ||f||_inf
  bool valid;
};

// Eigenvalues (ascending) of L with eigenfunctions that are orthonormal for
// the degree-weighted inner product.
struct Eigensystem {
  std::vector<double> eigenvalues;
  std::vector<VertexFunction> functions;
};

DenseMatrix adjacency_matrix(const Graph& g);
// L = I - D^{-1} A
DenseMatrix normalized_laplacian(const Graph& g);
// I - D^{-1/2} A D^{-1/2}, bitwise symmetric.
DenseMatrix symmetrized_laplacian(const Graph& g);

// Ascending eigenvalues of a symmetric matrix. Throws NoConvergence when the
// solver fails, reporting the achieved residual.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& m);

Spectrum spectrum(const Graph& g, double tol = kGroupTolerance);
Eigensystem eigensystem(const Graph& g);
// Eigenfunctions from `eigensystem` whose eigenvalue lies within tol of λ.
std::vector<VertexFunction> eigenspace_basis(const Graph& g, double lambda,
                                             double tol = kGroupTolerance);

double degree_inner_product(const Graph& g, const VertexFunction& f, const VertexFunction& h);
double rayleigh_quotient(const Graph& g, const VertexFunction& f);
EigenPair verify_eigenpair(const Graph& g, double lambda, const VertexFunction& f,
                           double tol = kVerifyTolerance);

std::size_t multiplicity_of(const Spectrum& s, double lambda);
std::pair<double, std::size_t> largest_eigenvalue(const Spectrum& s);

// (smallest, largest) adjacency eigenvalue.
std::pair<double, double> adjacency_extremes(const Graph& g);

}  // namespace chromspec
