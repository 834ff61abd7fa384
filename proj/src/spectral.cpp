#include "chromspec/spectral.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "chromspec/error.h"

namespace chromspec {

namespace {

void require_no_isolated(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      fail(ErrorCode::InvalidArgument,
           "vertex " + std::to_string(v) + " is isolated; the normalized Laplacian needs deg >= 1");
    }
  }
}

void require_same_graph(const Graph& g, const VertexFunction& f) {
  if (f.graph_id() != g.id() || f.size() != g.order()) {
    fail(ErrorCode::InvalidArgument, "vertex function belongs to a different graph");
  }
}

Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXd out(m.n, m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) out(i, j) = m(i, j);
  }
  return out;
}

[[noreturn]] void report_no_convergence(const Eigen::MatrixXd& a,
                                        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es) {
  // Best effort: the residual of whatever the solver produced.
  double achieved = std::nan("");
  if (es.eigenvectors().size() == a.size()) {
    achieved = (a * es.eigenvectors() -
                es.eigenvectors() * es.eigenvalues().asDiagonal()).norm();
  }
  fail(ErrorCode::NoConvergence,
       "symmetric eigensolver did not converge (achieved residual norm " +
           std::to_string(achieved) + ")");
}

}  // namespace

VertexFunction::VertexFunction(const Graph& g, std::vector<double> values)
    : graph_id_(g.id()), values_(std::move(values)) {
  if (values_.size() != g.order()) {
    fail(ErrorCode::InvalidArgument,
         "vertex function has " + std::to_string(values_.size()) + " values for a graph on " +
             std::to_string(g.order()) + " vertices");
  }
  for (double x : values_) {
    if (!std::isfinite(x)) fail(ErrorCode::InvalidArgument, "vertex function value is not finite");
  }
}

VertexFunction VertexFunction::zero(const Graph& g) {
  return VertexFunction(g, std::vector<double>(g.order(), 0.0));
}

VertexFunction VertexFunction::constant(const Graph& g, double c) {
  return VertexFunction(g, std::vector<double>(g.order(), c));
}

double VertexFunction::max_abs() const {
  double m = 0.0;
  for (double x : values_) m = std::max(m, std::abs(x));
  return m;
}

VertexFunction VertexFunction::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& x : out) x *= factor;
  return VertexFunction(graph_id_, std::move(out));
}

VertexFunction VertexFunction::plus(const VertexFunction& other, double factor) const {
  if (other.graph_id_ != graph_id_ || other.size() != size()) {
    fail(ErrorCode::InvalidArgument, "cannot combine functions on different graphs");
  }
  std::vector<double> out(values_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += factor * other.values_[i];
  return VertexFunction(graph_id_, std::move(out));
}

Spectrum::Spectrum(std::vector<double> eigenvalues, double tol)
    : eigenvalues_(std::move(eigenvalues)), tol_(tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "grouping tolerance must be positive");
  std::sort(eigenvalues_.begin(), eigenvalues_.end());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= eigenvalues_.size(); ++i) {
    if (i == eigenvalues_.size() || eigenvalues_[i] - eigenvalues_[i - 1] > tol) {
      const double sum = std::accumulate(eigenvalues_.begin() + static_cast<std::ptrdiff_t>(start),
                                         eigenvalues_.begin() + static_cast<std::ptrdiff_t>(i), 0.0);
      groups_.push_back({sum / static_cast<double>(i - start), i - start});
      start = i;
    }
  }
}

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

DenseMatrix normalized_laplacian(const Graph& g) {
  require_no_isolated(g);
  DenseMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    l(v, v) = 1.0;
    const double w = -1.0 / static_cast<double>(g.degree(v));
    for (Vertex u : g.neighbors(v)) l(v, u) = w;
  }
  return l;
}

DenseMatrix symmetrized_laplacian(const Graph& g) {
  require_no_isolated(g);
  DenseMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) l(v, v) = 1.0;
  for (auto [u, v] : g.edges()) {
    const double w = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) *
                                      static_cast<double>(g.degree(v)));
    l(u, v) = w;
    l(v, u) = w;
  }
  return l;
}

std::vector<double> symmetric_eigenvalues(const DenseMatrix& m) {
  const Eigen::MatrixXd a = to_eigen(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) report_no_convergence(a, es);
  const auto& ev = es.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

Spectrum spectrum(const Graph& g, double tol) {
  return Spectrum(symmetric_eigenvalues(symmetrized_laplacian(g)), tol);
}

Eigensystem eigensystem(const Graph& g) {
  const Eigen::MatrixXd a = to_eigen(symmetrized_laplacian(g));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) report_no_convergence(a, es);
  Eigensystem out;
  const std::size_t n = g.order();
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  out.functions.reserve(n);
  // If 𝓛u = λu then L(D^{-1/2}u) = λ D^{-1/2}u, and D^{-1/2} maps the
  // Euclidean inner product onto the degree-weighted one.
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> f(n);
    for (std::size_t v = 0; v < n; ++v) {
      f[v] = es.eigenvectors()(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k)) /
             std::sqrt(static_cast<double>(g.degree(static_cast<Vertex>(v))));
    }
    out.functions.emplace_back(g, std::move(f));
  }
  return out;
}

std::vector<VertexFunction> eigenspace_basis(const Graph& g, double lambda, double tol) {
  Eigensystem es = eigensystem(g);
  std::vector<VertexFunction> out;
  for (std::size_t k = 0; k < es.eigenvalues.size(); ++k) {
    if (std::abs(es.eigenvalues[k] - lambda) <= tol) out.push_back(std::move(es.functions[k]));
  }
  return out;
}

double degree_inner_product(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
  require_same_graph(g, f);
  require_same_graph(g, h);
  double sum = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    sum += static_cast<double>(g.degree(v)) * f[v] * h[v];
  }
  return sum;
}

double rayleigh_quotient(const Graph& g, const VertexFunction& f) {
  require_same_graph(g, f);
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "Rayleigh quotient of the zero function");
  double num = 0.0;
  for (auto [u, v] : g.edges()) {
    const double d = f[u] - f[v];
    num += d * d;
  }
  const double den = degree_inner_product(g, f, f);
  if (den == 0.0) {
    fail(ErrorCode::InvalidArgument, "function is supported only on isolated vertices");
  }
  return num / den;
}

EigenPair verify_eigenpair(const Graph& g, double lambda, const VertexFunction& f, double tol) {
  require_same_graph(g, f);
  require_no_isolated(g);
  const double scale = f.max_abs();
  if (scale == 0.0) fail(ErrorCode::InvalidArgument, "the zero function is never an eigenfunction");
  double worst = 0.0;
  for (Vertex v = 0; v < g.order(); ++v) {
    double sum = 0.0;
    for (Vertex w : g.neighbors(v)) sum += f[w];
    const double defect = (1.0 - lambda) * f[v] - sum / static_cast<double>(g.degree(v));
    worst = std::max(worst, std::abs(defect));
  }
  const double residual = worst / scale;
  return EigenPair{lambda, f, residual, residual <= tol};
}

std::size_t multiplicity_of(const Spectrum& s, double lambda) {
  for (const auto& grp : s.groups()) {
    if (std::abs(grp.value - lambda) <= s.tolerance()) return grp.multiplicity;
  }
  return 0;
}

std::pair<double, std::size_t> largest_eigenvalue(const Spectrum& s) {
  if (s.groups().empty()) fail(ErrorCode::InvalidArgument, "empty spectrum");
  const auto& top = s.groups().back();
  return {top.value, top.multiplicity};
}

std::pair<double, double> adjacency_extremes(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  const auto ev = symmetric_eigenvalues(adjacency_matrix(g));
  return {ev.front(), ev.back()};
}

}  // namespace chromspec
