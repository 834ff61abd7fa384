#include "chromspec/bounds.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "chromspec/error.h"

namespace chromspec {

namespace {

Rational q(std::size_t num, std::size_t den = 1) {
  return Rational(static_cast<std::int64_t>(num)) / Rational(static_cast<std::int64_t>(den));
}

void require_proper(const Graph& g, const Coloring& c) {
  if (c.graph_id() != g.id()) fail(ErrorCode::InvalidArgument, "coloring belongs to another graph");
  if (!is_proper(g, c)) fail(ErrorCode::InvalidArgument, "coloring is not proper");
}

std::string set_name(const char* kind, std::size_t i) {
  return std::string(kind) + " set " + std::to_string(i + 1);
}

}  // namespace

double chromatic_lower_bound_from_spectrum(double lambda_n) {
  if (!(lambda_n > 1.0)) {
    fail(ErrorCode::InvalidArgument, "λ_N/(λ_N-1) needs λ_N > 1");
  }
  return lambda_n / (lambda_n - 1.0);
}

HoffmanBound hoffman_bound(const Graph& g) {
  if (g.size() == 0) {
    fail(ErrorCode::InvalidArgument, "Hoffman bound is undefined on an edgeless graph");
  }
  const auto [smallest, largest] = adjacency_extremes(g);
  return {1.0 - largest / smallest, regular_degree(g).has_value()};
}

MultiplicityBounds multiplicity_bounds_from_structure(const Graph& g, const Coloring& c,
                                                      std::span<const VertexSubset> duplicates,
                                                      std::span<const VertexSubset> twins) {
  require_proper(g, c);
  std::vector<std::uint8_t> used(g.order(), 0);
  auto claim = [&](const VertexSubset& s, const std::string& name, PairKind kind) {
    if (s.graph_id() != g.id()) fail(ErrorCode::InvalidArgument, name + " belongs to another graph");
    const auto m = s.members();
    for (std::size_t a = 0; a < m.size(); ++a) {
      if (used[m[a]]) {
        fail(ErrorCode::Verification, name + " overlaps another set at vertex " +
                                          std::to_string(m[a]));
      }
      used[m[a]] = 1;
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        if (classify_pair(g, m[a], m[b]) != kind) {
          fail(ErrorCode::Verification,
               name + ": vertices " + std::to_string(m[a]) + " and " + std::to_string(m[b]) +
                   (kind == PairKind::Twin ? " are not twins" : " are not duplicates"));
        }
      }
    }
  };
  for (std::size_t i = 0; i < duplicates.size(); ++i) {
    claim(duplicates[i], set_name("duplicate", i), PairKind::Duplicate);
  }
  for (std::size_t i = 0; i < twins.size(); ++i) claim(twins[i], set_name("twin", i), PairKind::Twin);

  std::size_t dup_total = 0;
  for (const auto& d : duplicates) dup_total += d.size();
  std::size_t twin_excess = 0;
  std::vector<std::uint8_t> class_hit(c.k(), 0);
  for (const auto& t : twins) {
    if (t.empty()) continue;
    twin_excess += t.size() - 1;
    for (Vertex v : t.members()) class_hit[c.color(v)] = 1;
  }
  const std::size_t y = static_cast<std::size_t>(std::count(class_hit.begin(), class_hit.end(), 1));
  const std::size_t k = c.k();

  MultiplicityBounds out{};
  out.y = y;
  // With no twins there are still the k-1 class eigenfunctions, hence max(y, 1).
  out.lower = twin_excess + k - std::max<std::size_t>(y, 1);
  const std::size_t n = g.order();
  out.upper = n - dup_total + duplicates.size() - 1;
  return out;
}

OptionalBound upper_bound_equal_classes(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  const std::size_t n = g.order();
  const auto classes = c.classes();
  for (const auto& cls : classes) {
    if (cls.size() * classes.size() != n) {
      return {std::nullopt, "coloring classes are not all of size N/k"};
    }
  }
  const std::size_t delta = min_degree(g);
  if (delta == 0) return {std::nullopt, "graph has an isolated vertex"};
  return {q(n, delta), ""};
}

Rational upper_bound_general(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  const std::size_t n = g.order();
  const auto classes = c.classes();
  if (classes.size() < 2) fail(ErrorCode::InvalidArgument, "general bound needs at least two classes");
  std::size_t largest = 0;
  std::optional<Rational> x;
  for (const auto& cls : classes) {
    largest = std::max(largest, cls.size());
    for (Vertex v : cls) {
      const Rational r = q(g.degree(v), n - cls.size());
      if (!x || r < *x) x = r;
    }
  }
  if (*x == 0) fail(ErrorCode::InvalidArgument, "general bound is undefined with an isolated vertex");
  return q(n, n - largest) / *x;
}

OptionalBound upper_bound_regular_equitable(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  const auto d = regular_degree(g);
  if (!d) return {std::nullopt, "graph is not regular"};
  if (*d == 0) return {std::nullopt, "graph has no edges"};
  if (c.k() < 2) return {std::nullopt, "coloring has a single class"};
  if (!is_equitable_dinv_a(g, c)) return {std::nullopt, "coloring is not equitable w.r.t. D^-1 A"};
  const std::size_t n = g.order();
  const std::size_t k = c.k();
  const Rational a = q(n * (k - 1), *d * k);
  const Rational b = q(k, k - 1);
  return {a > b ? a : b, ""};
}

BoundReport full_report(const Graph& g, double tol) {
  if (g.order() < 2) fail(ErrorCode::InvalidArgument, "report needs at least two vertices");
  if (!is_connected(g)) fail(ErrorCode::NotConnected, "connected graph required");

  BoundReport r;
  r.n = g.order();
  r.edges = g.size();
  r.spectrum = spectrum(g, tol);
  std::tie(r.lambda_n, r.lambda_multiplicity) = largest_eigenvalue(r.spectrum);

  const Coloring best = optimal_coloring(g);
  r.chi = best.k();
  r.chi_bound = q(r.chi, r.chi - 1);
  const double bound = to_double(r.chi_bound);
  r.gap = r.lambda_n - bound;
  r.sharp = std::abs(r.gap) <= tol;
  r.multiplicity_at_bound = multiplicity_of(r.spectrum, bound);
  r.spectral_chi_lower = chromatic_lower_bound_from_spectrum(r.lambda_n);
  r.hoffman = hoffman_bound(g);

  std::vector<Coloring> colorings;
  if (g.order() > kEnumerationCap) {
    r.partial = true;
    r.omissions.push_back("coloring enumeration skipped above " +
                          std::to_string(kEnumerationCap) + " vertices; one optimal coloring used");
    colorings.push_back(best);
  } else {
    try {
      colorings = enumerate_chi_colorings(g, r.chi);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded) throw;
      r.partial = true;
      r.omissions.push_back(std::string("coloring enumeration stopped: ") + e.what());
      colorings = {best};
    }
  }
  r.all_equitable = true;
  for (const auto& c : colorings) {
    r.colorings.push_back(c.classes());
    const bool eq = is_equitable_dinv_a(g, c);
    r.equitable.push_back(eq);
    r.all_equitable = r.all_equitable && eq;
  }

  auto entry = [&](std::string name, std::optional<Rational> value, std::string reason) {
    UpperBoundEntry e{std::move(name), std::move(value), std::move(reason), true};
    if (e.value) e.satisfied = to_double(*e.value) >= r.lambda_n - tol;
    r.upper_bounds.push_back(std::move(e));
  };

  std::optional<Rational> equal_classes;
  std::optional<Rational> general;
  std::optional<Rational> regular;
  std::string equal_reason;
  std::string regular_reason;
  for (const auto& c : colorings) {
    const OptionalBound e = upper_bound_equal_classes(g, c);
    if (e.value && (!equal_classes || *e.value < *equal_classes)) equal_classes = e.value;
    if (!e.value) equal_reason = e.reason;
    const Rational gen = upper_bound_general(g, c);
    if (!general || gen < *general) general = gen;
    const OptionalBound reg = upper_bound_regular_equitable(g, c);
    if (reg.value && (!regular || *reg.value < *regular)) regular = reg.value;
    if (!reg.value) regular_reason = reg.reason;
  }
  entry("equal_classes", equal_classes, equal_classes ? "" : equal_reason);
  entry("general", general, "");
  entry("regular_equitable", regular, regular ? "" : regular_reason);

  if (r.sharp) {
    std::vector<VertexSubset> dups;
    std::vector<VertexSubset> twins;
    for (const auto& cls : duplicate_classes(g)) dups.emplace_back(g, cls);
    for (const auto& cls : twin_classes(g)) twins.emplace_back(g, cls);
    r.multiplicity_bounds = multiplicity_bounds_from_structure(g, colorings.front(), dups, twins);
  }
  return r;
}

}  // namespace chromspec
