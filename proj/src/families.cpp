#include "chromspec/families.h"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

#include "chromspec/compose.h"
#include "chromspec/error.h"

namespace chromspec {

namespace {

constexpr std::size_t kMaxFamilyOrder = 5000;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

Rational q(std::size_t num, std::size_t den = 1) {
  return Rational(static_cast<std::int64_t>(num)) / Rational(static_cast<std::int64_t>(den));
}

// Complete multipartite graph with consecutive classes of the given sizes.
Graph complete_multipartite(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < sizes.size(); ++c) owner.insert(owner.end(), sizes[c], c);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < owner.size(); ++u) {
    for (std::size_t v = u + 1; v < owner.size(); ++v) {
      if (owner[u] != owner[v]) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return Graph::from_edge_list(owner.size(), edges);
}

}  // namespace

ExactSpectrum::ExactSpectrum(std::vector<std::pair<Rational, std::size_t>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [value, mult] : terms) {
    if (mult == 0) continue;
    if (!groups_.empty() && groups_.back().first == value) {
      groups_.back().second += mult;
    } else {
      groups_.emplace_back(value, mult);
    }
  }
}

std::size_t ExactSpectrum::total() const {
  std::size_t n = 0;
  for (const auto& g : groups_) n += g.second;
  return n;
}

std::string ExactSpectrum::to_string() const {
  std::ostringstream out;
  out << '{';
  for (auto it = groups_.rbegin(); it != groups_.rend(); ++it) {
    if (it != groups_.rbegin()) out << ", ";
    out << chromspec::to_string(it->first) << " x" << it->second;
  }
  out << '}';
  return out.str();
}

Graph complete(std::size_t n) {
  require(n >= 1, "K_n needs n >= 1");
  return complete_multipartite(std::vector<std::size_t>(n, 1));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "K_{a,b} needs a, b >= 1");
  return complete_multipartite({a, b});
}

Graph turan(std::size_t n, std::size_t k) {
  require(k >= 1 && n >= k, "T(N,k) needs 1 <= k <= N");
  require(n % k == 0, "T(N,k) is only provided with k dividing N (equal classes)");
  return complete_multipartite(std::vector<std::size_t>(k, n / k));
}

Graph petal(std::size_t m) {
  require(m >= 1, "petal(m) needs m >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) {
    const auto v = static_cast<Vertex>(i);
    const auto w = static_cast<Vertex>(m + i);
    edges.insert(edges.end(), {{0, v}, {0, w}, {v, w}});
  }
  return Graph::from_edge_list(2 * m + 1, edges);
}

Graph generalized_petal(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 2, "gpetal(m,n) needs m >= 1 and n >= 2");
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < m; ++c) {
    const std::size_t base = 1 + c * (n - 1);
    for (std::size_t a = 0; a < n - 1; ++a) {
      edges.emplace_back(0, static_cast<Vertex>(base + a));
      for (std::size_t b = a + 1; b < n - 1; ++b) {
        edges.emplace_back(static_cast<Vertex>(base + a), static_cast<Vertex>(base + b));
      }
    }
  }
  return Graph::from_edge_list(1 + m * (n - 1), edges);
}

Graph g_ktd(std::size_t k, std::size_t theta, std::size_t d) {
  require(k >= 1 && theta >= 1, "Gktd(k,t,d) needs k, t >= 1");
  require(d <= k, "Gktd(k,t,d) needs 0 <= d <= k");
  std::vector<Edge> edges;
  for (std::size_t i1 = 1; i1 <= theta; ++i1) {
    for (std::size_t j1 = 1; j1 <= k; ++j1) {
      for (std::size_t i2 = i1 + 1; i2 <= theta; ++i2) {
        for (std::size_t j2 = 1; j2 <= k; ++j2) {
          if (j1 == j2 && j1 <= d) continue;
          edges.emplace_back(g_ktd_vertex(k, i1, j1), g_ktd_vertex(k, i2, j2));
        }
      }
    }
  }
  return Graph::from_edge_list(k * theta, edges);
}

std::vector<std::uint32_t> g_ktd_class_colors(std::size_t k, std::size_t theta) {
  std::vector<std::uint32_t> colors(k * theta);
  for (std::size_t v = 0; v < colors.size(); ++v) colors[v] = static_cast<std::uint32_t>(v / k);
  return colors;
}

Graph complete_split(std::size_t t, std::size_t chi) {
  require(t >= 1 && chi >= 2, "split(t,chi) needs t >= 1 and chi >= 2");
  std::vector<std::size_t> sizes(chi, 1);
  sizes[0] = t;
  return complete_multipartite(sizes);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "C_n needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return Graph::from_edge_list(n, edges);
}

Graph path(std::size_t n) {
  require(n >= 1, "P_n needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  }
  return Graph::from_edge_list(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph::from_edge_list(n, {}); }

ExactSpectrum oracle_spectrum_complete(std::size_t n) {
  require(n >= 2, "spectrum of K_n needs n >= 2");
  return ExactSpectrum({{q(n, n - 1), n - 1}, {q(0), 1}});
}

ExactSpectrum oracle_spectrum_bipartite(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "spectrum of K_{a,b} needs a, b >= 1");
  return ExactSpectrum({{q(2), 1}, {q(1), a + b - 2}, {q(0), 1}});
}

ExactSpectrum oracle_spectrum_turan(std::size_t n, std::size_t k) {
  require(k >= 2 && n % k == 0, "spectrum of T(N,k) needs k >= 2 dividing N");
  return ExactSpectrum({{q(k, k - 1), k - 1}, {q(1), n - k}, {q(0), 1}});
}

ExactSpectrum oracle_spectrum_petal(std::size_t m) {
  require(m >= 1, "spectrum of petal(m) needs m >= 1");
  return ExactSpectrum({{q(3, 2), m + 1}, {q(1, 2), m - 1}, {q(0), 1}});
}

ExactSpectrum oracle_spectrum_g_ktd(std::size_t k, std::size_t theta, std::size_t d) {
  require(k >= 2 && theta >= 2, "closed-form spectrum of Gktd needs k, t >= 2");
  require(d <= k, "Gktd needs d <= k");
  if (d == 0) return oracle_spectrum_turan(k * theta, theta);

  const Rational one(1);
  const Rational k_over = q(k, k - 1);
  const Rational t_over = q(theta, theta - 1);
  const Rational clique_drop = one - q(1, (k - 1) * (theta - 1));
  if (d < k) {
    return ExactSpectrum({
        {k_over, d - 1},
        {q(k * k - d, k * (k - 1)), 1},
        {t_over, theta - 1},
        {one, (k - d - 1) * theta},
        {one - q(k - d, k * (k - 1) * (theta - 1)), theta - 1},
        {clique_drop, (d - 1) * (theta - 1)},
        {q(0), 1},
    });
  }
  if (k < theta) {
    fail(ErrorCode::InvalidArgument,
         "no closed form for Gktd with d = k < t (only d < k, or d = k >= t with kt > 4)");
  }
  if (k * theta <= 4) {
    fail(ErrorCode::InvalidArgument, "the d = k >= t closed form requires k*t > 4");
  }
  return ExactSpectrum({
      {t_over, theta - 1},
      {k_over, d - 1},
      {clique_drop, (d - 1) * (theta - 1)},
      {q(0), 1},
  });
}

LambdaMaxCase g_ktd_lambda_max_case(std::size_t k, std::size_t theta, std::size_t d) {
  require(k > 1 && theta > 1, "case table needs k, t > 1");
  require(d > 0 && d <= k, "case table needs 0 < d <= k");
  require(!(k == 2 && theta == 2 && d == 2), "case table excludes k = t = d = 2");
  require(d < k || k >= theta, "case table needs k >= t when d = k");
  const Rational t_over = q(theta, theta - 1);
  if (theta < k) return {t_over, theta - 1, 1};
  if (theta == k && d > 1) return {t_over, theta + d - 2, 2};
  if (theta == k) return {t_over, theta - 1, 3};
  if (theta == k + 1 && d == 1) return {t_over, theta, 4};
  if (d == 1) return {q(k + 1, k), 1, 5};
  return {q(k, k - 1), d - 1, 6};  // θ > k > d > 1
}

Rational oracle_lambda_max_complete_split(std::size_t t, std::size_t chi) {
  require(t >= 1 && chi >= 2, "split(t,chi) needs t >= 1 and chi >= 2");
  const std::size_t n = t + chi - 1;
  return Rational(1) + q(t, n - 1);
}

Graph parse_family(std::string_view spec_view) {
  std::string spec;
  for (char ch : spec_view) {
    if (!std::isspace(static_cast<unsigned char>(ch))) spec.push_back(ch);
  }
  auto num = [](const std::ssub_match& m) {
    const std::string s = m.str();
    if (s.size() > 6) fail(ErrorCode::Parse, "family parameter too large: " + s);
    return static_cast<std::size_t>(std::stoul(s));
  };
  static const std::regex copies(R"(^(\d+)x(.+)$)");
  static const std::regex kn(R"(^K_\{?(\d+)\}?$)");
  static const std::regex kab(R"(^K_\{(\d+),(\d+)\}$)");
  static const std::regex tn(R"(^T\((\d+),(\d+)\)$)");
  static const std::regex pet(R"(^petal\((\d+)\)$)");
  static const std::regex gpet(R"(^gpetal\((\d+),(\d+)\)$)");
  static const std::regex gktd(R"(^Gktd\((\d+),(\d+),(\d+)\)$)");
  static const std::regex split(R"(^split\((\d+),(\d+)\)$)");
  static const std::regex cyc(R"(^C_\{?(\d+)\}?$)");
  static const std::regex pth(R"(^P_\{?(\d+)\}?$)");
  static const std::regex emp(R"(^E_\{?(\d+)\}?$)");

  auto check_order = [](std::size_t n) {
    if (n > kMaxFamilyOrder) {
      fail(ErrorCode::CapExceeded, "family graphs are limited to " +
                                       std::to_string(kMaxFamilyOrder) + " vertices");
    }
  };

  std::smatch m;
  try {
    if (std::regex_match(spec, m, copies)) {
      const std::size_t count = num(m[1]);
      require(count >= 1, "copy count must be >= 1");
      const Graph one = parse_family(m[2].str());
      check_order(count * one.order());
      return disjoint_union(std::vector<Graph>(count, one));
    }
    if (std::regex_match(spec, m, kab)) {
      check_order(num(m[1]) + num(m[2]));
      return complete_bipartite(num(m[1]), num(m[2]));
    }
    if (std::regex_match(spec, m, kn)) {
      check_order(num(m[1]));
      return complete(num(m[1]));
    }
    if (std::regex_match(spec, m, tn)) {
      check_order(num(m[1]));
      return turan(num(m[1]), num(m[2]));
    }
    if (std::regex_match(spec, m, pet)) {
      check_order(2 * num(m[1]) + 1);
      return petal(num(m[1]));
    }
    if (std::regex_match(spec, m, gpet)) {
      check_order(1 + num(m[1]) * num(m[2]));
      return generalized_petal(num(m[1]), num(m[2]));
    }
    if (std::regex_match(spec, m, gktd)) {
      check_order(num(m[1]) * num(m[2]));
      return g_ktd(num(m[1]), num(m[2]), num(m[3]));
    }
    if (std::regex_match(spec, m, split)) {
      check_order(num(m[1]) + num(m[2]));
      return complete_split(num(m[1]), num(m[2]));
    }
    if (std::regex_match(spec, m, cyc)) {
      check_order(num(m[1]));
      return cycle(num(m[1]));
    }
    if (std::regex_match(spec, m, pth)) {
      check_order(num(m[1]));
      return path(num(m[1]));
    }
    if (std::regex_match(spec, m, emp)) {
      check_order(num(m[1]));
      return empty_graph(num(m[1]));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) {
      fail(ErrorCode::Parse, "invalid family spec '" + spec + "': " + e.what());
    }
    throw;
  }
  fail(ErrorCode::Parse,
       "unrecognised family spec '" + spec +
           "' (expected K_n, K_{a,b}, T(N,k), petal(m), gpetal(m,n), Gktd(k,t,d), split(t,chi), "
           "C_n, P_n, E_n or mx<spec>)");
}

}  // namespace chromspec
