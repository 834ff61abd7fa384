#include "chromspec/coloring.h"

#include <algorithm>
#include <bit>
#include <string>

#include "chromspec/error.h"

namespace chromspec {

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

void require_same_graph(const Graph& g, const Coloring& c) {
  if (c.graph_id() != g.id() || c.assignment().size() != g.order()) {
    fail(ErrorCode::InvalidArgument, "coloring belongs to a different graph");
  }
}

// Neighborhood masks for graphs with at most 64 vertices.
std::vector<std::uint64_t> small_masks(const Graph& g) {
  std::vector<std::uint64_t> m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m[v] = g.row(v)[0];
  return m;
}

std::size_t greedy_clique_bound(const std::vector<std::uint64_t>& nbr) {
  std::size_t best = nbr.empty() ? 0 : 1;
  for (std::size_t s = 0; s < nbr.size(); ++s) {
    std::uint64_t cand = nbr[s];
    std::size_t size = 1;
    while (cand) {
      std::size_t pick = 0;
      int pick_score = -1;
      for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(rest));
        const int score = std::popcount(nbr[u] & cand);
        if (score > pick_score) {
          pick_score = score;
          pick = u;
        }
      }
      ++size;
      cand &= nbr[pick];
    }
    best = std::max(best, size);
  }
  return best;
}

// DSATUR branch and bound minimising the number of colors.
class ChromaticSolver {
 public:
  explicit ChromaticSolver(const Graph& g)
      : g_(g), n_(g.order()), nbr_(small_masks(g)), color_(n_, -1),
        count_(n_ * 64, 0), sat_(n_, 0) {}

  std::vector<int> solve(const Coloring& initial) {
    best_ = initial.k();
    best_color_.assign(initial.assignment().begin(), initial.assignment().end());
    lower_ = greedy_clique_bound(nbr_);
    if (best_ > lower_) search(0, 0);
    return best_color_;
  }

 private:
  std::size_t select() const {
    std::size_t best = n_;
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      const int s = std::popcount(sat_[v]);
      const std::size_t d = g_.degree(static_cast<Vertex>(v));
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    for (std::uint64_t rest = nbr_[v]; rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (count_[w * 64 + c]++ == 0) sat_[w] |= bit(static_cast<std::size_t>(c));
    }
  }

  void unassign(std::size_t v, int c) {
    color_[v] = -1;
    for (std::uint64_t rest = nbr_[v]; rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (--count_[w * 64 + c] == 0) sat_[w] &= ~bit(static_cast<std::size_t>(c));
    }
  }

  void search(std::size_t colored, std::size_t used) {
    if (done_) return;
    if (colored == n_) {
      if (used < best_) {
        best_ = used;
        best_color_ = color_;
        if (best_ == lower_) done_ = true;
      }
      return;
    }
    const std::size_t v = select();
    for (std::size_t c = 0; c < used; ++c) {
      if (sat_[v] & bit(c)) continue;
      assign(v, static_cast<int>(c));
      search(colored + 1, used);
      unassign(v, static_cast<int>(c));
      if (done_) return;
    }
    if (used + 1 < best_) {
      assign(v, static_cast<int>(used));
      search(colored + 1, used + 1);
      unassign(v, static_cast<int>(used));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> nbr_;
  std::vector<int> color_;
  std::vector<std::uint8_t> count_;
  std::vector<std::uint64_t> sat_;
  std::vector<int> best_color_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  bool done_ = false;
};

Coloring coloring_from_ints(const Graph& g, const std::vector<int>& colors) {
  std::vector<std::uint32_t> a(colors.begin(), colors.end());
  return Coloring(g, std::move(a)).canonical();
}

// Enumerates proper colorings with exactly chi colors, each partition once
// (a new color may only be opened as the next unused index).
class ColoringEnumerator {
 public:
  ColoringEnumerator(const Graph& g, std::size_t chi)
      : g_(g), n_(g.order()), chi_(chi), nbr_(small_masks(g)), color_(n_, -1),
        count_(n_ * kEnumerationCap, 0), forbid_(n_, 0) {
    order_ = search_order();
  }

  std::vector<std::vector<int>> run() {
    visit(0, 0);
    return std::move(found_);
  }

 private:
  // Max-degree start, then most already-placed neighbors; constrains early.
  std::vector<std::size_t> search_order() const {
    std::vector<std::size_t> order;
    std::uint64_t placed = 0;
    for (std::size_t step = 0; step < n_; ++step) {
      std::size_t best = n_;
      int best_links = -1;
      std::size_t best_deg = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (placed & bit(v)) continue;
        const int links = std::popcount(nbr_[v] & placed);
        const std::size_t d = g_.degree(static_cast<Vertex>(v));
        if (links > best_links || (links == best_links && d > best_deg)) {
          best = v;
          best_links = links;
          best_deg = d;
        }
      }
      order.push_back(best);
      placed |= bit(best);
    }
    return order;
  }

  bool assign(std::size_t v, int c) {
    color_[v] = c;
    bool alive = true;
    for (std::uint64_t rest = nbr_[v]; rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (count_[w * kEnumerationCap + c]++ == 0) {
        forbid_[w] |= bit(static_cast<std::size_t>(c));
        if (color_[w] < 0 && static_cast<std::size_t>(std::popcount(forbid_[w])) == chi_) {
          alive = false;
        }
      }
    }
    return alive;
  }

  void unassign(std::size_t v, int c) {
    color_[v] = -1;
    for (std::uint64_t rest = nbr_[v]; rest; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if (--count_[w * kEnumerationCap + c] == 0) forbid_[w] &= ~bit(static_cast<std::size_t>(c));
    }
  }

  void visit(std::size_t pos, std::size_t used) {
    if (pos == n_) {
      if (used == chi_) {
        if (found_.size() >= kMaxEnumeratedColorings) {
          fail(ErrorCode::CapExceeded,
               "more than " + std::to_string(kMaxEnumeratedColorings) +
                   " proper colorings; enumeration refused");
        }
        found_.push_back(color_);
      }
      return;
    }
    if (chi_ - used > n_ - pos) return;
    const std::size_t v = order_[pos];
    for (std::size_t c = 0; c < used; ++c) {
      if (forbid_[v] & bit(c)) continue;
      if (assign(v, static_cast<int>(c))) visit(pos + 1, used);
      unassign(v, static_cast<int>(c));
    }
    if (used < chi_) {
      if (assign(v, static_cast<int>(used))) visit(pos + 1, used + 1);
      unassign(v, static_cast<int>(used));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t chi_;
  std::vector<std::uint64_t> nbr_;
  std::vector<int> color_;
  std::vector<std::uint8_t> count_;
  std::vector<std::uint64_t> forbid_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

Coloring::Coloring(const Graph& g, std::vector<std::uint32_t> assignment)
    : graph_id_(g.id()), assignment_(std::move(assignment)) {
  if (assignment_.size() != g.order()) {
    fail(ErrorCode::InvalidArgument, "coloring length does not match the vertex count");
  }
  k_ = assignment_.empty() ? 0 : *std::max_element(assignment_.begin(), assignment_.end()) + 1;
  std::vector<std::uint8_t> used(k_, 0);
  for (auto c : assignment_) used[c] = 1;
  for (std::size_t i = 0; i < k_; ++i) {
    if (!used[i]) {
      fail(ErrorCode::InvalidArgument, "color " + std::to_string(i) + " is unused; colors must be 0..k-1");
    }
  }
}

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(k_);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    out[assignment_[v]].push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSubset Coloring::class_subset(const Graph& g, std::size_t i) const {
  require_same_graph(g, *this);
  if (i >= k_) fail(ErrorCode::InvalidArgument, "color class index out of range");
  return VertexSubset(g, classes()[i]);
}

Coloring Coloring::canonical() const {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> relabel(k_, kUnset);
  std::uint32_t next = 0;
  Coloring out;
  out.graph_id_ = graph_id_;
  out.k_ = k_;
  out.assignment_.resize(assignment_.size());
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    auto& r = relabel[assignment_[v]];
    if (r == kUnset) r = next++;
    out.assignment_[v] = r;
  }
  return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
  require_same_graph(g, c);
  for (auto [u, v] : g.edges()) {
    if (c.color(u) == c.color(v)) return false;
  }
  return true;
}

Coloring dsatur_coloring(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n, -1);
  std::vector<std::vector<std::uint8_t>> seen(n);
  std::vector<std::size_t> sat(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick == n || sat[v] > sat[pick] ||
          (sat[v] == sat[pick] && g.degree(static_cast<Vertex>(v)) > g.degree(static_cast<Vertex>(pick)))) {
        pick = v;
      }
    }
    int c = 0;
    while (static_cast<std::size_t>(c) < seen[pick].size() && seen[pick][static_cast<std::size_t>(c)]) ++c;
    color[pick] = c;
    for (Vertex w : g.neighbors(static_cast<Vertex>(pick))) {
      auto& s = seen[w];
      if (s.size() <= static_cast<std::size_t>(c)) s.resize(static_cast<std::size_t>(c) + 1, 0);
      if (!s[static_cast<std::size_t>(c)]) {
        s[static_cast<std::size_t>(c)] = 1;
        ++sat[w];
      }
    }
  }
  return coloring_from_ints(g, color);
}

Coloring optimal_coloring(const Graph& g) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  if (g.order() > kChromaticNumberCap) {
    fail(ErrorCode::CapExceeded, "exact chromatic number is limited to " +
                                     std::to_string(kChromaticNumberCap) + " vertices");
  }
  const Coloring initial = dsatur_coloring(g);
  ChromaticSolver solver(g);
  return coloring_from_ints(g, solver.solve(initial));
}

std::size_t chromatic_number(const Graph& g) { return optimal_coloring(g).k(); }

std::vector<Coloring> enumerate_chi_colorings(const Graph& g, std::size_t chi) {
  if (g.order() == 0) fail(ErrorCode::InvalidArgument, "graph has no vertices");
  if (g.order() > kEnumerationCap) {
    fail(ErrorCode::CapExceeded, "coloring enumeration is limited to " +
                                     std::to_string(kEnumerationCap) + " vertices");
  }
  const std::size_t actual = chromatic_number(g);
  if (chi != actual) {
    fail(ErrorCode::InvalidArgument, "requested " + std::to_string(chi) +
                                         "-colorings but the chromatic number is " +
                                         std::to_string(actual));
  }
  ColoringEnumerator en(g, chi);
  std::vector<Coloring> out;
  for (const auto& colors : en.run()) out.push_back(coloring_from_ints(g, colors));
  std::sort(out.begin(), out.end(), [](const Coloring& a, const Coloring& b) {
    return std::lexicographical_compare(a.assignment().begin(), a.assignment().end(),
                                        b.assignment().begin(), b.assignment().end());
  });
  return out;
}

bool is_equitable_dinv_a(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) fail(ErrorCode::InvalidArgument, "equitability requires a proper coloring");
  const std::size_t k = c.k();
  std::vector<std::size_t> per_class(k);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(per_class.begin(), per_class.end(), 0);
    for (Vertex w : g.neighbors(v)) ++per_class[c.color(w)];
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c.color(v)) continue;  // zero by properness
      if ((k - 1) * per_class[i] != g.degree(v)) return false;
    }
  }
  return true;
}

bool is_equitable_a(const Graph& g, const Coloring& c) {
  require_same_graph(g, c);
  const std::size_t k = c.k();
  // counts[i * k + j] = e(v, V_j) of the first vertex seen in class i
  std::vector<std::size_t> reference(k * k, 0);
  std::vector<std::uint8_t> have(k, 0);
  std::vector<std::size_t> per_class(k);
  for (Vertex v = 0; v < g.order(); ++v) {
    std::fill(per_class.begin(), per_class.end(), 0);
    for (Vertex w : g.neighbors(v)) ++per_class[c.color(w)];
    const std::size_t i = c.color(v);
    if (!have[i]) {
      std::copy(per_class.begin(), per_class.end(), reference.begin() + static_cast<std::ptrdiff_t>(i * k));
      have[i] = 1;
    } else if (!std::equal(per_class.begin(), per_class.end(),
                           reference.begin() + static_cast<std::ptrdiff_t>(i * k))) {
      return false;
    }
  }
  return true;
}

VertexFunction class_indicator_pm(const Graph& g, const Coloring& c, std::size_t i, std::size_t j) {
  require_same_graph(g, c);
  if (i >= c.k() || j >= c.k() || i == j) {
    fail(ErrorCode::InvalidArgument, "class indicator needs two distinct valid classes");
  }
  std::vector<double> f(g.order(), 0.0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.color(v) == i) f[v] = 1.0;
    if (c.color(v) == j) f[v] = -1.0;
  }
  return VertexFunction(g, std::move(f));
}

VertexFunction pair_pm(const Graph& g, Vertex v, Vertex w) {
  if (v >= g.order() || w >= g.order() || v == w) {
    fail(ErrorCode::InvalidArgument, "pair function needs two distinct vertices of the graph");
  }
  std::vector<double> f(g.order(), 0.0);
  f[v] = 1.0;
  f[w] = -1.0;
  return VertexFunction(g, std::move(f));
}

VertexFunction subset_pm(const Graph& g, const VertexSubset& plus, const VertexSubset& minus) {
  if (plus.graph_id() != g.id() || minus.graph_id() != g.id()) {
    fail(ErrorCode::InvalidArgument, "vertex subset belongs to a different graph");
  }
  std::vector<double> f(g.order(), 0.0);
  for (Vertex v : plus.members()) f[v] = 1.0;
  for (Vertex v : minus.members()) {
    if (plus.contains(v)) fail(ErrorCode::InvalidArgument, "plus and minus sets overlap");
    f[v] = -1.0;
  }
  return VertexFunction(g, std::move(f));
}

std::optional<Rational> plus_minus_check(const Graph& g, const VertexSubset& plus,
                                         const VertexSubset& minus) {
  if (plus.graph_id() != g.id() || minus.graph_id() != g.id()) {
    fail(ErrorCode::InvalidArgument, "vertex subset belongs to a different graph");
  }
  if (plus.empty() || minus.empty()) fail(ErrorCode::InvalidArgument, "plus and minus sets must be non-empty");
  for (Vertex v : plus.members()) {
    if (minus.contains(v)) fail(ErrorCode::InvalidArgument, "plus and minus sets overlap");
  }

  std::optional<Rational> shift;  // λ - 1
  for (Vertex v = 0; v < g.order(); ++v) {
    std::int64_t to_plus = 0;
    std::int64_t to_minus = 0;
    for (Vertex w : g.neighbors(v)) {
      to_plus += plus.contains(w) ? 1 : 0;
      to_minus += minus.contains(w) ? 1 : 0;
    }
    const bool in_plus = plus.contains(v);
    const bool in_minus = minus.contains(v);
    if (!in_plus && !in_minus) {
      if (to_plus != to_minus) return std::nullopt;
      continue;
    }
    if (g.degree(v) == 0) {
      fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " in the support is isolated");
    }
    const std::int64_t opposite = in_plus ? to_minus : to_plus;
    const std::int64_t same = in_plus ? to_plus : to_minus;
    Rational s = ratio(opposite - same, static_cast<std::int64_t>(g.degree(v)));
    if (shift && *shift != s) return std::nullopt;
    shift = s;
  }
  return Rational(1) + *shift;
}

SupportDecomposition support_rq_decomposition(const Graph& g, const Coloring& c,
                                              const VertexFunction& f,
                                              std::span<const std::size_t> classes) {
  if (!is_equitable_dinv_a(g, c)) {
    fail(ErrorCode::InvalidArgument, "support decomposition needs a coloring equitable w.r.t. D^-1 A");
  }
  if (f.graph_id() != g.id()) fail(ErrorCode::InvalidArgument, "vertex function belongs to a different graph");
  const std::size_t k = c.k();
  if (k < 2) fail(ErrorCode::InvalidArgument, "support decomposition needs at least two classes");
  std::vector<std::uint8_t> chosen(k, 0);
  for (std::size_t i : classes) {
    if (i >= k) fail(ErrorCode::InvalidArgument, "class index out of range");
    if (chosen[i]) fail(ErrorCode::InvalidArgument, "class index repeated");
    chosen[i] = 1;
  }
  if (classes.empty()) fail(ErrorCode::InvalidArgument, "class set must be non-empty");
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (chosen[c.color(v)]) {
      members.push_back(v);
    } else if (f[v] != 0.0) {
      fail(ErrorCode::InvalidArgument,
           "function is non-zero at vertex " + std::to_string(v) + " outside the chosen classes");
    }
  }
  const double lhs = rayleigh_quotient(g, f);
  const double size = static_cast<double>(classes.size());
  const double km1 = static_cast<double>(k - 1);
  if (classes.size() == 1) return {lhs, (static_cast<double>(k) - size) / km1};

  const InducedSubgraph sub = induced_subgraph(g, VertexSubset(g, members));
  std::vector<double> restricted(sub.original.size());
  for (std::size_t i = 0; i < restricted.size(); ++i) restricted[i] = f[sub.original[i]];
  const double inner = rayleigh_quotient(sub.graph, VertexFunction(sub.graph, std::move(restricted)));
  return {lhs, ((size - 1.0) * inner + static_cast<double>(k) - size) / km1};
}

double restricted_eigenvalue_prediction(double lambda, std::size_t k, std::size_t class_count) {
  if (class_count < 2) fail(ErrorCode::InvalidArgument, "restricted eigenvalue needs at least two classes");
  if (k < class_count) fail(ErrorCode::InvalidArgument, "class count exceeds the number of colors");
  return 1.0 + static_cast<double>(k - 1) * (lambda - 1.0) / static_cast<double>(class_count - 1);
}

}  // namespace chromspec
