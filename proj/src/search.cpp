#include "chromspec/search.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <exception>
#include <cmath>
#include <optional>
#include <thread>
#include <unordered_set>

#include "chromspec/coloring.h"
#include "chromspec/error.h"

namespace chromspec {

namespace {

constexpr int kMax = static_cast<int>(kCanonicalMaxOrder);

struct Small {
  int n = 0;
  std::array<std::uint16_t, kMax> adj{};
};

using Colors = std::array<int, kMax>;
using Key = std::array<std::uint8_t, kMax + 1>;

Small to_small(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    fail(ErrorCode::CapExceeded, "canonical form is limited to " +
                                     std::to_string(kCanonicalMaxOrder) + " vertices");
  }
  Small s;
  s.n = static_cast<int>(g.order());
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= static_cast<std::uint16_t>(1u << v);
    s.adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return s;
}

Graph to_graph(const Small& s) {
  std::vector<Edge> edges;
  for (int u = 0; u < s.n; ++u) {
    for (int v = u + 1; v < s.n; ++v) {
      if (s.adj[u] >> v & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(s.n), edges);
}

// Rank vertices by key; returns the number of distinct keys.
int rank_by(int n, const std::array<Key, kMax>& keys, Colors& col) {
  std::array<int, kMax> idx{};
  for (int v = 0; v < n; ++v) idx[v] = v;
  std::sort(idx.begin(), idx.begin() + n, [&](int a, int b) { return keys[a] < keys[b]; });
  int r = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && keys[idx[i]] != keys[idx[i - 1]]) ++r;
    col[idx[i]] = r;
  }
  return n == 0 ? 0 : r + 1;
}

// Equitable refinement; colours stay in an isomorphism-invariant order.
int refine(const Small& g, Colors& col) {
  std::array<Key, kMax> keys{};
  for (int v = 0; v < g.n; ++v) {
    keys[v] = Key{};
    keys[v][0] = static_cast<std::uint8_t>(col[v]);
  }
  int cells = rank_by(g.n, keys, col);
  while (true) {
    for (int v = 0; v < g.n; ++v) {
      keys[v] = Key{};
      keys[v][0] = static_cast<std::uint8_t>(col[v]);
      for (int w = 0; w < g.n; ++w) {
        if (g.adj[v] >> w & 1u) ++keys[v][1 + col[w]];
      }
    }
    const int next = rank_by(g.n, keys, col);
    if (next == cells) return cells;
    cells = next;
  }
}

std::uint64_t code_of(const Small& g, const std::array<int, kMax>& order) {
  std::uint64_t bits = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      bits = (bits << 1) | ((g.adj[order[i]] >> order[j]) & 1u);
    }
  }
  return (static_cast<std::uint64_t>(g.n) << 48) | bits;
}

void search_leaves(const Small& g, Colors col, std::uint64_t& best,
                   std::array<int, kMax>& best_order, bool& found) {
  const int cells = refine(g, col);
  if (cells == g.n) {
    std::array<int, kMax> order{};
    for (int v = 0; v < g.n; ++v) order[col[v]] = v;
    const std::uint64_t code = code_of(g, order);
    if (!found || code > best) {
      best = code;
      best_order = order;
      found = true;
    }
    return;
  }
  std::array<int, kMax> size{};
  for (int v = 0; v < g.n; ++v) ++size[col[v]];
  int target = 0;
  while (size[target] < 2) ++target;
  for (int v = 0; v < g.n; ++v) {
    if (col[v] != target) continue;
    std::array<Key, kMax> keys{};
    for (int u = 0; u < g.n; ++u) {
      keys[u][0] = static_cast<std::uint8_t>(2 * col[u] + (col[u] == target && u != v ? 1 : 0));
    }
    Colors next = col;
    rank_by(g.n, keys, next);
    search_leaves(g, next, best, best_order, found);
  }
}

std::pair<std::uint64_t, std::array<int, kMax>> canon(const Small& g) {
  Colors col{};
  std::uint64_t best = 0;
  std::array<int, kMax> order{};
  bool found = false;
  if (g.n == 0) return {0, order};
  search_leaves(g, col, best, order, found);
  return {best, order};
}

Small decode(std::uint64_t code) {
  Small s;
  s.n = static_cast<int>(code >> 48);
  int pos = s.n * (s.n - 1) / 2;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j) {
      --pos;
      if (code >> pos & 1u) {
        s.adj[i] |= static_cast<std::uint16_t>(1u << j);
        s.adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
    }
  }
  return s;
}

std::size_t worker_count(std::size_t items) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(hw, items / 256));
}

// Splits [0, count) into `workers` contiguous ranges and runs them on
// separate threads; body(worker, begin, end).
template <class F>
void parallel_chunks(std::size_t count, std::size_t workers, F&& body) {
  if (workers <= 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w, count * w / workers, count * (w + 1) / workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Canonical codes of the connected graphs on n vertices, sorted. Each is
// obtained from one on n-1 vertices by adding a vertex with a nonempty
// neighbourhood: deleting a non-cut vertex of any connected graph gives a
// connected graph.
std::vector<std::vector<std::uint64_t>> connected_codes(std::size_t max_n) {
  std::vector<std::vector<std::uint64_t>> levels(max_n + 1);
  if (max_n >= 1) levels[1] = {std::uint64_t{1} << 48};
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto& parents = levels[n - 1];
    std::vector<std::vector<std::uint64_t>> found(worker_count(parents.size()));
    parallel_chunks(parents.size(), found.size(), [&](std::size_t w, std::size_t lo, std::size_t hi) {
      std::unordered_set<std::uint64_t> seen;
      for (std::size_t i = lo; i < hi; ++i) {
        const Small parent = decode(parents[i]);
        const int p = parent.n;
        for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
          Small child = parent;
          child.n = p + 1;
          child.adj[p] = static_cast<std::uint16_t>(mask);
          for (int u = 0; u < p; ++u) {
            if (mask >> u & 1u) child.adj[u] |= static_cast<std::uint16_t>(1u << p);
          }
          seen.insert(canon(child).first);
        }
      }
      found[w].assign(seen.begin(), seen.end());
    });
    auto& level = levels[n];
    for (const auto& part : found) level.insert(level.end(), part.begin(), part.end());
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return levels;
}

bool parse_count(std::string_view s, std::size_t& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canon(to_small(g)).first; }

Graph canonical_form(const Graph& g) { return to_graph(decode(canonical_code(g))); }

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0 || n > kSearchMaxOrder) {
    fail(ErrorCode::CapExceeded, "connected graph generation needs 1 <= n <= " +
                                     std::to_string(kSearchMaxOrder));
  }
  const auto levels = connected_codes(n);
  std::vector<Graph> out;
  out.reserve(levels[n].size());
  for (std::uint64_t code : levels[n]) out.push_back(to_graph(decode(code)));
  return out;
}

SearchPredicate parse_predicate(std::string_view text) {
  if (text == "sharp") return {PredicateKind::Sharp, 0};
  constexpr std::string_view prefix = "sharp-mult=";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view rest = text.substr(prefix.size());
    std::size_t v = 0;
    if (rest.substr(0, 2) == "N-" && parse_count(rest.substr(2), v)) {
      return {PredicateKind::SharpMultMinus, v};
    }
    if (parse_count(rest, v)) return {PredicateKind::SharpMult, v};
  }
  fail(ErrorCode::Parse, "unknown predicate '" + std::string(text) +
                             "' (expected sharp, sharp-mult=K or sharp-mult=N-J)");
}

std::string to_string(const SearchPredicate& p) {
  switch (p.kind) {
    case PredicateKind::Sharp:
      return "sharp";
    case PredicateKind::SharpMult:
      return "sharp-mult=" + std::to_string(p.value);
    case PredicateKind::SharpMultMinus:
      return "sharp-mult=N-" + std::to_string(p.value);
  }
  return "sharp";
}

SearchResult search_sharp(std::size_t max_n, const SearchPredicate& predicate, double tol) {
  if (max_n < 2 || max_n > kSearchMaxOrder) {
    fail(ErrorCode::CapExceeded,
         "search needs 2 <= max_n <= " + std::to_string(kSearchMaxOrder) + ", got " +
             std::to_string(max_n));
  }
  SearchResult out;
  out.max_n = max_n;
  out.predicate = predicate;
  out.connected_counts.assign(max_n + 1, 0);
  out.sharp_counts.assign(max_n + 1, 0);
  out.hit_counts.assign(max_n + 1, 0);
  const auto levels = connected_codes(max_n);
  for (std::size_t n = 1; n <= max_n; ++n) out.connected_counts[n] = levels[n].size();
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto& codes = levels[n];
    // Per-graph results land in their own slot, so the merge below sees them
    // in code order whatever the thread timing.
    std::vector<std::optional<SearchHit>> sharp(codes.size());
    parallel_chunks(codes.size(), worker_count(codes.size()), [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        Graph g = to_graph(decode(codes[i]));
        const auto [lambda, mult] = largest_eigenvalue(spectrum(g, tol));
        const std::size_t chi = chromatic_number(g);
        const double bound = static_cast<double>(chi) / static_cast<double>(chi - 1);
        if (std::abs(lambda - bound) > tol) continue;
        sharp[i] = SearchHit{std::move(g), chi, lambda, mult};
      }
    });
    for (auto& h : sharp) {
      if (!h) continue;
      ++out.sharp_counts[n];
      bool hit = true;
      if (predicate.kind == PredicateKind::SharpMult) hit = h->multiplicity == predicate.value;
      if (predicate.kind == PredicateKind::SharpMultMinus) {
        hit = predicate.value <= n && h->multiplicity == n - predicate.value;
      }
      if (!hit) continue;
      ++out.hit_counts[n];
      out.hits.push_back(std::move(*h));
    }
  }
  return out;
}

}  // namespace chromspec
