#include "chromspec/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "chromspec/bounds.h"
#include "chromspec/coloring.h"
#include "chromspec/compose.h"
#include "chromspec/error.h"
#include "chromspec/io.h"
#include "chromspec/random.h"

namespace chromspec {

namespace {

// Stream offsets so the corpora of different checks never share instances.
constexpr std::uint64_t kSharpStream = 0;
constexpr std::uint64_t kOneSumStream = 1'000'000;
constexpr std::uint64_t kOverlayStream = 2'000'000;
constexpr std::uint64_t kBoundsStream = 3'000'000;

class Check {
 public:
  Check(VerifyReport& report, std::string suite, std::string name)
      : report_(report), index_(report.checks.size()) {
    CheckLine line;
    line.suite = std::move(suite);
    line.name = std::move(name);
    report_.checks.push_back(std::move(line));
  }

  void record(bool ok, const std::string& label) {
    CheckLine& line = report_.checks[index_];
    ++line.cases;
    if (!ok && line.failures++ == 0) line.detail = label;
  }

  // Runs body; exceptions count as failures of this case.
  void run(const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string why;
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    record(ok, why.empty() ? label : label + ": " + why);
  }

 private:
  VerifyReport& report_;
  std::size_t index_;
};

std::string fmt(double x) { return format_measured(x); }

struct Facts {
  Graph graph;
  std::size_t chi;
  Spectrum spectrum;
  double lambda;
  std::size_t mult;
  double bound;
  bool sharp;
};

Facts facts_of(const Graph& g, double tol) {
  Spectrum s = spectrum(g, tol);
  const auto [lambda, mult] = largest_eigenvalue(s);
  const std::size_t chi = chromatic_number(g);
  const double bound = static_cast<double>(chi) / static_cast<double>(chi - 1);
  return {g, chi, std::move(s), lambda, mult, bound, std::abs(lambda - bound) <= tol};
}

bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

void families_suite(VerifyReport& rep, const VerifyOptions& o) {
  const char* s = "families";
  {
    Check c(rep, s, "K_N spectrum matches oracle (N = 2..14)");
    for (std::size_t n = 2; n <= 14; ++n) {
      c.run("K_" + std::to_string(n), [&](std::string& why) {
        return spectrum_matches(spectrum(complete(n), o.tol), oracle_spectrum_complete(n), o.tol, &why);
      });
    }
  }
  {
    Check c(rep, s, "K_{a,b} spectrum matches oracle (a + b <= 14)");
    for (std::size_t a = 1; a <= 13; ++a) {
      for (std::size_t b = a; a + b <= 14; ++b) {
        c.run("K_{" + std::to_string(a) + "," + std::to_string(b) + "}", [&](std::string& why) {
          return spectrum_matches(spectrum(complete_bipartite(a, b), o.tol),
                                  oracle_spectrum_bipartite(a, b), o.tol, &why);
        });
      }
    }
  }
  {
    Check c(rep, s, "T(N,k) spectrum matches oracle (k | N, N <= 14)");
    for (std::size_t n = 2; n <= 14; ++n) {
      for (std::size_t k = 2; k <= n; ++k) {
        if (n % k) continue;
        c.run("T(" + std::to_string(n) + "," + std::to_string(k) + ")", [&](std::string& why) {
          return spectrum_matches(spectrum(turan(n, k), o.tol), oracle_spectrum_turan(n, k), o.tol,
                                  &why);
        });
      }
    }
  }
  {
    Check c(rep, s, "petal(m) spectrum matches oracle (m <= 6)");
    for (std::size_t m = 1; m <= 6; ++m) {
      c.run("petal(" + std::to_string(m) + ")", [&](std::string& why) {
        return spectrum_matches(spectrum(petal(m), o.tol), oracle_spectrum_petal(m), o.tol, &why);
      });
    }
  }
  {
    Check c(rep, s, "Gktd spectrum matches closed form (k, t <= 5)");
    for (std::size_t k = 2; k <= 5; ++k) {
      for (std::size_t t = 2; t <= 5; ++t) {
        for (std::size_t d = 1; d <= k; ++d) {
          if (d == k && (k < t || k * t <= 4)) continue;
          const std::string label =
              "Gktd(" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(d) + ")";
          c.run(label, [&](std::string& why) {
            return spectrum_matches(spectrum(g_ktd(k, t, d), o.tol), oracle_spectrum_g_ktd(k, t, d),
                                    o.tol, &why);
          });
        }
      }
    }
  }
  {
    Check c(rep, s, "Gktd largest eigenvalue follows the case table");
    for (std::size_t k = 2; k <= 5; ++k) {
      for (std::size_t t = 2; t <= 5; ++t) {
        for (std::size_t d = 1; d <= k; ++d) {
          if (k == 2 && t == 2 && d == 2) continue;
          if (d == k && k < t) continue;
          const std::string label =
              "Gktd(" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(d) + ")";
          c.run(label, [&](std::string& why) {
            const LambdaMaxCase expect = g_ktd_lambda_max_case(k, t, d);
            const auto [lambda, mult] = largest_eigenvalue(spectrum(g_ktd(k, t, d), o.tol));
            why = "case " + std::to_string(expect.case_id) + " expects " + to_string(expect.value) +
                  " x" + std::to_string(expect.multiplicity) + ", measured " + fmt(lambda) + " x" +
                  std::to_string(mult);
            return std::abs(lambda - to_double(expect.value)) <= o.tol &&
                   mult == expect.multiplicity;
          });
        }
      }
    }
  }
  {
    Check c(rep, s, "Gktd(k,t,k) is isomorphic to Gktd(t,k,t) via v_j^i -> v_i^j");
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t t = 1; t <= 5; ++t) {
        c.run("k=" + std::to_string(k) + " t=" + std::to_string(t), [&](std::string&) {
          const Graph a = g_ktd(k, t, k);
          const Graph b = g_ktd(t, k, t);
          for (std::size_t i1 = 1; i1 <= t; ++i1) {
            for (std::size_t j1 = 1; j1 <= k; ++j1) {
              for (std::size_t i2 = 1; i2 <= t; ++i2) {
                for (std::size_t j2 = 1; j2 <= k; ++j2) {
                  if (a.adjacent(g_ktd_vertex(k, i1, j1), g_ktd_vertex(k, i2, j2)) !=
                      b.adjacent(g_ktd_vertex(t, j1, i1), g_ktd_vertex(t, j2, i2))) {
                    return false;
                  }
                }
              }
            }
          }
          return true;
        });
      }
    }
  }
  {
    Check chi(rep, s, "Gktd has chromatic number t (d < k, or d = k >= t)");
    Check uniq(rep, s, "Gktd with d < k has exactly one t-coloring");
    Check eq(rep, s, "Gktd class coloring is equitable w.r.t. D^-1 A");
    for (std::size_t k = 2; k <= 5; ++k) {
      for (std::size_t t = 2; t <= 5; ++t) {
        for (std::size_t d = 0; d <= k; ++d) {
          if (d == k && k < t) continue;
          const Graph g = g_ktd(k, t, d);
          const std::string label =
              "Gktd(" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(d) + ")";
          chi.run(label, [&](std::string&) { return chromatic_number(g) == t; });
          if (d < k && k * t <= kEnumerationCap) {
            uniq.run(label, [&](std::string& why) {
              const auto all = enumerate_chi_colorings(g, t);
              why = std::to_string(all.size()) + " colorings";
              return all.size() == 1;
            });
          }
          eq.run(label, [&](std::string&) {
            return is_equitable_dinv_a(g, Coloring(g, g_ktd_class_colors(k, t)));
          });
        }
      }
    }
  }
  {
    Check c(rep, s, "complete split graph has lambda_max = 1 + t/(N-1)");
    for (std::size_t t = 1; t <= 8; ++t) {
      for (std::size_t chi = 2; chi <= 5; ++chi) {
        c.run("split(" + std::to_string(t) + "," + std::to_string(chi) + ")", [&](std::string& why) {
          const double lambda = largest_eigenvalue(spectrum(complete_split(t, chi), o.tol)).first;
          const double expect = to_double(oracle_lambda_max_complete_split(t, chi));
          why = fmt(lambda) + " vs " + fmt(expect);
          return std::abs(lambda - expect) <= o.tol;
        });
      }
    }
  }
}

void sharp_suite(VerifyReport& rep, const VerifyOptions& o) {
  const char* s = "sharp";
  std::vector<NamedGraph> corpus = family_corpus();
  for (std::uint64_t i = 0; i < 500; ++i) {
    corpus.push_back({"random #" + std::to_string(i),
                      corpus_graph(o.seed, kSharpStream + i, 2, o.max_n)});
  }
  Check lower(rep, s, "lambda_max >= chi/(chi-1)");
  Check nontrivial(rep, s, "lambda_max >= (N+1)/(N-1) unless complete or bipartite");
  Check equitable(rep, s, "sharp graphs: every chi-coloring is equitable w.r.t. D^-1 A");
  Check floor(rep, s, "sharp graphs: m(chi/(chi-1)) >= chi - 1");
  Check unique(rep, s, "sharp graphs with m = chi - 1 have a unique chi-coloring");
  Check twins(rep, s, "sharp graphs: twins have degree chi - 1");
  Check dups(rep, s, "sharp graphs: duplicates share a class in every chi-coloring");
  Check mbounds(rep, s, "sharp graphs: twin/duplicate multiplicity bounds hold");
  for (const auto& [name, g] : corpus) {
    Facts f{g, 0, Spectrum({}, o.tol), 0, 0, 0, false};
    try {
      f = facts_of(g, o.tol);
    } catch (const std::exception& e) {
      lower.record(false, name + ": " + e.what());
      continue;
    }
    lower.record(f.lambda >= f.bound - o.tol, name + ": " + fmt(f.lambda) + " < " + fmt(f.bound));
    if (!is_complete(g) && f.chi > 2) {
      const double n = static_cast<double>(g.order());
      nontrivial.record(f.lambda >= (n + 1) / (n - 1) - o.tol, name + ": " + fmt(f.lambda));
    }
    if (!f.sharp || g.order() > kEnumerationCap) continue;
    std::vector<Coloring> cols;
    try {
      cols = enumerate_chi_colorings(g, f.chi);
    } catch (const std::exception& e) {
      equitable.record(false, name + ": " + e.what());
      continue;
    }
    bool all_eq = true;
    for (const auto& c : cols) all_eq = all_eq && is_equitable_dinv_a(g, c);
    equitable.record(all_eq, name);
    const std::size_t m = multiplicity_of(f.spectrum, f.bound);
    floor.record(m + 1 >= f.chi, name + ": m = " + std::to_string(m));
    if (m + 1 == f.chi) unique.record(cols.size() == 1, name + ": " + std::to_string(cols.size()));
    for (const auto& cls : twin_classes(g)) {
      bool ok = true;
      for (Vertex v : cls) ok = ok && g.degree(v) + 1 == f.chi;
      twins.record(ok, name);
    }
    for (const auto& cls : duplicate_classes(g)) {
      bool ok = true;
      for (const auto& c : cols) {
        for (Vertex v : cls) ok = ok && c.color(v) == c.color(cls.front());
      }
      dups.record(ok, name);
    }
    mbounds.run(name, [&](std::string& why) {
      std::vector<VertexSubset> d;
      std::vector<VertexSubset> t;
      for (const auto& cls : duplicate_classes(g)) d.emplace_back(g, cls);
      for (const auto& cls : twin_classes(g)) t.emplace_back(g, cls);
      const auto b = multiplicity_bounds_from_structure(g, cols.front(), d, t);
      why = std::to_string(b.lower) + " <= " + std::to_string(m) + " <= " + std::to_string(b.upper);
      return b.lower <= m && m <= b.upper;
    });
  }
}

struct SharpPiece {
  std::string name;
  Graph graph;
};

void onesum_suite(VerifyReport& rep, const VerifyOptions& o) {
  const char* s = "onesum";
  {
    Check inter(rep, s, "1-sum: lambda_max <= max of the summands (200 random pairs)");
    Check chi(rep, s, "1-sum: chi = max(chi_1, chi_2)");
    Check lowerb(rep, s, "1-sum: m(lambda) >= m_1(lambda) + m_2(lambda) - 1 for common eigenvalues");
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto rng = instance_engine(o.seed, kOneSumStream + i);
      const Graph g1 = corpus_graph(o.seed, kOneSumStream + 500'000 + 2 * i, 2, o.max_n);
      const Graph g2 = corpus_graph(o.seed, kOneSumStream + 500'000 + 2 * i + 1, 2, o.max_n);
      std::uniform_int_distribution<Vertex> x1d(0, static_cast<Vertex>(g1.order() - 1));
      std::uniform_int_distribution<Vertex> x2d(0, static_cast<Vertex>(g2.order() - 1));
      const Vertex x1 = x1d(rng);
      const Vertex x2 = x2d(rng);
      const std::string label = "pair #" + std::to_string(i);
      inter.run(label, [&](std::string& why) {
        const auto r = one_sum_lambda_max_check(g1, x1, g2, x2);
        why = fmt(r.result) + " > " + fmt(r.bound);
        return r.ok;
      });
      const GluedGraph glued = one_sum(g1, x1, g2, x2);
      chi.run(label, [&](std::string&) {
        return chromatic_number(glued.result) ==
               std::max(chromatic_number(g1), chromatic_number(g2));
      });
      lowerb.run(label, [&](std::string& why) {
        const Spectrum s1 = spectrum(g1, o.tol);
        const Spectrum s2 = spectrum(g2, o.tol);
        const Spectrum s12 = spectrum(glued.result, o.tol);
        for (const auto& grp : s1.groups()) {
          const std::size_t m2 = multiplicity_of(s2, grp.value);
          if (m2 == 0) continue;
          const std::size_t m12 = multiplicity_of(s12, grp.value);
          if (m12 + 1 < grp.multiplicity + m2) {
            why = "lambda " + fmt(grp.value);
            return false;
          }
        }
        return true;
      });
    }
  }
  {
    std::vector<SharpPiece> pieces;
    for (std::size_t n = 2; n <= 5; ++n) pieces.push_back({"K_" + std::to_string(n), complete(n)});
    pieces.push_back({"T(4,2)", turan(4, 2)});
    pieces.push_back({"T(6,2)", turan(6, 2)});
    pieces.push_back({"T(6,3)", turan(6, 3)});
    pieces.push_back({"T(9,3)", turan(9, 3)});
    pieces.push_back({"T(8,4)", turan(8, 4)});
    for (std::size_t m = 1; m <= 3; ++m) {
      pieces.push_back({"petal(" + std::to_string(m) + ")", petal(m)});
    }
    pieces.push_back({"bowtie", one_sum(complete(3), 0, complete(3), 0).result});
    Check sharp(rep, s, "sharp (+) sharp with equal chi is sharp with multiplicity m1 + m2 - 1");
    Check basis(rep, s, "glued eigenbases on 1-sums are independent eigenfunctions");
    for (const auto& a : pieces) {
      const Facts fa = facts_of(a.graph, o.tol);
      for (const auto& b : pieces) {
        const Facts fb = facts_of(b.graph, o.tol);
        if (fa.chi != fb.chi) continue;
        for (Vertex xa : {Vertex{0}, static_cast<Vertex>(a.graph.order() - 1)}) {
          const std::string label = a.name + "[" + std::to_string(xa) + "] + " + b.name + "[0]";
          const GluedGraph glued = one_sum(a.graph, xa, b.graph, 0);
          sharp.run(label, [&](std::string& why) {
            const Facts f = facts_of(glued.result, o.tol);
            const std::size_t m = multiplicity_of(f.spectrum, f.bound);
            why = "sharp=" + std::to_string(f.sharp) + " m=" + std::to_string(m);
            return f.sharp && m == fa.mult + fb.mult - 1;
          });
          basis.run(label, [&](std::string& why) {
            const auto b1 = eigenspace_basis(a.graph, fa.bound, o.tol);
            const auto b2 = eigenspace_basis(b.graph, fb.bound, o.tol);
            const auto out = glue_eigenbasis(glued, a.graph, b1, b.graph, b2, fa.bound);
            const auto pred = predict_one_sum_top_multiplicity(a.graph, xa, b.graph, 0, o.tol);
            if (out.size() != pred.predicted) {
              why = std::to_string(out.size()) + " functions, predicted " +
                    std::to_string(pred.predicted);
              return false;
            }
            for (const auto& f : out) {
              const EigenPair p = verify_eigenpair(glued.result, fa.bound, f);
              if (!p.valid) {
                why = "residual " + fmt(p.residual);
                return false;
              }
            }
            DenseMatrix gram(out.size());
            for (std::size_t i = 0; i < out.size(); ++i) {
              for (std::size_t j = 0; j < out.size(); ++j) {
                gram(i, j) = degree_inner_product(glued.result, out[i], out[j]) /
                             std::sqrt(degree_inner_product(glued.result, out[i], out[i]) *
                                       degree_inner_product(glued.result, out[j], out[j]));
              }
            }
            const auto ev = symmetric_eigenvalues(gram);
            why = "Gram matrix is singular";
            return ev.empty() || ev.front() > 1e-8;
          });
        }
      }
    }
  }
  {
    Check c(rep, s, "generalized petal: lambda_max = n/(n-1) with multiplicity N - m");
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t m = 1; m <= 5; ++m) {
        c.run("gpetal(" + std::to_string(m) + "," + std::to_string(n) + ")", [&](std::string& why) {
          std::vector<std::pair<Graph, Vertex>> parts(m, {complete(n), 0});
          const Graph g = one_sum_many(parts).result;
          if (!(g == generalized_petal(m, n))) {
            why = "iterated 1-sum differs from the generator";
            return false;
          }
          const auto [lambda, mult] = largest_eigenvalue(spectrum(g, o.tol));
          const double expect = static_cast<double>(n) / static_cast<double>(n - 1);
          why = fmt(lambda) + " x" + std::to_string(mult);
          return std::abs(lambda - expect) <= o.tol && mult == g.order() - m;
        });
      }
    }
  }
  {
    Check c(rep, s, "2-clique-sums of two triangles exceed 3/2 (C4 -> 2, K4 minus an edge -> 5/3)");
    c.run("C4", [&](std::string&) {
      return std::abs(largest_eigenvalue(spectrum(cycle(4), o.tol)).first - 2.0) <= 1e-10;
    });
    c.run("K4-e", [&](std::string&) {
      const Graph g = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
      return std::abs(largest_eigenvalue(spectrum(g, o.tol)).first - 5.0 / 3.0) <= 1e-10;
    });
  }
  {
    Check inter(rep, s, "edge-disjoint union: lambda_max <= max of the parts (100 overlays)");
    const std::size_t universe = std::max<std::size_t>(3, o.max_n);
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto rng = instance_engine(o.seed, kOverlayStream + i);
      const Overlay ov = random_overlay(rng, universe);
      inter.run("overlay #" + std::to_string(i), [&](std::string& why) {
        const GluedGraph u = edge_disjoint_union(ov.g1, ov.labels1, ov.g2, ov.labels2);
        const double l = largest_eigenvalue(spectrum(u.result, o.tol)).first;
        const double b = std::max(largest_eigenvalue(spectrum(ov.g1, o.tol)).first,
                                  largest_eigenvalue(spectrum(ov.g2, o.tol)).first);
        why = fmt(l) + " > " + fmt(b);
        return l <= b + o.tol;
      });
    }
    Check same(rep, s, "edge-disjoint union over one shared vertex equals the 1-sum byte for byte");
    for (std::uint64_t i = 0; i < 100; ++i) {
      const Graph g1 = corpus_graph(o.seed, kOverlayStream + 500'000 + 2 * i, 2, o.max_n);
      const Graph g2 = corpus_graph(o.seed, kOverlayStream + 500'000 + 2 * i + 1, 2, o.max_n);
      const Vertex x1 = static_cast<Vertex>(i % g1.order());
      const Vertex x2 = static_cast<Vertex>((i / 2) % g2.order());
      same.run("pair #" + std::to_string(i), [&](std::string&) {
        std::vector<std::uint32_t> l1(g1.order());
        std::vector<std::uint32_t> l2(g2.order());
        std::uint32_t next = 1;
        for (Vertex v = 0; v < g1.order(); ++v) l1[v] = v == x1 ? 0 : next++;
        for (Vertex v = 0; v < g2.order(); ++v) l2[v] = v == x2 ? 0 : next++;
        const GluedGraph u = edge_disjoint_union(g1, l1, g2, l2);
        const GluedGraph os = one_sum(g1, x1, g2, x2);
        return write_edge_list(u.result) == write_edge_list(os.result) &&
               u.embeddings == os.embeddings && u.shared == os.shared;
      });
    }
  }
}

void bounds_suite(VerifyReport& rep, const VerifyOptions& o) {
  const char* s = "bounds";
  std::vector<NamedGraph> corpus = family_corpus();
  for (std::uint64_t i = 0; i < 300; ++i) {
    corpus.push_back({"random #" + std::to_string(i),
                      corpus_graph(o.seed, kBoundsStream + i, 2, o.max_n)});
  }
  Check general(rep, s, "general bound (1/x) N/(N-N1) >= lambda_max");
  Check equal(rep, s, "equal classes: N/delta >= lambda_max");
  Check regular(rep, s, "regular equitable bound >= lambda_max");
  Check hoff(rep, s, "Hoffman bound <= chi, and = chi on regular sharp graphs");
  Check spec(rep, s, "lambda/(lambda-1) <= chi");
  for (const auto& [name, g] : corpus) {
    const Facts f = facts_of(g, o.tol);
    const Coloring c = optimal_coloring(g);
    general.run(name, [&](std::string& why) {
      const Rational b = upper_bound_general(g, c);
      why = to_string(b) + " < " + fmt(f.lambda);
      return to_double(b) >= f.lambda - o.tol;
    });
    const OptionalBound e = upper_bound_equal_classes(g, c);
    if (e.value) {
      equal.record(to_double(*e.value) >= f.lambda - o.tol, name);
    }
    const OptionalBound r = upper_bound_regular_equitable(g, c);
    if (r.value) regular.record(to_double(*r.value) >= f.lambda - o.tol, name);
    hoff.run(name, [&](std::string& why) {
      const HoffmanBound h = hoffman_bound(g);
      why = fmt(h.value) + " vs chi " + std::to_string(f.chi);
      if (h.value > static_cast<double>(f.chi) + o.tol) return false;
      if (h.regular && f.sharp) return std::abs(h.value - static_cast<double>(f.chi)) <= 1e-7;
      return true;
    });
    spec.record(chromatic_lower_bound_from_spectrum(f.lambda) <= static_cast<double>(f.chi) + 1e-7,
                name);
  }
  Check turan_eq(rep, s, "Turan graphs attain N/delta");
  for (std::size_t n = 2; n <= 14; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      if (n % k) continue;
      turan_eq.run("T(" + std::to_string(n) + "," + std::to_string(k) + ")", [&](std::string&) {
        const Graph g = turan(n, k);
        const OptionalBound b =
            upper_bound_equal_classes(g, Coloring(g, g_ktd_class_colors(n / k, k)));
        const double lambda = largest_eigenvalue(spectrum(g, o.tol)).first;
        return b.value && std::abs(to_double(*b.value) - lambda) <= o.tol;
      });
    }
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed(); });
}

bool spectrum_matches(const Spectrum& measured, const ExactSpectrum& exact, double tol,
                      std::string* why) {
  const auto& want = exact.groups();
  const auto got = measured.groups();
  auto explain = [&]() {
    if (!why) return;
    std::string m = "{";
    for (auto it = got.rbegin(); it != got.rend(); ++it) {
      if (it != got.rbegin()) m += ", ";
      m += format_measured(it->value) + " x" + std::to_string(it->multiplicity);
    }
    *why = "expected " + exact.to_string() + ", measured " + m + "}";
  };
  if (want.size() != got.size()) {
    explain();
    return false;
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (std::abs(got[i].value - to_double(want[i].first)) > tol ||
        got[i].multiplicity != want[i].second) {
      explain();
      return false;
    }
  }
  return true;
}

std::vector<NamedGraph> family_corpus() {
  std::vector<NamedGraph> out;
  auto add = [&](std::string name, Graph g) {
    if (g.order() >= 2 && is_connected(g)) out.push_back({std::move(name), std::move(g)});
  };
  for (std::size_t n = 2; n <= 10; ++n) add("K_" + std::to_string(n), complete(n));
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t b = a; a + b <= 10; ++b) {
      add("K_{" + std::to_string(a) + "," + std::to_string(b) + "}", complete_bipartite(a, b));
    }
  }
  for (std::size_t n = 4; n <= 12; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      if (n % k == 0) add("T(" + std::to_string(n) + "," + std::to_string(k) + ")", turan(n, k));
    }
  }
  for (std::size_t m = 1; m <= 6; ++m) add("petal(" + std::to_string(m) + ")", petal(m));
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 2; n <= 4; ++n) {
      add("gpetal(" + std::to_string(m) + "," + std::to_string(n) + ")", generalized_petal(m, n));
    }
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t t = 2; t <= 4; ++t) {
      for (std::size_t d = 0; d <= k; ++d) {
        add("Gktd(" + std::to_string(k) + "," + std::to_string(t) + "," + std::to_string(d) + ")",
            g_ktd(k, t, d));
      }
    }
  }
  for (std::size_t t = 1; t <= 6; ++t) {
    for (std::size_t chi = 2; chi <= 5; ++chi) {
      add("split(" + std::to_string(t) + "," + std::to_string(chi) + ")", complete_split(t, chi));
    }
  }
  for (std::size_t n = 3; n <= 9; ++n) add("C_" + std::to_string(n), cycle(n));
  for (std::size_t n = 2; n <= 8; ++n) add("P_" + std::to_string(n), path(n));
  return out;
}

VerifyReport run_verify(const VerifyOptions& o) {
  static const char* const kSuites[] = {"families", "sharp", "onesum", "bounds", "all"};
  if (std::find(std::begin(kSuites), std::end(kSuites), o.suite) == std::end(kSuites)) {
    fail(ErrorCode::InvalidArgument,
         "unknown suite '" + o.suite + "' (families, sharp, onesum, bounds or all)");
  }
  if (o.max_n < 3 || o.max_n > 16) {
    fail(ErrorCode::InvalidArgument, "verify needs 3 <= --max-n <= 16");
  }
  if (!(o.tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  VerifyReport rep;
  const bool all = o.suite == "all";
  if (all || o.suite == "families") families_suite(rep, o);
  if (all || o.suite == "sharp") sharp_suite(rep, o);
  if (all || o.suite == "onesum") onesum_suite(rep, o);
  if (all || o.suite == "bounds") bounds_suite(rep, o);
  return rep;
}

nlohmann::json verify_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json item = {{"suite", c.suite},
                           {"name", c.name},
                           {"cases", c.cases},
                           {"failures", c.failures},
                           {"passed", c.passed()}};
    if (!c.passed()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  return {{"passed", r.passed()}, {"checks", checks}};
}

std::string verify_text(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed() ? "PASS " : "FAIL ") << "[" << c.suite << "] " << c.name << " ("
        << c.cases - c.failures << "/" << c.cases << ")";
    if (!c.passed()) out << " -- " << c.detail;
    out << "\n";
  }
  out << (r.passed() ? "all checks passed\n" : "some checks FAILED\n");
  return out.str();
}

}  // namespace chromspec
