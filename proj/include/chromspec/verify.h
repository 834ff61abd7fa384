#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromspec/families.h"
#include "chromspec/graph.h"
#include "chromspec/spectral.h"

namespace chromspec {

struct CheckLine {
  std::string suite;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, if any
  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::string suite = "all";  // families | sharp | onesum | bounds | all
  std::uint64_t seed = 0;
  std::size_t max_n = 10;  // largest order in the random corpora
  double tol = 1e-8;
};

struct VerifyReport {
  std::vector<CheckLine> checks;
  bool passed() const;
};

VerifyReport run_verify(const VerifyOptions& options);
nlohmann::json verify_json(const VerifyReport& r);
std::string verify_text(const VerifyReport& r);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// Connected members of every generator over small parameter grids.
std::vector<NamedGraph> family_corpus();

// Groupwise agreement of a measured spectrum with an exact one.
bool spectrum_matches(const Spectrum& measured, const ExactSpectrum& exact, double tol,
                      std::string* why = nullptr);

}  // namespace chromspec
