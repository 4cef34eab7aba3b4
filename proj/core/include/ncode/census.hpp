#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncode/code.hpp"
#include "ncode/neural_ring.hpp"

namespace ncode {

struct CensusOptions {
  /// Restrict to one class: BPM walks the m! bijections, UM the m constants.
  std::optional<EndoClass> filter;
  /// Norm-condition pruning; honoured for circulant codes only.
  bool prune = false;
  /// Largest m for a plain census.
  int cap = 9;
  /// Largest m for a pruned census, which also needs `pruned_min_workers`.
  int pruned_cap = 10;
  int pruned_min_workers = 8;
  int workers = 1;
};

struct CensusReport {
  int m = 0;
  int n = 0;
  /// Size of the function space walked: m^m, m! (BPM filter) or m (UM filter).
  std::uint64_t total_functions = 0;
  std::uint64_t nrh_total = 0;
  std::uint64_t bpm_nrh = 0;
  std::uint64_t um_nrh = 0;
  std::uint64_t other_nrh = 0;
  bool pruned = false;
  std::int64_t elapsed_ms = 0;
  int workers = 1;
  /// Index functions fully evaluated (equals total_functions unless pruned).
  std::uint64_t evaluated = 0;
  std::vector<std::string> warnings;
};

/// Counts the unital endomorphisms of R_C that are neural ring homomorphisms,
/// split into BPM / UM / Other. Throws CapacityError when m exceeds the caps.
CensusReport enumerate_nrh(const Code& code, const CensusOptions& options = {});

/// { "m", "n", "total_functions", "nrh_total", "bpm_nrh", "um_nrh", "other_nrh",
///   "pruned", "elapsed_ms", "workers" }
nlohmann::json census_to_json(const CensusReport& report);
CensusReport census_from_json(const nlohmann::json& j);

}  // namespace ncode
