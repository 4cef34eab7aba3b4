#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncode/circulant.hpp"
#include "ncode/cli/report.hpp"
#include "ncode/interval.hpp"

namespace ncode::cli {

/// Counts check_maximal_atoms over every realization a battery produces.
struct MopenTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  nlohmann::json failures = nlohmann::json::array();

  /// Returns the check result.
  bool record(const Realization1D& realization, std::string_view origin);
};

struct BatteryOptions {
  std::uint64_t seed = 42;
  int workers = 1;
  int search_cap = 4;
  /// Randomized trials; 0 keeps the battery's default.
  int trials = 0;
  MopenTally* tally = nullptr;
};

BatteryOptions battery_options(const RunConfig& config, MopenTally* tally);

// Realizations on the line.
Check check_figure_fidelity(const BatteryOptions& options);
/// All five code-preserving rewrites on both figures and 100 random realizations.
Check check_conversion_invariance(const BatteryOptions& options);
/// Exhaustive for n <= 3, plus 200 random codes on 4 neurons.
Check check_open_closed_equivalence(const BatteryOptions& options);
Check check_convexity_counterexample(const BatteryOptions& options);
/// Both fixed obstruction codes (n = 5 searched with cap 5), then a sweep of
/// small codes: a witness always rules out every mode.
Check check_obstruction_soundness(const BatteryOptions& options);
/// Exhaustive over codes with exactly two maximal codewords, n <= 4.
Check check_two_maximal_direction(const BatteryOptions& options);
Check check_maximal_atoms(const MopenTally& tally);
std::vector<Check> realization_suite(const RunConfig& config);

// Code maps.
Check check_map_examples(const BatteryOptions& options);
Check check_monotone(const BatteryOptions& options);
Check check_mic_preservation(const BatteryOptions& options);
Check check_iso_mic_equivalence(const BatteryOptions& options);
Check check_maximal_iso(const BatteryOptions& options);
Check check_maximal_projection(const BatteryOptions& options);
std::vector<Check> maps_suite(const RunConfig& config);

// Neural ring endomorphisms.
Check check_endo_laws(const BatteryOptions& options);
Check check_column_law(const BatteryOptions& options);
Check check_unity_maps(const BatteryOptions& options);
Check check_monoid_closure(const BatteryOptions& options);
/// Elementary isomorphisms with the image codewords reordered, so that the
/// conjugating map is a genuine basis permutation.
Check check_conjugation_counts(const BatteryOptions& options);
Check check_conjugation_examples(const BatteryOptions& options);
std::vector<Check> ring_suite(const RunConfig& config);

// Circulant codes.
struct CirculantSuite {
  VerificationTable table;
  std::vector<Check> checks;
};
/// One row per cell: theorem rows bind, the rest are informational.
Check row_check(const VerificationRow& row);
/// Cells above the plain census cap use pruning with at least 8 workers.
VerificationRow verify_cell(const CirculantSpec& spec, const RunConfig& config);
Check check_bpm_formula(const RunConfig& config, int n_min, int n_max);
Check check_um_count(const RunConfig& config, const std::vector<CirculantSpec>& cells);
Check check_rotation_invariance(const RunConfig& config, int n_min, int n_max);
Check check_pruning_soundness(const RunConfig& config, int n_max);
Check check_overlap_consistency(const RunConfig& config);
CirculantSuite circulant_suite(const RunConfig& config);

/// Runs "realization", "maps", "ring", "circulant" or "all".
Report cmd_verify(std::string_view suite, const RunConfig& config);

}  // namespace ncode::cli
