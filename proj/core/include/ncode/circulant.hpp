#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "ncode/census.hpp"
#include "ncode/code.hpp"

namespace ncode {

using BigInt = boost::multiprecision::cpp_int;

struct CirculantSpec {
  int n = 3;
  int p = 1;
  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
};

/// 1-based wraparound into [n]: wrap_index(n + 1, n) == 1, wrap_index(0, n) == n.
int wrap_index(int i, int n);

/// c_1..c_n with neuron i active in c_j iff (j - i) mod n < p, so that
/// x_i = rho_i + rho_{i+1} + ... + rho_{i+p-1} with wraparound.
/// Throws InvalidCode unless 1 <= p < n <= 64.
Code circulant_code(const CirculantSpec& spec);

/// The (n, p) pair whose circulant code has the same codeword set, if any.
std::optional<CirculantSpec> detect_circulant(const Code& code);

enum class PredictionStatus { Theorem, Conjecture, BruteForceOnly };
const char* to_string(PredictionStatus status);

struct Prediction {
  std::optional<BigInt> value;
  PredictionStatus status = PredictionStatus::BruteForceOnly;
  /// Name of the claim that produced the value.
  std::string source;
  /// Closed form behind the value, e.g. "3n".
  std::string formula;
  BigInt bpm_value;
  BigInt um_value;
};

/// Most specific applicable closed form. Clauses, first match wins:
/// special values (4,2) -> 36 and (6,3) -> 270; p in {1, n-1}; p = 2 with n odd;
/// p = 2 with n = 2k, k >= 3; coprime with n = pd+1 or pd+2; p = 3 with n = 3d,
/// d > 2; then the two conjectures (coprime remainder, prime divisor).
Prediction predicted_count(const CirculantSpec& spec);

struct VerifyOptions {
  CensusOptions census;
  /// Use norm pruning where the census allows it.
  bool prune = false;
};

struct VerificationRow {
  CirculantSpec spec;
  Prediction prediction;
  CensusReport census;
  bool total_match = false;  // meaningful only when a value is predicted
  bool bpm_match = false;
  bool um_match = false;
  /// Conjecture and brute-force-only rows: reported, never failing.
  bool frontier = false;
  /// Theorem rows: every component matches.
  bool passed() const noexcept { return frontier || (total_match && bpm_match && um_match); }
};

/// Runs the census for one cell and compares it with the prediction.
VerificationRow verify(const CirculantSpec& spec, const VerifyOptions& options = {});

struct VerificationTable {
  std::vector<VerificationRow> rows;
  /// True when every Theorem row matches.
  bool passed() const;
};

/// Every (n, p) with n_min <= n <= n_max and 1 <= p < n, ordered by n then p.
std::vector<CirculantSpec> circulant_grid(int n_min, int n_max);

/// Cells run one after another; the worker budget goes to each census.
VerificationTable verify_range(const std::vector<CirculantSpec>& cells, const VerifyOptions& options = {});

/// Markdown table laid out like the summary figure: p, n, formula, claim,
/// predicted, brute force, BPM, UM, Other, match.
std::string to_markdown(const VerificationTable& table);
nlohmann::json to_json(const VerificationRow& row);
nlohmann::json to_json(const VerificationTable& table);

/// Decimal string of a big integer.
std::string to_string(const BigInt& value);

}  // namespace ncode
