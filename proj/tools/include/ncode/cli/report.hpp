#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ncode::cli {

enum class OutputFormat { Text, Json, Markdown };

std::string_view to_string(OutputFormat format);
/// "text" | "json" | "markdown"; throws ncode::ParseError otherwise.
OutputFormat parse_format(std::string_view text);

struct RunConfig {
  std::uint64_t seed = 42;
  int workers = 1;
  /// Neuron cap for the dimension-1 decider.
  int search_cap = 4;
  /// Ring-dimension cap for a plain census.
  int census_cap = 9;
  OutputFormat format = OutputFormat::Text;
  /// Adds the conjecture cells to `verify circulant`.
  bool frontier = false;
  /// Reports epsilon over all pairs including i == j.
  bool epsilon_include_self = false;
  int n_min = 3;
  int n_max = 6;
  /// Randomized trials per battery; 0 keeps each battery's default.
  int trials = 0;
};

/// NCODE_WORKERS when it holds a positive integer, else 1.
int default_workers();

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

struct Check {
  std::string name;
  /// The claim being checked, named in words.
  std::string citation;
  bool passed = false;
  /// Frontier rows: reported, never failing.
  bool informational = false;
  nlohmann::json detail = nlohmann::json::object();
  std::int64_t elapsed_ms = 0;
};

struct Report {
  std::string command;
  RunConfig config;
  nlohmann::json results = nlohmann::json::object();
  std::vector<Check> checks;
  std::int64_t elapsed_ms = 0;

  /// Every non-informational check passed.
  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }
};

nlohmann::json check_to_json(const Check& check);
Check check_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// JSON with every "elapsed_ms" member removed, for determinism comparisons.
nlohmann::json canonical_json(const Report& report);

std::string render_text(const Report& report);
std::string render_markdown(const Report& report);
std::string render(const Report& report, OutputFormat format);

/// Independent generator per battery: seeding depends only on (seed, battery),
/// so adding a battery never shifts the numbers drawn by another.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t battery);

}  // namespace ncode::cli
