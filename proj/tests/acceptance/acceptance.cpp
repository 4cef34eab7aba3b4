#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncode/census.hpp"
#include "ncode/circulant.hpp"
#include "ncode/cli/batteries.hpp"

using namespace ncode;
using namespace ncode::cli;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Cell {
  CensusReport census;
  double seconds = 0;
};

/// Every census run here, kept for the unity-map criterion.
std::map<std::pair<int, int>, Cell> g_cells;

Cell run_census(int n, int p, int workers = 1, bool prune = false) {
  CensusOptions options;
  options.workers = workers;
  options.prune = prune;
  const auto start = Clock::now();
  Cell cell{enumerate_nrh(circulant_code({n, p}), options), 0};
  cell.seconds = seconds_since(start);
  g_cells[{n, p}] = cell;
  return cell;
}

std::string fmt(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds);
  return buf;
}

/// Census totals against expected values, each within a per-cell budget.
Outcome census_rows(const std::vector<std::pair<std::pair<int, int>, std::uint64_t>>& want, double budget,
                    int workers = 1, bool prune = false) {
  Outcome out;
  std::ostringstream s;
  for (const auto& [spec, value] : want) {
    const Cell cell = run_census(spec.first, spec.second, workers, prune);
    const bool ok = cell.census.nrh_total == value && cell.seconds < budget;
    out.passed = out.passed && ok;
    s << "(" << spec.first << "," << spec.second << ")=" << cell.census.nrh_total;
    if (cell.census.nrh_total != value) s << " expected " << value;
    s << " in " << fmt(cell.seconds) << (ok ? "" : " [FAIL]") << "; ";
  }
  out.detail = s.str();
  return out;
}

Outcome from_checks(const std::vector<Check>& checks) {
  Outcome out;
  std::ostringstream s;
  for (const Check& c : checks) {
    out.passed = out.passed && (c.passed || c.informational);
    s << c.name << ": " << (c.passed ? "pass" : "FAIL");
    if (c.detail.contains("summary")) s << " (" << c.detail["summary"].get<std::string>() << ")";
    s << "; ";
  }
  out.detail = s.str();
  return out;
}

struct Criterion {
  int id;
  const char* claim;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  RunConfig config;
  MopenTally tally;
  const BatteryOptions options = battery_options(config, &tally);

  const std::vector<Criterion> criteria = {
      {1, "explicit counts: (4,2) is 36 with 24 Other, (6,3) is 270, (4,3) is 28", 15,
       [] {
         Outcome out = census_rows({{{4, 2}, 36}, {{6, 3}, 270}, {{4, 3}, 28}}, 5);
         const bool other = g_cells[{4, 2}].census.other_nrh == 24;
         out.passed = out.passed && other;
         out.detail += "Other(4,2)=" + std::to_string(g_cells[{4, 2}].census.other_nrh);
         return out;
       }},
      {2, "support 1 or n-1 gives n!+n for n = 3..6", 30,
       [] {
         std::vector<std::pair<std::pair<int, int>, std::uint64_t>> want;
         std::uint64_t fact = 1;
         for (int n = 3; n <= 6; ++n) {
           fact = 1;
           for (int k = 2; k <= n; ++k) fact *= static_cast<std::uint64_t>(k);
           want.push_back({{n, 1}, fact + n});
           want.push_back({{n, n - 1}, fact + n});
         }
         return census_rows(want, 10);
       }},
      {3, "support 2: 3n for odd n, 2^2(n/2)!+3n for even n >= 6", 240,
       [] { return census_rows({{{5, 2}, 15}, {{7, 2}, 21}, {{6, 2}, 42}, {{8, 2}, 120}}, 120); }},
      {4, "coprime support with n = pd+1 or pd+2 gives 3n", 240,
       [] { return census_rows({{{7, 3}, 21}, {{8, 3}, 24}, {{7, 5}, 21}}, 120); }},
      {5, "support 3 with n = 3d, d > 2: (9,3) is 189 with pruning and 8 workers", 1800,
       [] { return census_rows({{{9, 3}, 189}}, 1800, 8, true); }},
      {6, "basis permutation maps: n! for p in {1, n-1}, else 2n, for n = 4..7", 60,
       [config] { return from_checks({check_bpm_formula(config, 4, 7)}); }},
      {7, "unity maps: exactly n neural unity maps for every census above and every cell n = 4..7", 30,
       [config] {
         Outcome out;
         std::ostringstream s;
         for (const auto& [spec, cell] : g_cells) {
           const bool ok = cell.census.um_nrh == static_cast<std::uint64_t>(spec.first);
           out.passed = out.passed && ok;
           if (!ok) s << "(" << spec.first << "," << spec.second << ") UM=" << cell.census.um_nrh << "; ";
         }
         out.passed = out.passed && !g_cells.empty();
         s << g_cells.size() << " census cells checked; ";
         const Check grid = check_um_count(config, circulant_grid(4, 7));
         out.passed = out.passed && grid.passed;
         s << "unity-map filter on n = 4..7: " << (grid.passed ? "pass" : "FAIL");
         out.detail = s.str();
         return out;
       }},
      {8, "figure realizations reproduce their codes; atom of 2 is one point", 1,
       [options] { return from_checks({check_figure_fidelity(options)}); }},
      {9, "open and closed realizability coincide on the line (n <= 3 all, 200 codes n = 4)", 600,
       [options] { return from_checks({check_open_closed_equivalence(options)}); }},
      {10, "all five rewrites keep the code (figures plus 100 random realizations)", 30,
       [options] { return from_checks({check_conversion_invariance(options)}); }},
      {11, "{12,23} is convex but neither open nor closed convex on the line", 5,
       [options] { return from_checks({check_convexity_counterexample(options)}); }},
      {12, "three singletons inside a codeword or joined pairwise rule out the line", 120,
       [options] { return from_checks({check_obstruction_soundness(options)}); }},
      {13, "surjective maps keep max-intersection completeness; isomorphisms reflect it", 60,
       [options] { return from_checks({check_mic_preservation(options), check_iso_mic_equivalence(options)}); }},
      {14, "isomorphic codes have equally many neural ring homomorphisms via conjugation", 60,
       [options] { return from_checks({check_conjugation_counts(options), check_conjugation_examples(options)}); }},
      {15, "maximal atoms equal full intersections on every realization produced", 1,
       [&tally] {
         Outcome out = from_checks({check_maximal_atoms(tally)});
         out.passed = out.passed && tally.checked > 0;
         out.detail += std::to_string(tally.checked) + " realizations checked";
         return out;
       }},
      {16, "two maximal codewords: open realizable on the line implies max-intersection complete", 600,
       [options] { return from_checks({check_two_maximal_direction(options)}); }},
      {17, "frontier: (7,4) against 3n and (10,5) against 3n+p^2(n/p)!+p(p+1)n (informational)", 1e9,
       [config] {
         Outcome out;
         std::ostringstream s;
         for (CirculantSpec spec : {CirculantSpec{7, 4}, CirculantSpec{10, 5}}) {
           const auto start = Clock::now();
           const VerificationRow row = verify_cell(spec, config);
           const std::string predicted = row.prediction.value ? ncode::to_string(*row.prediction.value) : "-";
           s << "(" << spec.n << "," << spec.p << ")=" << row.census.nrh_total << " conjectured " << predicted << " ("
             << (row.total_match ? "agrees" : "differs") << ", BPM " << row.census.bpm_nrh << ", UM "
             << row.census.um_nrh << ", Other " << row.census.other_nrh << ", " << fmt(seconds_since(start))
             << "); ";
         }
         out.detail = s.str();
         return out;
       }},
  };

  // Criterion 15 reads the tally filled by the realization criteria, so it runs after them.
  const std::vector<int> order = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 13, 14, 15, 17};
  std::map<int, std::string> lines;
  int failed = 0;
  for (int id : order) {
    const Criterion& c = criteria[static_cast<std::size_t>(id - 1)];
    if (!only.empty() && !only.contains(id)) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    if (elapsed > c.budget_seconds) {
      outcome.passed = false;
      outcome.detail += " over budget " + fmt(c.budget_seconds);
    }
    if (!outcome.passed) ++failed;
    std::ostringstream line;
    line << (outcome.passed ? "PASS" : "FAIL") << "  " << (id < 10 ? " " : "") << id << "  " << c.claim << "  ["
         << fmt(elapsed) << "]\n        " << outcome.detail;
    lines[id] = line.str();
  }
  for (const auto& [id, line] : lines) std::printf("%s\n", line.c_str());
  std::printf("%zu criteria, %d failed\n", lines.size(), failed);
  return failed == 0 ? 0 : 1;
}
