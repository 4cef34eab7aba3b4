#include <chrono>
#include <numeric>

#include "ncode/cli/batteries.hpp"
#include "ncode/error.hpp"
#include "timing.hpp"

namespace ncode::cli {

namespace {

std::string cell_name(const CirculantSpec& s) { return "n=" + std::to_string(s.n) + " p=" + std::to_string(s.p); }

CensusOptions census_options(const RunConfig& config) {
  CensusOptions o;
  o.cap = config.census_cap;
  o.workers = config.workers;
  return o;
}

std::uint64_t as_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

}  // namespace

VerificationRow verify_cell(const CirculantSpec& spec, const RunConfig& config) {
  VerifyOptions options;
  options.census = census_options(config);
  if (spec.n > config.census_cap) {
    options.prune = true;
    options.census.workers = std::max(config.workers, options.census.pruned_min_workers);
  }
  return verify(spec, options);
}

Check row_check(const VerificationRow& row) {
  Check c{"census " + cell_name(row.spec), row.prediction.source, false};
  c.informational = row.frontier;
  c.passed = row.frontier ? (!row.prediction.value || row.total_match) : row.passed();
  const std::string predicted = row.prediction.value ? ncode::to_string(*row.prediction.value) : "-";
  c.detail = {{"formula", row.prediction.formula},
              {"claim", to_string(row.prediction.status)},
              {"predicted", predicted},
              {"brute_force", row.census.nrh_total},
              {"bpm", row.census.bpm_nrh},
              {"um", row.census.um_nrh},
              {"other", row.census.other_nrh},
              {"pruned", row.census.pruned},
              {"workers", row.census.workers},
              {"summary", "brute force " + std::to_string(row.census.nrh_total) + ", predicted " + predicted +
                              " (BPM " + std::to_string(row.census.bpm_nrh) + "/" +
                              ncode::to_string(row.prediction.bpm_value) + ", UM " + std::to_string(row.census.um_nrh) +
                              "/" + ncode::to_string(row.prediction.um_value) + ")"}};
  c.elapsed_ms = row.census.elapsed_ms;
  return c;
}

Check check_bpm_formula(const RunConfig& config, int n_min, int n_max) {
  return timed([&] {
    Check c{"basis permutations among neural endomorphisms",
            "a circulant code has n! neural basis permutations for support 1 or n-1 and 2n otherwise", false};
    CensusOptions options = census_options(config);
    options.filter = EndoClass::BPM;
    nlohmann::json rows = nlohmann::json::array();
    int bad = 0;
    int cells = 0;
    for (const CirculantSpec& spec : circulant_grid(n_min, n_max)) {
      const CensusReport r = enumerate_nrh(circulant_code(spec), options);
      const std::uint64_t expected = as_u64(predicted_count(spec).bpm_value);
      ++cells;
      if (r.bpm_nrh != expected) {
        ++bad;
        rows.push_back({{"n", spec.n}, {"p", spec.p}, {"bpm", r.bpm_nrh}, {"expected", expected}});
      }
    }
    c.passed = bad == 0 && cells > 0;
    c.detail = {{"cells", cells}, {"mismatches", rows},
                {"summary", std::to_string(cells) + " cells for n = " + std::to_string(n_min) + ".." +
                                std::to_string(n_max) + ", " + std::to_string(bad) + " mismatches"}};
    return c;
  });
}

Check check_um_count(const RunConfig& config, const std::vector<CirculantSpec>& cells) {
  return timed([&] {
    Check c{"unity maps among neural endomorphisms", "all n unity maps of a circulant code are neural", false};
    CensusOptions options = census_options(config);
    options.filter = EndoClass::UM;
    options.cap = 20;
    nlohmann::json rows = nlohmann::json::array();
    int bad = 0;
    for (const CirculantSpec& spec : cells) {
      const CensusReport r = enumerate_nrh(circulant_code(spec), options);
      if (r.um_nrh != static_cast<std::uint64_t>(spec.n)) {
        ++bad;
        rows.push_back({{"n", spec.n}, {"p", spec.p}, {"um", r.um_nrh}});
      }
    }
    c.passed = bad == 0 && !cells.empty();
    c.detail = {{"cells", cells.size()}, {"mismatches", rows},
                {"summary", std::to_string(cells.size()) + " cells, " + std::to_string(bad) + " mismatches"}};
    return c;
  });
}

Check check_rotation_invariance(const RunConfig& config, int n_min, int n_max) {
  return timed([&] {
    Check c{"rotation invariance", "rotating the order of the codewords does not change the census", false};
    const CensusOptions options = census_options(config);
    nlohmann::json rows = nlohmann::json::array();
    int bad = 0;
    int cells = 0;
    for (const CirculantSpec& spec : circulant_grid(n_min, n_max)) {
      const Code code = circulant_code(spec);
      std::vector<Codeword> words(code.begin(), code.end());
      std::rotate(words.begin(), words.begin() + 1, words.end());
      const Code rotated(code.n(), std::move(words));
      const CensusReport a = enumerate_nrh(code, options);
      const CensusReport b = enumerate_nrh(rotated, options);
      ++cells;
      if (a.nrh_total != b.nrh_total || a.bpm_nrh != b.bpm_nrh || a.um_nrh != b.um_nrh) {
        ++bad;
        rows.push_back({{"n", spec.n}, {"p", spec.p}, {"total", a.nrh_total}, {"rotated", b.nrh_total}});
      }
    }
    c.passed = bad == 0 && cells > 0;
    c.detail = {{"cells", cells}, {"mismatches", rows},
                {"summary", std::to_string(cells) + " cells, " + std::to_string(bad) + " mismatches"}};
    return c;
  });
}

Check check_pruning_soundness(const RunConfig& config, int n_max) {
  return timed([&] {
    Check c{"norm pruning is sound", "neural endomorphisms of a circulant code send each x_i to norm 0, p or n", false};
    CensusOptions plain = census_options(config);
    CensusOptions pruned = plain;
    pruned.prune = true;
    nlohmann::json rows = nlohmann::json::array();
    int bad = 0;
    int cells = 0;
    std::uint64_t full = 0;
    std::uint64_t evaluated = 0;
    for (const CirculantSpec& spec : circulant_grid(3, n_max)) {
      if (std::gcd(spec.n, spec.p) != 1) continue;
      const Code code = circulant_code(spec);
      const CensusReport a = enumerate_nrh(code, plain);
      const CensusReport b = enumerate_nrh(code, pruned);
      ++cells;
      full += a.evaluated;
      evaluated += b.evaluated;
      if (!b.pruned || a.nrh_total != b.nrh_total || a.bpm_nrh != b.bpm_nrh || a.um_nrh != b.um_nrh ||
          a.other_nrh != b.other_nrh) {
        ++bad;
        rows.push_back({{"n", spec.n}, {"p", spec.p}, {"plain", a.nrh_total}, {"pruned", b.nrh_total}});
      }
    }
    c.passed = bad == 0 && cells > 0;
    c.detail = {{"cells", cells},
                {"functions_plain", full},
                {"functions_pruned", evaluated},
                {"mismatches", rows},
                {"summary", std::to_string(cells) + " coprime cells with n <= " + std::to_string(n_max) + ", " +
                                std::to_string(bad) + " mismatches"}};
    return c;
  });
}

Check check_overlap_consistency(const RunConfig& config) {
  return timed([&] {
    Check c{"overlapping formulas agree", "for n = 3, p = 2 both n!+n and 3n give 9", false};
    const CensusReport r = enumerate_nrh(circulant_code({3, 2}), census_options(config));
    c.passed = r.nrh_total == 9 && 3 * 2 * 1 + 3 == 9 && 3 * 3 == 9;
    c.detail = {{"brute_force", r.nrh_total}, {"summary", "brute force " + std::to_string(r.nrh_total)}};
    return c;
  });
}

CirculantSuite circulant_suite(const RunConfig& config) {
  CirculantSuite suite;
  std::vector<CirculantSpec> cells = circulant_grid(config.n_min, config.n_max);
  if (config.frontier) {
    for (CirculantSpec extra : {CirculantSpec{7, 4}, CirculantSpec{10, 5}}) {
      if (std::find(cells.begin(), cells.end(), extra) == cells.end()) cells.push_back(extra);
    }
  }
  for (const CirculantSpec& spec : cells) {
    suite.table.rows.push_back(verify_cell(spec, config));
    suite.checks.push_back(row_check(suite.table.rows.back()));
  }
  suite.checks.push_back(check_bpm_formula(config, 3, 7));
  suite.checks.push_back(check_um_count(config, cells));
  suite.checks.push_back(check_rotation_invariance(config, 3, 6));
  suite.checks.push_back(check_pruning_soundness(config, 8));
  suite.checks.push_back(check_overlap_consistency(config));
  return suite;
}

Report cmd_verify(std::string_view suite, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const bool all = suite == "all";
  if (!all && suite != "realization" && suite != "maps" && suite != "ring" && suite != "circulant") {
    throw ParseError("unknown suite '" + std::string(suite) + "' (realization, maps, ring, circulant, all)");
  }
  Report report;
  report.command = "verify " + std::string(suite);
  report.config = config;
  auto append = [&](const char* name, std::vector<Check> checks) {
    std::size_t failed = 0;
    for (const Check& c : checks) {
      if (!c.informational && !c.passed) ++failed;
    }
    report.results[name] = {{"checks", checks.size()}, {"failed", failed}};
    for (Check& c : checks) report.checks.push_back(std::move(c));
  };
  if (all || suite == "realization") append("realization", realization_suite(config));
  if (all || suite == "maps") append("maps", maps_suite(config));
  if (all || suite == "ring") append("ring", ring_suite(config));
  if (all || suite == "circulant") {
    CirculantSuite s = circulant_suite(config);
    append("circulant", std::move(s.checks));
    report.results["circulant_table"] = to_json(s.table);
    report.results["circulant_markdown"] = to_markdown(s.table);
  }
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ncode::cli
