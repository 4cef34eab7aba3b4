#include <chrono>
#include <functional>

#include "ncode/arrangement.hpp"
#include "ncode/cli/batteries.hpp"
#include "ncode/cli/figures.hpp"
#include "ncode/cli/generators.hpp"
#include "ncode/code_io.hpp"
#include "ncode/code_properties.hpp"
#include "ncode/error.hpp"
#include "ncode/search.hpp"
#include "ncode/transform.hpp"
#include "timing.hpp"

namespace ncode::cli {

namespace {

enum : std::uint64_t { kConversion = 1, kOpenClosed = 2, kObstruction = 3 };

constexpr std::size_t kMaxListed = 5;

bool realizes(const Realization1D& u, const Code& code) { return code_of(u).same_set_as(code.without_empty()); }

void note(nlohmann::json& list, nlohmann::json item) {
  if (list.size() < kMaxListed) list.push_back(std::move(item));
}

std::optional<Realization1D> search(const Code& code, RealizationMode mode, const BatteryOptions& options, int cap) {
  SearchOptions so;
  so.cap = cap;
  so.workers = options.workers;
  return search_realization_1d(code, mode, so);
}

void record(const BatteryOptions& options, const Realization1D& u, std::string_view origin) {
  if (options.tally != nullptr) options.tally->record(u, origin);
}

int trials_or(const BatteryOptions& options, int fallback) { return options.trials > 0 ? options.trials : fallback; }

}  // namespace

bool MopenTally::record(const Realization1D& realization, std::string_view origin) {
  ++checked;
  const bool ok = check_maximal_atoms(realization);
  if (!ok) {
    ++failed;
    if (failures.size() < kMaxListed) {
      failures.push_back({{"origin", std::string(origin)}, {"realization", realization_to_json(realization)}});
    }
  }
  return ok;
}

BatteryOptions battery_options(const RunConfig& config, MopenTally* tally) {
  BatteryOptions o;
  o.seed = config.seed;
  o.workers = config.workers;
  o.search_cap = config.search_cap;
  o.trials = config.trials;
  o.tally = tally;
  return o;
}

Check check_figure_fidelity(const BatteryOptions& options) {
  return timed([&] {
    Check c{"figure fidelity", "the two figure realizations produce their stated codes", false};
    const Realization1D fig = figmip_realization();
    const Realization1D ex2 = ex2_realization();
    record(options, fig, "figure: three maximal codewords");
    record(options, ex2, "figure: doublet maximal");

    const bool fig_code = code_of(fig).same_set_as(figmip_code());
    const auto eps = epsilon_distance(fig);
    const bool fig_eps = eps && *eps == Rational(1, 2);
    const AtomTable fig_atoms = atoms(fig);
    const auto top = fig_atoms.find(Codeword::from_neurons({1, 4, 5}));
    const bool fig_atom =
        top != fig_atoms.end() && top->second == std::vector<Interval1D>{Interval1D::open(5, 6)};

    const bool ex2_code_ok = code_of(ex2).same_set_as(ex2_code());
    const AtomTable ex2_atoms = atoms(ex2);
    const auto two = ex2_atoms.find(Codeword::from_neurons({2}));
    const bool ex2_point = two != ex2_atoms.end() && two->second.size() == 1 && two->second[0].is_singleton() &&
                           two->second[0].a() == Rational(7, 2);

    c.passed = fig_code && fig_eps && fig_atom && ex2_code_ok && ex2_point;
    c.detail = {{"three_maximal_code", to_string(code_of(fig))},
                {"three_maximal_code_ok", fig_code},
                {"three_maximal_epsilon", eps ? format_rational(*eps) : "none"},
                {"three_maximal_epsilon_ok", fig_eps},
                {"atom_145_ok", fig_atom},
                {"doublet_code", to_string(code_of(ex2))},
                {"doublet_code_ok", ex2_code_ok},
                {"atom_2_single_point", ex2_point},
                {"summary", c.passed ? "codes, epsilon and atoms as drawn" : "figure mismatch"}};
    return c;
  });
}

Check check_conversion_invariance(const BatteryOptions& options) {
  return timed([&] {
    Check c{"conversion invariance", "open and closed realizations on the line convert into each other keeping the code",
            false};
    const int trials = trials_or(options, 100);
    Rng rng = substream(options.seed, kConversion);
    std::vector<std::pair<std::string, Realization1D>> inputs{{"figure: three maximal codewords", figmip_realization()},
                                                              {"figure: doublet maximal", ex2_realization()}};
    for (int t = 0; t < trials; ++t) {
      const int n = std::uniform_int_distribution<int>(1, 5)(rng);
      const auto mode = std::bernoulli_distribution(0.5)(rng) ? RealizationMode::Open : RealizationMode::Closed;
      inputs.emplace_back("random #" + std::to_string(t), random_realization(rng, n, mode));
    }

    std::uint64_t applied = 0;
    std::uint64_t broken = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& [origin, u] : inputs) {
      record(options, u, origin);
      const Code before = code_of(u);
      auto step = [&](const char* name, const std::function<Realization1D()>& run,
                      const std::function<bool(const Realization1D&)>& extra) -> std::optional<Realization1D> {
        ++applied;
        try {
          Realization1D out = run();
          record(options, out, origin + " / " + name);
          const bool ok = code_of(out).same_set_as(before) && extra(out);
          if (!ok) {
            ++broken;
            note(failures, {{"input", origin}, {"step", name}, {"realization", realization_to_json(u)}});
          }
          return out;
        } catch (const Error& e) {
          ++broken;
          note(failures, {{"input", origin}, {"step", name}, {"error", e.what()}, {"realization", realization_to_json(u)}});
          return std::nullopt;
        }
      };
      auto open_ok = [](const Realization1D& r) {
        const auto e = epsilon_distance(r);
        return r.mode() == RealizationMode::Open && (!e || *e > 0);
      };
      auto singleton_free = [](const Realization1D& r) {
        for (const Interval1D& i : r.intervals()) {
          if (i.is_singleton()) return false;
        }
        return r.mode() == RealizationMode::Closed;
      };
      auto closed_ok = [&](const Realization1D& r) {
        const auto e = epsilon_distance(r);
        return singleton_free(r) && (!e || *e > 0);
      };
      auto is_closed = [](const Realization1D& r) { return r.mode() == RealizationMode::Closed; };
      auto is_open = [](const Realization1D& r) { return r.mode() == RealizationMode::Open; };

      if (u.mode() == RealizationMode::Open) {
        step("normalize_open_epsilon", [&] { return normalize_open_epsilon(u); }, open_ok);
        const auto closed = step("open_to_closed", [&] { return open_to_closed(u); }, is_closed);
        if (!closed) continue;
        step("desingularize_closed", [&] { return desingularize_closed(*closed); }, singleton_free);
        step("normalize_closed_epsilon", [&] { return normalize_closed_epsilon(*closed); }, closed_ok);
        step("closed_to_open", [&] { return closed_to_open(*closed); }, is_open);
      } else {
        step("desingularize_closed", [&] { return desingularize_closed(u); }, singleton_free);
        step("normalize_closed_epsilon", [&] { return normalize_closed_epsilon(u); }, closed_ok);
        const auto open = step("closed_to_open", [&] { return closed_to_open(u); }, is_open);
        if (!open) continue;
        step("normalize_open_epsilon", [&] { return normalize_open_epsilon(*open); }, open_ok);
        step("open_to_closed", [&] { return open_to_closed(*open); }, is_closed);
      }
    }
    c.passed = broken == 0;
    c.detail = {{"realizations", inputs.size()},
                {"random", trials},
                {"transforms_applied", applied},
                {"failures", broken},
                {"examples", failures},
                {"summary", std::to_string(applied) + " transforms on " + std::to_string(inputs.size()) +
                                " realizations, " + std::to_string(broken) + " changed the code"}};
    return c;
  });
}

Check check_open_closed_equivalence(const BatteryOptions& options) {
  return timed([&] {
    Check c{"open and closed agree on the line", "open convex and closed convex codes coincide in dimension 1", false};
    const int trials = trials_or(options, 200);
    std::vector<Code> codes;
    for (int n = 1; n <= 3; ++n) {
      for (Code& code : all_codes(n)) codes.push_back(std::move(code));
    }
    const std::size_t exhaustive = codes.size();
    Rng rng = substream(options.seed, kOpenClosed);
    for (int t = 0; t < trials; ++t) codes.push_back(random_code(rng, 4, 0.25));

    std::uint64_t realizable = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t invalid = 0;
    nlohmann::json examples = nlohmann::json::array();
    const int cap = std::max(options.search_cap, 4);
    for (const Code& code : codes) {
      const auto open = search(code, RealizationMode::Open, options, cap);
      const auto closed = search(code, RealizationMode::Closed, options, cap);
      for (const auto* found : {&open, &closed}) {
        if (!*found) continue;
        record(options, **found, "search: " + to_string(code));
        if (!realizes(**found, code)) ++invalid;
      }
      if (open) ++realizable;
      if (open.has_value() != closed.has_value()) {
        ++mismatches;
        note(examples, {{"code", to_string(code)}, {"open", open.has_value()}, {"closed", closed.has_value()}});
      }
    }
    c.passed = mismatches == 0 && invalid == 0;
    c.detail = {{"exhaustive_codes", exhaustive},
                {"random_codes", trials},
                {"realizable", realizable},
                {"mismatches", mismatches},
                {"invalid_realizations", invalid},
                {"examples", examples},
                {"summary", std::to_string(codes.size()) + " codes, " + std::to_string(realizable) +
                                " realizable, " + std::to_string(mismatches) + " disagreements"}};
    return c;
  });
}

Check check_convexity_counterexample(const BatteryOptions& options) {
  return timed([&] {
    Check c{"convex but not open or closed", "{12, 23} is convex on the line and neither open nor closed convex there",
            false};
    const Code code = convexity_counterexample();
    const auto convex = search(code, RealizationMode::Convex, options, 3);
    const auto open = search(code, RealizationMode::Open, options, 3);
    const auto closed = search(code, RealizationMode::Closed, options, 3);
    if (convex) record(options, *convex, "search: {12, 23} convex");
    const bool convex_ok = convex && realizes(*convex, code);
    c.passed = convex_ok && !open && !closed;
    c.detail = {{"convex", convex ? realization_to_json(*convex) : nlohmann::json(nullptr)},
                {"open", open.has_value()},
                {"closed", closed.has_value()},
                {"summary", std::string(convex_ok ? "convex found" : "convex missing") +
                                (open ? ", open found" : ", no open") + (closed ? ", closed found" : ", no closed")}};
    return c;
  });
}

Check check_obstruction_soundness(const BatteryOptions& options) {
  return timed([&] {
    Check c{"obstruction soundness", "three singletons inside one codeword or joined pairwise forbid a line realization",
            false};
    nlohmann::json fixed = nlohmann::json::array();
    bool fixed_ok = true;
    const std::pair<Code, ObstructionKind> cases[] = {
        {obstruction_triple_in_maximal(), ObstructionKind::TripleInMaximal},
        {obstruction_triple_pairwise(), ObstructionKind::TriplePairwise}};
    for (const auto& [code, kind] : cases) {
      const auto witnesses = find_dim1_obstructions(code);
      const bool witness_ok = !witnesses.empty() && witnesses.front().kind == kind &&
                              witnesses.front().neurons == std::array<int, 3>{1, 2, 3};
      nlohmann::json modes = nlohmann::json::object();
      bool none = true;
      for (RealizationMode mode : {RealizationMode::Open, RealizationMode::Closed, RealizationMode::Convex}) {
        const auto found = search(code, mode, options, std::max(options.search_cap, code.n()));
        modes[std::string(to_string(mode))] = found.has_value();
        none = none && !found;
      }
      fixed_ok = fixed_ok && witness_ok && none;
      fixed.push_back({{"code", to_string(code)},
                       {"witnesses", witnesses.size()},
                       {"kind", witnesses.empty() ? "none" : to_string(witnesses.front().kind)},
                       {"witness_ok", witness_ok},
                       {"found", modes}});
    }

    const int trials = trials_or(options, 200);
    std::vector<Code> codes = all_codes(3);
    Rng rng = substream(options.seed, kObstruction);
    for (int t = 0; t < trials; ++t) {
      Code base = random_code(rng, 4, 0.25);
      std::vector<Codeword> words(base.begin(), base.end());
      for (int i = 1; i <= 3; ++i) {
        const Codeword single = Codeword::from_neurons({i});
        if (!base.contains(single)) words.push_back(single);
      }
      codes.emplace_back(4, std::move(words));
    }
    std::uint64_t obstructed = 0;
    std::uint64_t unsound = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (const Code& code : codes) {
      if (find_dim1_obstructions(code).empty()) continue;
      ++obstructed;
      for (RealizationMode mode : {RealizationMode::Open, RealizationMode::Closed, RealizationMode::Convex}) {
        if (search(code, mode, options, 4)) {
          ++unsound;
          note(examples, {{"code", to_string(code)}, {"mode", to_string(mode)}});
          break;
        }
      }
    }
    c.passed = fixed_ok && unsound == 0;
    c.detail = {{"fixed", fixed},
                {"swept_codes", codes.size()},
                {"obstructed", obstructed},
                {"realized_despite_witness", unsound},
                {"examples", examples},
                {"summary", std::string(fixed_ok ? "both fixed codes obstructed" : "fixed code mismatch") + ", " +
                                std::to_string(obstructed) + " swept codes with witnesses, " +
                                std::to_string(unsound) + " realized anyway"}};
    return c;
  });
}

Check check_two_maximal_direction(const BatteryOptions& options) {
  return timed([&] {
    Check c{"two maximal codewords", "an open convex code with two maximal codewords is max-intersection complete",
            false};
    std::uint64_t domain = 0;
    std::uint64_t realizable = 0;
    std::uint64_t violations = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int n = 1; n <= 4; ++n) {
      for (const Code& code : all_codes(n)) {
        if (maximal_codewords(code).size() != 2) continue;
        ++domain;
        const auto open = search(code, RealizationMode::Open, options, 4);
        if (!open) continue;
        ++realizable;
        record(options, *open, "search: " + to_string(code));
        if (!realizes(*open, code) || !is_max_intersection_complete(code)) {
          ++violations;
          note(examples, {{"code", to_string(code)}, {"realization", realization_to_json(*open)}});
        }
      }
    }
    c.passed = violations == 0 && realizable > 0;
    c.detail = {{"codes_with_two_maximal", domain},
                {"open_realizable", realizable},
                {"not_mic", violations},
                {"examples", examples},
                {"summary", std::to_string(domain) + " codes, " + std::to_string(realizable) + " open, " +
                                std::to_string(violations) + " of those not max-intersection complete"}};
    return c;
  });
}

Check check_maximal_atoms(const MopenTally& tally) {
  Check c{"maximal atoms", "the atom of a maximal codeword is the full intersection of its sets", false};
  c.passed = tally.checked > 0 && tally.failed == 0;
  c.detail = {{"realizations_checked", tally.checked},
              {"failed", tally.failed},
              {"failures", tally.failures},
              {"summary", std::to_string(tally.checked) + " realizations, " + std::to_string(tally.failed) + " failed"}};
  return c;
}

std::vector<Check> realization_suite(const RunConfig& config) {
  MopenTally tally;
  const BatteryOptions options = battery_options(config, &tally);
  std::vector<Check> checks;
  checks.push_back(check_figure_fidelity(options));
  checks.push_back(check_conversion_invariance(options));
  checks.push_back(check_open_closed_equivalence(options));
  checks.push_back(check_convexity_counterexample(options));
  checks.push_back(check_obstruction_soundness(options));
  checks.push_back(check_two_maximal_direction(options));
  checks.push_back(check_maximal_atoms(tally));
  return checks;
}

}  // namespace ncode::cli
