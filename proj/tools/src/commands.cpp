#include "ncode/cli/commands.hpp"

#include <chrono>

#include "ncode/arrangement.hpp"
#include "ncode/circulant.hpp"
#include "ncode/cli/batteries.hpp"
#include "ncode/code_io.hpp"
#include "ncode/code_properties.hpp"
#include "ncode/error.hpp"
#include "ncode/search.hpp"
#include "ncode/transform.hpp"

namespace ncode::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

nlohmann::json words_json(const Code& code) {
  nlohmann::json out = nlohmann::json::array();
  for (Codeword w : code) out.push_back(to_index_string(w, code.n()));
  return out;
}

nlohmann::json epsilon_json(const Realization1D& u, const RunConfig& config) {
  const auto distinct = epsilon_distance(u, EpsilonPairs::DistinctOnly);
  const auto self = epsilon_distance(u, EpsilonPairs::IncludeSelf);
  auto show = [](const std::optional<Rational>& e) { return e ? format_rational(*e) : std::string("none"); };
  return {{"reading", config.epsilon_include_self ? "include-self" : "distinct-pairs"},
          {"value", show(config.epsilon_include_self ? self : distinct)},
          {"distinct_pairs", show(distinct)},
          {"include_self", show(self)}};
}

Check atoms_check(const Realization1D& u) {
  Check c{"maximal atoms", "the atom of a maximal codeword is the full intersection of its sets",
          check_maximal_atoms(u)};
  c.detail = {{"summary", c.passed ? "every maximal atom is a full intersection" : "a maximal atom is smaller"}};
  return c;
}

}  // namespace

Report cmd_analyze(const Code& code, const RunConfig& config) {
  const auto start = Clock::now();
  Report r;
  r.command = "analyze";
  r.config = config;
  const Code maximal = maximal_codewords(code);
  const DoubletReport doublet = is_doublet_maximal(code);
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : doublet.pairs) pairs.push_back({to_index_string(a, code.n()), to_index_string(b, code.n())});
  nlohmann::json obstructions = nlohmann::json::array();
  for (const ObstructionWitness& w : find_dim1_obstructions(code)) {
    nlohmann::json witnesses = nlohmann::json::array();
    for (Codeword x : w.witnesses) witnesses.push_back(to_index_string(x, code.n()));
    obstructions.push_back({{"kind", to_string(w.kind)}, {"neurons", w.neurons}, {"witnesses", witnesses}});
  }
  const auto missing = missing_max_intersection(code);
  r.results = {{"n", code.n()},
               {"size", code.size()},
               {"code", words_json(code)},
               {"maximal", words_json(maximal)},
               {"maximal_intersections", words_json(intersection_complete(maximal))},
               {"max_intersection_complete", is_max_intersection_complete(code)},
               {"missing", missing ? nlohmann::json(to_index_string(*missing, code.n())) : nlohmann::json(nullptr)},
               {"doublet_maximal", doublet.doublet},
               {"meeting_maximal_pairs", pairs},
               {"obstructions", obstructions}};
  r.elapsed_ms = since(start);
  return r;
}

Report cmd_realize(const Code& code, RealizationMode mode, const RunConfig& config) {
  const auto start = Clock::now();
  Report r;
  r.command = "realize";
  r.config = config;
  SearchOptions options;
  options.cap = config.search_cap;
  options.workers = config.workers;
  SearchStats stats;
  const auto found = search_realization_1d(code, mode, options, &stats);
  r.results = {{"code", words_json(code)}, {"mode", std::string(to_string(mode))}, {"nodes", stats.nodes}};
  if (found) {
    const Code produced = code_of(*found);
    Check same{"realization reproduces the code", "a realization's atoms are exactly the codewords",
               produced.same_set_as(code.without_empty())};
    same.detail = {{"produced", words_json(produced)},
                   {"summary", same.passed ? "code_of matches" : "code_of differs"}};
    r.results["found"] = true;
    r.results["realization"] = realization_to_json(*found);
    r.results["verdict"] = "realizable";
    r.checks.push_back(same);
    r.checks.push_back(atoms_check(*found));
  } else {
    r.results["found"] = false;
    r.results["realization"] = nullptr;
    r.results["verdict"] = "none (exhaustive)";
  }
  r.elapsed_ms = since(start);
  return r;
}

Report cmd_atoms(const Realization1D& u, const RunConfig& config) {
  const auto start = Clock::now();
  Report r;
  r.command = "atoms";
  r.config = config;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [word, pieces] : atoms(u)) {
    nlohmann::json parts = nlohmann::json::array();
    for (const Interval1D& piece : pieces) parts.push_back(to_string(piece));
    list.push_back({{"word", to_index_string(word, u.n())}, {"pieces", parts}});
  }
  r.results = {{"mode", std::string(to_string(u.mode()))},
               {"code", words_json(code_of(u))},
               {"atoms", list},
               {"epsilon", epsilon_json(u, config)}};
  r.checks.push_back(atoms_check(u));
  r.elapsed_ms = since(start);
  return r;
}

Report cmd_convert(const Realization1D& u, RealizationMode to, const RunConfig& config) {
  const auto start = Clock::now();
  if (to == RealizationMode::Convex) throw ModeMismatch("conversion targets are open or closed");
  Report r;
  r.command = std::string("convert --to ") + std::string(to_string(to));
  r.config = config;
  const Realization1D out = to == RealizationMode::Closed ? open_to_closed(u) : closed_to_open(u);
  const Code before = code_of(u);
  const Code after = code_of(out);
  Check same{"conversion keeps the code", "open and closed realizations on the line convert into each other keeping the code",
             before.same_set_as(after)};
  same.detail = {{"summary", same.passed ? "code unchanged" : "code changed"}};
  r.results = {{"code_before", words_json(before)},
               {"code_after", words_json(after)},
               {"epsilon_before", epsilon_json(u, config)},
               {"epsilon_after", epsilon_json(out, config)},
               {"realization", realization_to_json(out)}};
  r.checks.push_back(same);
  r.checks.push_back(atoms_check(out));
  r.elapsed_ms = since(start);
  return r;
}

Report cmd_map_apply(const CodeMap& map, const Code& code, const RunConfig& config) {
  const auto start = Clock::now();
  Report r;
  r.command = "map apply";
  r.config = config;
  const MapImage image = apply_with_audit(map, code);
  nlohmann::json stages = nlohmann::json::array();
  for (const ElementaryMap& s : map.stages()) stages.push_back(to_string(s));
  nlohmann::json mult = nlohmann::json::array();
  for (std::size_t k = 0; k < image.image.size(); ++k) {
    mult.push_back({{"word", to_bit_string(image.image[k], image.image.n())}, {"preimages", image.multiplicity[k]}});
  }
  const MicCheck mic = check_mic_preservation(map, code);
  r.results = {{"stages", stages},
               {"input", to_bit_string(code)},
               {"image", to_bit_string(image.image)},
               {"n_out", image.image.n()},
               {"multiplicity", mult},
               {"input_mic", is_max_intersection_complete(code)},
               {"image_mic", is_max_intersection_complete(image.image)},
               {"mic_preservation", to_string(mic.status)},
               {"mic_reason", mic.reason}};
  Check monotone{"map is monotone", "code maps from ring homomorphisms preserve containment of codewords",
                 verify_monotone(map, code)};
  monotone.detail = {{"summary", monotone.passed ? "containment preserved" : "containment broken"}};
  r.checks.push_back(monotone);
  r.elapsed_ms = since(start);
  return r;
}

Report cmd_census(const std::optional<Code>& code, int n, int p, bool prune, const RunConfig& config) {
  const auto start = Clock::now();
  Report r;
  r.command = "census";
  r.config = config;
  const Code target = code ? *code : circulant_code({n, p});
  CensusOptions options;
  options.cap = config.census_cap;
  options.workers = config.workers;
  options.prune = prune;
  const CensusReport census = enumerate_nrh(target, options);
  r.results = {{"census", census_to_json(census)}, {"warnings", census.warnings}};
  if (const auto spec = detect_circulant(target)) {
    const Prediction prediction = predicted_count(*spec);
    VerificationRow row{*spec, prediction, census, false, false, false, false};
    row.frontier = prediction.status != PredictionStatus::Theorem;
    row.total_match = prediction.value && *prediction.value == census.nrh_total;
    row.bpm_match = prediction.bpm_value == census.bpm_nrh;
    row.um_match = prediction.um_value == census.um_nrh;
    r.results["circulant"] = {{"n", spec->n}, {"p", spec->p}};
    r.checks.push_back(row_check(row));
  }
  r.elapsed_ms = since(start);
  return r;
}

}  // namespace ncode::cli
