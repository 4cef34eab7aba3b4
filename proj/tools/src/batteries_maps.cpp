#include <map>

#include "ncode/cli/batteries.hpp"
#include "ncode/cli/figures.hpp"
#include "ncode/cli/generators.hpp"
#include "ncode/code_io.hpp"
#include "ncode/code_map.hpp"
#include "ncode/code_properties.hpp"
#include "timing.hpp"

namespace ncode::cli {

namespace {

enum : std::uint64_t { kMonotone = 11, kMicPreservation = 12, kIsoMic = 13, kMaximalIso = 14, kMaximalProjection = 15 };

constexpr std::size_t kMaxListed = 5;

void note(nlohmann::json& list, nlohmann::json item) {
  if (list.size() < kMaxListed) list.push_back(std::move(item));
}

int trials_or(const BatteryOptions& options, int fallback) { return options.trials > 0 ? options.trials : fallback; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::string kind_label(const ElementaryMap& stage) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Permutation>) return "perm";
        if constexpr (std::is_same_v<T, AddTrivial>) return "add_trivial(" + std::to_string(s.bit) + ")";
        if constexpr (std::is_same_v<T, AddDuplicate>) return "dup";
        if constexpr (std::is_same_v<T, DeleteNeuron>) return "delete";
        return "include";
      },
      stage);
}

nlohmann::json tallies_json(const std::map<std::string, std::pair<int, int>>& t) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [kind, counts] : t) out[kind] = {{"trials", counts.first}, {"failures", counts.second}};
  return out;
}

std::string failure_breakdown(const std::map<std::string, std::pair<int, int>>& t) {
  std::string out;
  for (const auto& [kind, counts] : t) {
    if (counts.second == 0) continue;
    if (!out.empty()) out += ", ";
    out += kind + ": " + std::to_string(counts.second) + "/" + std::to_string(counts.first);
  }
  return out.empty() ? "none" : out;
}

struct Example {
  std::string name;
  bool ok;
};

}  // namespace

Check check_map_examples(const BatteryOptions&) {
  return timed([&] {
    Check c{"map examples", "elementary code maps act on the worked examples as described", false};
    std::vector<Example> ex;
    const Code six = parse_compact(3, "1 2 3 23 13 12");
    const Code three = parse_compact(3, "1 2 3");
    const CodeMap drop3({DeleteNeuron{3}});

    const Code six_image = apply(drop3, six);
    ex.push_back({"projection of the six-word code gives {10, 01, 00, 11}",
                  six_image == Code(2, {Codeword(1), Codeword(2), Codeword(0), Codeword(3)})});
    ex.push_back({"projection of {100, 010, 001} gives {10, 01, 00}",
                  apply(drop3, three) == Code(2, {Codeword(1), Codeword(2), Codeword(0)})});
    ex.push_back({"identity permutation keeps the code", apply(CodeMap({Permutation{{1, 2, 3, 4, 5}}}),
                                                               figmip_code()) == figmip_code()});
    ex.push_back({"constant column deletes trivially",
                  classify_deletion(Code(2, {Codeword(1), Codeword(0)}), 2) == DeletionKind::TrivialDeletion});
    ex.push_back({"equal columns delete as duplicates",
                  classify_deletion(Code(2, {Codeword(3), Codeword(0)}), 2) == DeletionKind::DuplicateDeletion});
    ex.push_back({"six-word code projects properly on neuron 3",
                  classify_deletion(six, 3) == DeletionKind::ProperProjection});
    ex.push_back({"projection of the six-word code is onto {00, 10, 01, 11}",
                  is_surjective(drop3, six, Code(2, {Codeword(0), Codeword(1), Codeword(2), Codeword(3)}))});
    const Code ten(2, {Codeword(1)});
    const Code ten_one(2, {Codeword(1), Codeword(2)});
    ex.push_back({"inclusion of {10} into {10, 01} is not onto", !is_surjective(CodeMap({Inclusion{ten_one}}), ten, ten_one)});
    ex.push_back({"identity is onto", is_surjective(CodeMap({Permutation{{1, 2, 3}}}), six, six)});
    ex.push_back({"projection is monotone on the three-maximal code", verify_monotone(CodeMap({DeleteNeuron{2}}), figmip_code())});
    ex.push_back({"duplicate then delete is monotone",
                  verify_monotone(CodeMap({AddDuplicate{1}, DeleteNeuron{2}}), figmip_code())});
    ex.push_back({"{110, 011, 010} stays max-intersection complete under projection",
                  check_mic_preservation(drop3, parse_compact(3, "12 23 2")).status == MicCheck::Status::Preserved});
    ex.push_back({"identity preserves the doublet code",
                  check_mic_preservation(CodeMap({Permutation{{1, 2, 3, 4, 5, 6}}}), ex2_code()).status ==
                      MicCheck::Status::Preserved});
    ex.push_back({"swapping neurons 1 and 2 matches maximal codewords",
                  maximal_correspondence(Permutation{{2, 1, 3, 4, 5}}, figmip_code()).holds});
    const MaximalReport pro = maximal_correspondence(DeleteNeuron{3}, six);
    const bool demoted = std::any_of(pro.demoted.begin(), pro.demoted.end(), [](const auto& d) {
      return d.first == Codeword::from_neurons({2, 3}) && d.second == Codeword::from_neurons({2});
    });
    ex.push_back({"maximal 011 projects to the non-maximal 01", pro.holds && demoted});
    ex.push_back({"adding an off neuron matches maximal codewords", maximal_correspondence(AddTrivial{0}, figmip_code()).holds});

    nlohmann::json list = nlohmann::json::array();
    std::size_t bad = 0;
    for (const Example& e : ex) {
      list.push_back({{"example", e.name}, {"ok", e.ok}});
      if (!e.ok) ++bad;
    }
    c.passed = bad == 0;
    c.detail = {{"examples", list},
                {"summary", std::to_string(ex.size() - bad) + " of " + std::to_string(ex.size()) + " examples hold"}};
    return c;
  });
}

Check check_monotone(const BatteryOptions& options) {
  return timed([&] {
    Check c{"code maps are monotone", "code maps from ring homomorphisms preserve containment of codewords", false};
    const int trials = trials_or(options, 500);
    Rng rng = substream(options.seed, kMonotone);
    int broken = 0;
    int composed = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const Code code = random_code(rng, uniform(rng, 1, 5), 0.3);
      std::vector<ElementaryMap> stages{random_elementary_map(rng, code)};
      if (std::bernoulli_distribution(0.4)(rng)) {
        const Code mid = apply(CodeMap(stages), code);
        stages.push_back(random_elementary_map(rng, mid));
        ++composed;
      }
      const CodeMap map(stages);
      if (!verify_monotone(map, code)) {
        ++broken;
        note(examples, {{"code", to_string(code)}, {"map", map_to_json(map)}});
      }
    }
    c.passed = broken == 0;
    c.detail = {{"trials", trials},
                {"composed", composed},
                {"failures", broken},
                {"examples", examples},
                {"summary", std::to_string(broken) + " of " + std::to_string(trials) + " maps broke containment"}};
    return c;
  });
}

Check check_mic_preservation(const BatteryOptions& options) {
  return timed([&] {
    Check c{"max-intersection completeness is preserved",
            "a surjective code map from a ring homomorphism carries max-intersection complete codes to such codes",
            false};
    const int trials = trials_or(options, 500);
    Rng rng = substream(options.seed, kMicPreservation);
    std::map<std::string, std::pair<int, int>> by_kind;
    int violations = 0;
    int precondition = 0;
    int not_onto = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const Code code = random_mic_code(rng, uniform(rng, 1, 5), 0.3);
      const ElementaryMap stage = random_surjective_map(rng, code);
      const CodeMap map({stage});
      const Code target = std::holds_alternative<Inclusion>(stage) ? std::get<Inclusion>(stage).target : apply(map, code);
      if (!is_surjective(map, code, target)) ++not_onto;
      const MicCheck result = check_mic_preservation(map, code);
      auto& tally = by_kind[kind_label(stage)];
      ++tally.first;
      if (result.status == MicCheck::Status::PreconditionFailed) ++precondition;
      if (result.status != MicCheck::Status::Violated) continue;
      ++violations;
      ++tally.second;
      const Code image = apply(map, code);
      nlohmann::json item = {{"code", to_bit_string(code)},
                             {"map", to_string(stage)},
                             {"image", to_bit_string(image)},
                             {"missing", to_bit_string(*result.missing, image.n())}};
      if (result.pair) {
        item["pair"] = {to_bit_string(result.pair->first, image.n()), to_bit_string(result.pair->second, image.n())};
      }
      note(examples, item);
    }
    c.passed = violations == 0 && precondition == 0 && not_onto == 0;
    c.detail = {{"trials", trials},
                {"violations", violations},
                {"precondition_failures", precondition},
                {"not_surjective", not_onto},
                {"by_kind", tallies_json(by_kind)},
                {"examples", examples},
                {"summary", std::to_string(violations) + " violations in " + std::to_string(trials) +
                                " instances (" + failure_breakdown(by_kind) + ")"}};
    return c;
  });
}

Check check_iso_mic_equivalence(const BatteryOptions& options) {
  return timed([&] {
    Check c{"isomorphisms respect max-intersection completeness",
            "a code map from a neural ring isomorphism keeps max-intersection completeness in both directions", false};
    const int trials = trials_or(options, 500);
    Rng rng = substream(options.seed, kIsoMic);
    std::map<std::string, std::pair<int, int>> by_kind;
    int mismatches = 0;
    int not_iso = 0;
    int mic_inputs = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const int n = uniform(rng, 1, 4);
      const Code base = std::bernoulli_distribution(0.5)(rng) ? random_mic_code(rng, n, 0.3) : random_code(rng, n, 0.3);
      const auto [code, stage] = random_iso_instance(rng, base);
      if (!is_iso_type(stage, code)) ++not_iso;
      const Code image = apply(CodeMap({stage}), code);
      const bool before = is_max_intersection_complete(code);
      const bool after = is_max_intersection_complete(image);
      if (before) ++mic_inputs;
      auto& tally = by_kind[kind_label(stage)];
      ++tally.first;
      if (before == after) continue;
      ++mismatches;
      ++tally.second;
      note(examples, {{"code", to_bit_string(code)},
                      {"map", to_string(stage)},
                      {"image", to_bit_string(image)},
                      {"code_mic", before},
                      {"image_mic", after}});
    }
    c.passed = mismatches == 0 && not_iso == 0;
    c.detail = {{"trials", trials},
                {"mic_inputs", mic_inputs},
                {"mismatches", mismatches},
                {"not_iso_type", not_iso},
                {"by_kind", tallies_json(by_kind)},
                {"examples", examples},
                {"summary", std::to_string(mismatches) + " disagreements in " + std::to_string(trials) +
                                " instances (" + failure_breakdown(by_kind) + ")"}};
    return c;
  });
}

Check check_maximal_iso(const BatteryOptions& options) {
  return timed([&] {
    Check c{"isomorphisms match maximal codewords",
            "under a permutation or adding or deleting a trivial or duplicate neuron, a codeword is maximal exactly "
            "when its image is",
            false};
    const int trials = trials_or(options, 500);
    Rng rng = substream(options.seed, kMaximalIso);
    int broken = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const auto [code, stage] = random_iso_instance(rng, random_code(rng, uniform(rng, 1, 4), 0.3));
      const MaximalReport report = maximal_correspondence(stage, code);
      if (report.iso_type && report.holds) continue;
      ++broken;
      note(examples, {{"code", to_bit_string(code)}, {"map", to_string(stage)}});
    }
    c.passed = broken == 0;
    c.detail = {{"trials", trials},
                {"failures", broken},
                {"examples", examples},
                {"summary", std::to_string(broken) + " of " + std::to_string(trials) + " instances mismatched"}};
    return c;
  });
}

Check check_maximal_projection(const BatteryOptions& options) {
  return timed([&] {
    Check c{"projections have maximal preimages",
            "every maximal codeword of a projected code is the image of a maximal codeword", false};
    const int trials = trials_or(options, 500);
    Rng rng = substream(options.seed, kMaximalProjection);
    int broken = 0;
    int proper = 0;
    int demoting = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const Code code = random_code(rng, uniform(rng, 2, 5), 0.3);
      const DeleteNeuron stage{uniform(rng, 1, code.n())};
      if (classify_deletion(code, stage.index) == DeletionKind::ProperProjection) ++proper;
      const MaximalReport report = maximal_correspondence(stage, code);
      if (!report.demoted.empty()) ++demoting;
      if (report.holds) continue;
      ++broken;
      note(examples, {{"code", to_bit_string(code)}, {"map", to_string(ElementaryMap(stage))}});
    }
    c.passed = broken == 0;
    c.detail = {{"trials", trials},
                {"proper_projections", proper},
                {"with_demoted_maximal", demoting},
                {"failures", broken},
                {"examples", examples},
                {"summary", std::to_string(broken) + " of " + std::to_string(trials) + " projections lacked a preimage; " +
                                std::to_string(demoting) + " demoted a maximal codeword"}};
    return c;
  });
}

std::vector<Check> maps_suite(const RunConfig& config) {
  const BatteryOptions options = battery_options(config, nullptr);
  return {check_map_examples(options), check_monotone(options),    check_mic_preservation(options),
          check_iso_mic_equivalence(options), check_maximal_iso(options), check_maximal_projection(options)};
}

}  // namespace ncode::cli
