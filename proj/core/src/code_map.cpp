#include "ncode/code_map.hpp"

#include <algorithm>
#include <unordered_map>

#include "ncode/code_io.hpp"
#include "ncode/code_properties.hpp"
#include "ncode/error.hpp"

namespace ncode {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_neuron(int neuron, int n, const char* what) {
  if (neuron < 1 || neuron > n) {
    throw ArityError(std::string(what) + " neuron " + std::to_string(neuron) + " outside 1.." + std::to_string(n));
  }
}

void validate_permutation(const Permutation& p) {
  std::vector<bool> seen(p.perm.size() + 1, false);
  for (int v : p.perm) {
    if (v < 1 || static_cast<std::size_t>(v) > p.perm.size() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidMap("permutation is not a bijection on 1.." + std::to_string(p.perm.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (p.perm.empty() || p.perm.size() > static_cast<std::size_t>(kMaxNeurons)) {
    throw InvalidMap("permutation size must be between 1 and 64");
  }
}

Code apply_stage(const ElementaryMap& stage, const Code& code, std::vector<std::size_t>& multiplicity) {
  const int n = code.n();
  const int out_n = output_arity(stage, n);
  if (const auto* inc = std::get_if<Inclusion>(&stage)) {
    for (Codeword w : code) {
      if (!inc->target.contains(w)) {
        throw InvalidMap("inclusion target is missing codeword " + to_bit_string(w, n));
      }
    }
  }
  std::vector<Codeword> words;
  std::vector<std::size_t> counts;
  std::unordered_map<Codeword, std::size_t, CodewordHash> where;
  for (std::size_t k = 0; k < code.size(); ++k) {
    const Codeword img = map_word(stage, code[k], n);
    auto [it, fresh] = where.try_emplace(img, words.size());
    if (fresh) {
      words.push_back(img);
      counts.push_back(multiplicity[k]);
    } else {
      counts[it->second] += multiplicity[k];
    }
  }
  multiplicity = std::move(counts);
  return Code(out_n, std::move(words));
}

}  // namespace

int output_arity(const ElementaryMap& stage, int n) {
  return std::visit(Overloaded{
                        [&](const Permutation& p) {
                          if (static_cast<int>(p.perm.size()) != n) {
                            throw ArityError("permutation on " + std::to_string(p.perm.size()) +
                                             " neurons applied to a code on " + std::to_string(n));
                          }
                          return n;
                        },
                        [&](const AddTrivial&) {
                          if (n >= kMaxNeurons) throw ArityError("cannot add a neuron beyond 64");
                          return n + 1;
                        },
                        [&](const AddDuplicate& d) {
                          check_neuron(d.source, n, "duplicate source");
                          if (n >= kMaxNeurons) throw ArityError("cannot add a neuron beyond 64");
                          return n + 1;
                        },
                        [&](const DeleteNeuron& d) {
                          check_neuron(d.index, n, "deleted");
                          if (n == 1) throw ArityError("cannot delete the only neuron");
                          return n - 1;
                        },
                        [&](const Inclusion& inc) {
                          if (inc.target.n() != n) {
                            throw ArityError("inclusion target has " + std::to_string(inc.target.n()) +
                                             " neurons, code has " + std::to_string(n));
                          }
                          return n;
                        },
                    },
                    stage);
}

Codeword map_word(const ElementaryMap& stage, Codeword word, int n) {
  const std::uint64_t m = word.mask();
  return std::visit(Overloaded{
                        [&](const Permutation& p) {
                          std::uint64_t out = 0;
                          for (std::size_t j = 0; j < p.perm.size(); ++j) {
                            out |= ((m >> (p.perm[j] - 1)) & 1U) << j;
                          }
                          return Codeword(out);
                        },
                        [&](const AddTrivial& t) {
                          return t.bit != 0 ? word.with(n + 1) : word;
                        },
                        [&](const AddDuplicate& d) {
                          return word.contains(d.source) ? word.with(n + 1) : word;
                        },
                        [&](const DeleteNeuron& d) {
                          const std::uint64_t low = m & neuron_mask(d.index - 1);
                          const std::uint64_t high = d.index >= 64 ? 0 : (m >> d.index) << (d.index - 1);
                          return Codeword(low | high);
                        },
                        [&](const Inclusion&) { return word; },
                    },
                    stage);
}

std::string to_string(const ElementaryMap& stage) {
  return std::visit(Overloaded{
                        [](const Permutation& p) {
                          std::string out = "perm(";
                          for (std::size_t j = 0; j < p.perm.size(); ++j) {
                            if (j != 0) out += ' ';
                            out += std::to_string(p.perm[j]);
                          }
                          return out + ")";
                        },
                        [](const AddTrivial& t) { return "add_trivial(" + std::to_string(t.bit) + ")"; },
                        [](const AddDuplicate& d) { return "dup(" + std::to_string(d.source) + ")"; },
                        [](const DeleteNeuron& d) { return "delete(" + std::to_string(d.index) + ")"; },
                        [](const Inclusion& inc) { return "include_into" + to_bit_string(inc.target); },
                    },
                    stage);
}

bool is_iso_type(const ElementaryMap& stage, const Code& code) {
  if (std::holds_alternative<Inclusion>(stage)) return false;
  if (const auto* d = std::get_if<DeleteNeuron>(&stage)) {
    return classify_deletion(code, d->index) != DeletionKind::ProperProjection;
  }
  return true;
}

CodeMap::CodeMap(std::vector<ElementaryMap> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) {
    throw InvalidMap("a code map needs at least one stage");
  }
  for (const ElementaryMap& stage : stages_) {
    if (const auto* p = std::get_if<Permutation>(&stage)) validate_permutation(*p);
    if (const auto* t = std::get_if<AddTrivial>(&stage); t != nullptr && t->bit != 0 && t->bit != 1) {
      throw InvalidMap("add_trivial bit must be 0 or 1");
    }
  }
}

MapImage apply_with_audit(const CodeMap& map, const Code& code) {
  std::vector<std::size_t> multiplicity(code.size(), 1);
  Code current = code;
  for (const ElementaryMap& stage : map.stages()) {
    current = apply_stage(stage, current, multiplicity);
  }
  return {std::move(current), std::move(multiplicity)};
}

Code apply(const CodeMap& map, const Code& code) { return apply_with_audit(map, code).image; }

int output_arity(const CodeMap& map, int n) {
  for (const ElementaryMap& stage : map.stages()) n = output_arity(stage, n);
  return n;
}

DeletionKind classify_deletion(const Code& code, int neuron) {
  check_neuron(neuron, code.n(), "deleted");
  auto column = [&](int i) {
    std::vector<bool> col;
    col.reserve(code.size());
    for (Codeword w : code) col.push_back(w.contains(i));
    return col;
  };
  const std::vector<bool> target = column(neuron);
  if (std::adjacent_find(target.begin(), target.end(), std::not_equal_to<>()) == target.end()) {
    return DeletionKind::TrivialDeletion;
  }
  for (int other = 1; other <= code.n(); ++other) {
    if (other != neuron && column(other) == target) return DeletionKind::DuplicateDeletion;
  }
  return DeletionKind::ProperProjection;
}

const char* to_string(DeletionKind kind) {
  switch (kind) {
    case DeletionKind::TrivialDeletion:
      return "trivial";
    case DeletionKind::DuplicateDeletion:
      return "duplicate";
    case DeletionKind::ProperProjection:
      return "projection";
  }
  return "unknown";
}

bool is_surjective(const CodeMap& map, const Code& code, const Code& target) {
  const Code image = apply(map, code);
  return image.n() == target.n() && image.same_set_as(target);
}

bool verify_monotone(const CodeMap& map, const Code& code) {
  // Track each input word through the stages so collisions do not lose pairs.
  std::vector<Codeword> images(code.begin(), code.end());
  int n = code.n();
  (void)apply(map, code);  // surfaces arity and inclusion errors
  for (const ElementaryMap& stage : map.stages()) {
    for (Codeword& w : images) w = map_word(stage, w, n);
    n = output_arity(stage, n);
  }
  for (std::size_t s = 0; s < code.size(); ++s) {
    for (std::size_t t = 0; t < code.size(); ++t) {
      if (code[s].subset_of(code[t]) && !images[s].subset_of(images[t])) return false;
    }
  }
  return true;
}

MicCheck check_mic_preservation(const CodeMap& map, const Code& code) {
  MicCheck out;
  if (!is_max_intersection_complete(code)) {
    out.status = MicCheck::Status::PreconditionFailed;
    const auto gap = missing_max_intersection(code);
    out.reason = "input code is not max-intersection complete (missing " +
                 (gap ? to_bit_string(*gap, code.n()) : std::string("?")) + ")";
    return out;
  }
  const Code image = apply(map, code);
  const auto missing = missing_max_intersection(image);
  if (!missing) {
    out.status = MicCheck::Status::Preserved;
    return out;
  }
  out.status = MicCheck::Status::Violated;
  out.missing = missing;
  const Code maximal = maximal_codewords(image);
  for (std::size_t s = 0; s < maximal.size() && !out.pair; ++s) {
    for (std::size_t t = s + 1; t < maximal.size(); ++t) {
      const Codeword meet = maximal[s] & maximal[t];
      if (!meet.empty() && !image.contains(meet)) {
        out.pair = std::make_pair(maximal[s], maximal[t]);
        break;
      }
    }
  }
  out.reason = "image misses the maximal intersection " + to_bit_string(*missing, image.n());
  return out;
}

const char* to_string(MicCheck::Status status) {
  switch (status) {
    case MicCheck::Status::Preserved:
      return "preserved";
    case MicCheck::Status::Violated:
      return "violated";
    case MicCheck::Status::PreconditionFailed:
      return "precondition-failed";
  }
  return "unknown";
}

MaximalReport maximal_correspondence(const ElementaryMap& stage, const Code& code) {
  if (std::holds_alternative<Inclusion>(stage)) {
    throw InvalidMap("maximal correspondence is defined for isomorphisms and projections only");
  }
  const CodeMap map({stage});
  const Code maximal = maximal_codewords(code);
  MaximalReport report{
      .iso_type = is_iso_type(stage, code),
      .holds = false,
      .image = apply(map, code),
      .maximal_image = Code(1, {}),
      .image_of_maximal = apply(map, maximal),
      .demoted = {},
      .orphaned = {},
  };
  report.maximal_image = maximal_codewords(report.image);
  for (Codeword sigma : maximal) {
    const Codeword img = map_word(stage, sigma, code.n());
    if (!report.maximal_image.contains(img)) report.demoted.emplace_back(sigma, img);
  }
  for (Codeword tau : report.maximal_image) {
    const bool has_maximal_preimage = std::any_of(maximal.begin(), maximal.end(), [&](Codeword sigma) {
      return map_word(stage, sigma, code.n()) == tau;
    });
    if (!has_maximal_preimage) report.orphaned.push_back(tau);
  }
  report.holds = report.iso_type ? report.maximal_image.same_set_as(report.image_of_maximal) : report.orphaned.empty();
  return report;
}

nlohmann::json map_to_json(const CodeMap& map) {
  nlohmann::json stages = nlohmann::json::array();
  for (const ElementaryMap& stage : map.stages()) {
    stages.push_back(std::visit(Overloaded{
                                    [](const Permutation& p) { return nlohmann::json{{"perm", p.perm}}; },
                                    [](const AddTrivial& t) { return nlohmann::json{{"add_trivial", t.bit}}; },
                                    [](const AddDuplicate& d) { return nlohmann::json{{"dup", d.source}}; },
                                    [](const DeleteNeuron& d) { return nlohmann::json{{"delete", d.index}}; },
                                    [](const Inclusion& inc) {
                                      return nlohmann::json{{"include_into", code_to_json(inc.target)}};
                                    },
                                },
                                stage));
  }
  return {{"stages", stages}};
}

CodeMap map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("stages") || !j.at("stages").is_array()) {
    throw ParseError("map JSON needs a \"stages\" array");
  }
  auto integer = [](const nlohmann::json& v, const char* key) {
    if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
  };
  std::vector<ElementaryMap> stages;
  for (const auto& entry : j.at("stages")) {
    if (!entry.is_object() || entry.size() != 1) {
      throw ParseError("each stage must be an object with exactly one key");
    }
    const auto it = entry.begin();
    const std::string key = it.key();
    const nlohmann::json& value = it.value();
    if (key == "perm") {
      if (!value.is_array()) throw ParseError("\"perm\" must be an array");
      Permutation p;
      for (const auto& v : value) p.perm.push_back(integer(v, "perm"));
      stages.emplace_back(std::move(p));
    } else if (key == "add_trivial") {
      stages.emplace_back(AddTrivial{integer(value, "add_trivial")});
    } else if (key == "dup") {
      stages.emplace_back(AddDuplicate{integer(value, "dup")});
    } else if (key == "delete") {
      stages.emplace_back(DeleteNeuron{integer(value, "delete")});
    } else if (key == "include_into") {
      stages.emplace_back(Inclusion{code_from_json(value)});
    } else {
      throw ParseError("unknown stage \"" + key + "\"");
    }
  }
  return CodeMap(std::move(stages));
}

}  // namespace ncode
