#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncode/code.hpp"

namespace ncode {

/// Output neuron j takes the state of input neuron perm[j-1] (1-based bijection on [n]).
struct Permutation {
  std::vector<int> perm;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Appends neuron n+1, always off (bit 0) or always on (bit 1).
struct AddTrivial {
  int bit = 0;
  friend bool operator==(const AddTrivial&, const AddTrivial&) = default;
};

/// Appends neuron n+1 as a copy of `source`.
struct AddDuplicate {
  int source = 1;
  friend bool operator==(const AddDuplicate&, const AddDuplicate&) = default;
};

/// Removes neuron `index`; later neurons shift down by one.
struct DeleteNeuron {
  int index = 1;
  friend bool operator==(const DeleteNeuron&, const DeleteNeuron&) = default;
};

/// Identity on words, into a larger code on the same neurons.
struct Inclusion {
  Code target;
  friend bool operator==(const Inclusion&, const Inclusion&) = default;
};

using ElementaryMap = std::variant<Permutation, AddTrivial, AddDuplicate, DeleteNeuron, Inclusion>;

/// Neuron count after the stage; throws ArityError when the stage does not fit n.
int output_arity(const ElementaryMap& stage, int n);

/// Image of one word under a stage on n input neurons (no membership checks).
Codeword map_word(const ElementaryMap& stage, Codeword word, int n);

std::string to_string(const ElementaryMap& stage);

/// True for the stages that map `code` bijectively onto its image: permutations,
/// the two neuron additions, and deletions of trivial or duplicate neurons.
bool is_iso_type(const ElementaryMap& stage, const Code& code);

/// A non-empty composition of elementary maps, applied first to last.
class CodeMap {
 public:
  /// Throws InvalidMap on an empty stage list or a malformed stage.
  explicit CodeMap(std::vector<ElementaryMap> stages);

  const std::vector<ElementaryMap>& stages() const noexcept { return stages_; }

 private:
  std::vector<ElementaryMap> stages_;
};

struct MapImage {
  Code image;
  /// multiplicity[k]: number of input codewords landing on image[k].
  std::vector<std::size_t> multiplicity;
};

/// Image in first-preimage order, with collisions recorded. Throws ArityError
/// when a stage does not fit, InvalidMap when an Inclusion target misses a word.
MapImage apply_with_audit(const CodeMap& map, const Code& code);
Code apply(const CodeMap& map, const Code& code);

/// Neuron count after all stages, starting from n.
int output_arity(const CodeMap& map, int n);

enum class DeletionKind { TrivialDeletion, DuplicateDeletion, ProperProjection };

DeletionKind classify_deletion(const Code& code, int neuron);
const char* to_string(DeletionKind kind);

/// apply(map, C) equals D as a set.
bool is_surjective(const CodeMap& map, const Code& code, const Code& target);

/// sigma subset of tau in C implies q(sigma) subset of q(tau).
bool verify_monotone(const CodeMap& map, const Code& code);

struct MicCheck {
  enum class Status { Preserved, Violated, PreconditionFailed };
  Status status = Status::Preserved;
  /// Violated: an intersection of maximal image words missing from the image,
  /// and a pair of maximal image words producing it when one exists.
  std::optional<Codeword> missing;
  std::optional<std::pair<Codeword, Codeword>> pair;
  std::string reason;
};

/// Re-evaluates max-intersection completeness on the image of a MIC code.
/// A non-MIC input is reported as PreconditionFailed, never as a violation.
MicCheck check_mic_preservation(const CodeMap& map, const Code& code);
const char* to_string(MicCheck::Status status);

struct MaximalReport {
  bool iso_type = false;
  /// Iso maps: M(q(C)) == q(M(C)). Projections: every maximal image word has a
  /// maximal preimage.
  bool holds = false;
  Code image;
  Code maximal_image;     // M(q(C))
  Code image_of_maximal;  // q(M(C))
  /// Maximal codewords of C whose image is not maximal in q(C).
  std::vector<std::pair<Codeword, Codeword>> demoted;
  /// Maximal image words without a maximal preimage.
  std::vector<Codeword> orphaned;
};

/// Inclusion stages are rejected with InvalidMap.
MaximalReport maximal_correspondence(const ElementaryMap& stage, const Code& code);

/// { "stages": [ {"perm":[...]}, {"add_trivial":0|1}, {"dup":i}, {"delete":i},
///               {"include_into": <code JSON>} ] }
nlohmann::json map_to_json(const CodeMap& map);
CodeMap map_from_json(const nlohmann::json& j);

}  // namespace ncode
