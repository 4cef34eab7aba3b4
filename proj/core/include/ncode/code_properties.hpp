#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ncode/code.hpp"

namespace ncode {

/// M(C): codewords not strictly contained in another codeword, in code order.
Code maximal_codewords(const Code& code);

/// All non-empty intersections of non-empty subcollections of `code`,
/// ascending by mask. The empty intersection is never included.
Code intersection_complete(const Code& code);

/// True iff every non-empty intersection of maximal codewords is a codeword.
bool is_max_intersection_complete(const Code& code);

/// First (smallest mask) intersection of maximal codewords missing from the code.
std::optional<Codeword> missing_max_intersection(const Code& code);

struct DoubletReport {
  bool doublet = false;
  /// Pairs of maximal codewords with non-empty intersection, in M(C) order.
  std::vector<std::pair<Codeword, Codeword>> pairs;
};

/// Doublet-maximal test: each maximal codeword meets at most one other.
DoubletReport is_doublet_maximal(const Code& code);

enum class ObstructionKind {
  /// Singletons {i},{j},{k} plus one codeword containing all three.
  TripleInMaximal,
  /// Singletons {i},{j},{k} plus, for each pair, a codeword containing the pair
  /// and missing the third neuron.
  TriplePairwise,
};

struct ObstructionWitness {
  ObstructionKind kind;
  std::array<int, 3> neurons;  // ascending, 1-based
  std::vector<Codeword> witnesses;
};

/// Patterns that rule out any convex realization on the line. One witness per
/// neuron triple and pattern; the first matching codewords (code order) are
/// reported. Singletons are required to be codewords for both patterns.
std::vector<ObstructionWitness> find_dim1_obstructions(const Code& code);

const char* to_string(ObstructionKind kind);

}  // namespace ncode
