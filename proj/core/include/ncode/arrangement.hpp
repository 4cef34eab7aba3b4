#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/interval.hpp"

namespace ncode {

/// The line cut at every distinct endpoint of a realization.
///
/// Elementary pieces alternate gap, point, gap, ..., point, gap. Every piece has
/// constant membership, so set algebra on realizations reduces to set algebra
/// on piece indices.
struct Arrangement {
  std::vector<Rational> points;      // distinct endpoints, ascending
  std::vector<Codeword> point_words; // neurons containing points[t]
  std::vector<Codeword> gap_words;   // gap_words[t] covers (points[t-1], points[t]); size points+1

  std::size_t piece_count() const noexcept { return points.size() * 2 + 1; }
  /// Piece 2t is gap t, piece 2t+1 is point t.
  Codeword piece_word(std::size_t piece) const {
    return piece % 2 == 0 ? gap_words[piece / 2] : point_words[piece / 2];
  }
  /// The piece as an interval; unbounded end gaps are never requested.
  Interval1D piece_interval(std::size_t first, std::size_t last) const;
};

Arrangement arrange(const Realization1D& realization);

/// Atom of each codeword as a union of maximal runs of elementary pieces.
using AtomTable = std::map<Codeword, std::vector<Interval1D>>;

/// C(U) without the empty codeword, ascending by mask.
Code code_of(const Realization1D& realization);

AtomTable atoms(const Realization1D& realization);

enum class EpsilonPairs {
  /// |b_i - a_j| over ordered pairs with i != j.
  DistinctOnly,
  /// Also i == j, which adds every interval length.
  IncludeSelf,
};

/// Minimum right-to-left endpoint distance over non-empty intervals.
/// std::nullopt stands for +infinity (no admissible pair).
std::optional<Rational> epsilon_distance(const Realization1D& realization,
                                         EpsilonPairs pairs = EpsilonPairs::DistinctOnly);

/// For every maximal codeword tau of C(U): atom(tau) equals the intersection
/// of the sets U_i, i in tau, as exact point sets.
bool check_maximal_atoms(const Realization1D& realization);

}  // namespace ncode
