#include "ncode/arrangement.hpp"

#include <algorithm>

#include "ncode/code_properties.hpp"

namespace ncode {

Interval1D Arrangement::piece_interval(std::size_t first, std::size_t last) const {
  // A run starting at gap t opens at points[t-1]; one ending at gap t closes at points[t].
  const bool left_closed = first % 2 == 1;
  const bool right_closed = last % 2 == 1;
  const Rational& a = left_closed ? points[first / 2] : points[first / 2 - 1];
  const Rational& b = points[last / 2];
  return Interval1D(a, b, left_closed, right_closed);
}

Arrangement arrange(const Realization1D& realization) {
  Arrangement arr;
  for (const Interval1D& iv : realization.intervals()) {
    if (!iv.is_empty()) {
      arr.points.push_back(iv.a());
      arr.points.push_back(iv.b());
    }
  }
  std::sort(arr.points.begin(), arr.points.end());
  arr.points.erase(std::unique(arr.points.begin(), arr.points.end()), arr.points.end());

  const std::size_t k = arr.points.size();
  arr.point_words.assign(k, Codeword{});
  arr.gap_words.assign(k + 1, Codeword{});

  for (int neuron = 1; neuron <= realization.n(); ++neuron) {
    const Interval1D& iv = realization.interval(neuron);
    if (iv.is_empty()) {
      continue;
    }
    const auto lo = static_cast<std::size_t>(std::lower_bound(arr.points.begin(), arr.points.end(), iv.a()) - arr.points.begin());
    const auto hi = static_cast<std::size_t>(std::lower_bound(arr.points.begin(), arr.points.end(), iv.b()) - arr.points.begin());
    for (std::size_t t = lo; t <= hi; ++t) {
      const bool inside = (t > lo && t < hi) || (t == lo && iv.left_closed()) || (t == hi && iv.right_closed());
      if (inside) {
        arr.point_words[t] = arr.point_words[t].with(neuron);
      }
    }
    // Gap t lies between points t-1 and t.
    for (std::size_t t = lo + 1; t <= hi; ++t) {
      arr.gap_words[t] = arr.gap_words[t].with(neuron);
    }
  }
  return arr;
}

Code code_of(const Realization1D& realization) {
  const Arrangement arr = arrange(realization);
  std::vector<Codeword> words;
  for (std::size_t piece = 0; piece < arr.piece_count(); ++piece) {
    const Codeword w = arr.piece_word(piece);
    if (!w.empty()) {
      words.push_back(w);
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return Code(realization.n(), std::move(words));
}

AtomTable atoms(const Realization1D& realization) {
  const Arrangement arr = arrange(realization);
  AtomTable table;
  std::size_t piece = 0;
  while (piece < arr.piece_count()) {
    const Codeword w = arr.piece_word(piece);
    std::size_t last = piece;
    while (last + 1 < arr.piece_count() && arr.piece_word(last + 1) == w) {
      ++last;
    }
    if (!w.empty()) {
      table[w].push_back(arr.piece_interval(piece, last));
    }
    piece = last + 1;
  }
  return table;
}

std::optional<Rational> epsilon_distance(const Realization1D& realization, EpsilonPairs pairs) {
  std::optional<Rational> best;
  const auto& ivs = realization.intervals();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (ivs[i].is_empty()) continue;
    for (std::size_t j = 0; j < ivs.size(); ++j) {
      if (ivs[j].is_empty()) continue;
      if (i == j && pairs == EpsilonPairs::DistinctOnly) continue;
      Rational d = abs(ivs[i].b() - ivs[j].a());
      if (!best || d < *best) {
        best = std::move(d);
      }
    }
  }
  return best;
}

bool check_maximal_atoms(const Realization1D& realization) {
  const Arrangement arr = arrange(realization);
  const Code code = code_of(realization);
  for (Codeword tau : maximal_codewords(code)) {
    for (std::size_t piece = 0; piece < arr.piece_count(); ++piece) {
      const Codeword w = arr.piece_word(piece);
      const bool in_intersection = tau.subset_of(w);
      const bool in_atom = w == tau;
      if (in_intersection != in_atom) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ncode
