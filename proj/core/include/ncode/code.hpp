#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncode/codeword.hpp"

namespace ncode {

/// An ordered collection of distinct codewords on n neurons.
///
/// The order is significant: position i is the basis index of rho_{c_i} in the
/// neural ring, so it is preserved exactly as given. Values are immutable once
/// constructed and may be shared across threads.
class Code {
 public:
  /// Throws InvalidCode when n is outside 1..64, a word has bits above n, or a
  /// word repeats. An empty word list is accepted here (derived sets may be
  /// empty); the text and JSON readers reject empty codes.
  Code(int n, std::vector<Codeword> words);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }

  std::span<const Codeword> words() const noexcept { return words_; }
  const Codeword& operator[](std::size_t i) const { return words_[i]; }
  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }

  bool contains(Codeword word) const noexcept;
  std::optional<std::size_t> index_of(Codeword word) const noexcept;

  /// Set equality, ignoring order.
  bool same_set_as(const Code& other) const;
  /// True when every word of this code belongs to `other`.
  bool subset_of(const Code& other) const;

  /// Copy with the words in ascending mask order.
  Code sorted() const;

  /// Copy without the empty codeword (if present), order preserved.
  Code without_empty() const;

  /// Ordered equality (same n, same words in the same order).
  friend bool operator==(const Code&, const Code&) = default;

 private:
  int n_;
  std::vector<Codeword> words_;
};

/// Words as "{3, 5, 12}" in support notation.
std::string to_string(const Code& code);

/// Words as "{100, 010}" in binary-string notation.
std::string to_bit_string(const Code& code);

}  // namespace ncode
