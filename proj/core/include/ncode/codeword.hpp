#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ncode {

inline constexpr int kMaxNeurons = 64;

/// Mask with the low `n` bits set.
constexpr std::uint64_t neuron_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A set of active neurons. Neuron i (1-based) is bit i-1 of the mask.
class Codeword {
 public:
  constexpr Codeword() noexcept = default;
  constexpr explicit Codeword(std::uint64_t mask) noexcept : mask_(mask) {}

  /// Builds a codeword from 1-based neuron indices. Throws std::out_of_range
  /// for indices outside 1..64.
  static Codeword from_neurons(std::span<const int> neurons);
  static Codeword from_neurons(std::initializer_list<int> neurons);

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr int size() const noexcept { return std::popcount(mask_); }

  constexpr bool contains(int neuron) const noexcept {
    return neuron >= 1 && neuron <= kMaxNeurons && ((mask_ >> (neuron - 1)) & 1U) != 0;
  }
  constexpr bool subset_of(Codeword other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  constexpr bool strict_subset_of(Codeword other) const noexcept {
    return subset_of(other) && mask_ != other.mask_;
  }

  constexpr Codeword with(int neuron) const noexcept {
    return Codeword(mask_ | (std::uint64_t{1} << (neuron - 1)));
  }
  constexpr Codeword without(int neuron) const noexcept {
    return Codeword(mask_ & ~(std::uint64_t{1} << (neuron - 1)));
  }

  /// Active neurons, ascending, 1-based.
  std::vector<int> neurons() const;

  friend constexpr Codeword operator&(Codeword x, Codeword y) noexcept {
    return Codeword(x.mask_ & y.mask_);
  }
  friend constexpr Codeword operator|(Codeword x, Codeword y) noexcept {
    return Codeword(x.mask_ | y.mask_);
  }
  friend constexpr auto operator<=>(Codeword, Codeword) noexcept = default;

 private:
  std::uint64_t mask_ = 0;
};

struct CodewordHash {
  std::size_t operator()(Codeword w) const noexcept { return std::hash<std::uint64_t>{}(w.mask()); }
};

/// Compact support notation: "123" for n <= 9, "1,10,12" otherwise, "-" for the empty word.
std::string to_index_string(Codeword word, int n);

/// Binary string c_1 c_2 ... c_n, e.g. "110" for {1,2} on three neurons.
std::string to_bit_string(Codeword word, int n);

}  // namespace ncode
