#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ncode/code.hpp"

namespace ncode {

/// Largest ring dimension m = |C| handled by the ring types.
inline constexpr int kMaxRingDim = 64;

/// An element of R_C in the rho basis: bit i-1 is the coefficient of rho_{c_i}.
class RingElement {
 public:
  /// Throws CodeMismatch when m is outside 1..64 or bits lie above m.
  RingElement(int m, std::uint64_t coeffs);

  static RingElement zero(int m) { return {m, 0}; }
  static RingElement one(int m) { return {m, neuron_mask(m)}; }
  /// rho_{c_i}, 1-based.
  static RingElement rho(int m, int i);

  int m() const noexcept { return m_; }
  std::uint64_t coeffs() const noexcept { return coeffs_; }
  bool coefficient(int i) const noexcept { return ((coeffs_ >> (i - 1)) & 1U) != 0; }
  /// Number of rho terms in the expansion.
  int norm() const noexcept { return std::popcount(coeffs_); }

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  int m_;
  std::uint64_t coeffs_;
};

/// rho_i rho_j = 0 for i != j, rho_i^2 = rho_i: coordinatewise AND.
RingElement multiply(const RingElement& y, const RingElement& z);
/// Addition over F2: coordinatewise XOR.
RingElement add(const RingElement& y, const RingElement& z);

/// x_j = sum of rho_c over codewords c with neuron j active.
RingElement x_element(const Code& code, int neuron);

/// "rho1 + rho3", "0".
std::string to_string(const RingElement& y);

/// A unital ring endomorphism of R_C stored as its index function.
///
/// f[k] (0-based) is the unique i with rho_i -> ... + rho_k + ..., so
/// phi(rho_i) = sum over k with f[k] == i of rho_k.
class Endomorphism {
 public:
  /// Throws InvalidEndomorphism unless 1 <= f.size() <= 64 and every value lies in [0, m).
  explicit Endomorphism(std::vector<int> f);

  static Endomorphism identity(int m);
  static Endomorphism constant(int m, int value);

  int m() const noexcept { return static_cast<int>(f_.size()); }
  const std::vector<int>& f() const noexcept { return f_; }
  int operator[](std::size_t k) const { return f_[k]; }

  /// a_i: the image of rho_{i+1} (0-based i), as a coefficient vector.
  RingElement image_of_basis(int i) const;

  bool is_bijective() const;
  bool is_constant() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::vector<int> f_;
};

/// Output coordinate k equals input coordinate f[k].
RingElement apply_endo(const Endomorphism& phi, const RingElement& y);

enum class EndoClass { BPM, UM, Other };

/// BPM when f is a bijection, UM when f is constant (m = 1 counts as BPM).
EndoClass classify(const Endomorphism& phi);
const char* to_string(EndoClass c);

/// Ring composition phi o psi (psi applied first).
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);
/// Throws InvalidEndomorphism when alpha is not bijective.
Endomorphism inverse(const Endomorphism& alpha);
/// alpha^{-1} o phi o alpha. Throws InvalidEndomorphism when alpha is not bijective.
Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& alpha);

/// The membership set {x_i} together with 0 and 1, precomputed once per code.
class NeuralTester {
 public:
  /// Throws CodeMismatch when |C| exceeds kMaxRingDim or is zero.
  explicit NeuralTester(const Code& code);

  int m() const noexcept { return m_; }
  /// phi(x_j) lies in {x_i} U {0, 1} for every neuron j, checked in ascending order.
  bool is_neural(const Endomorphism& phi) const;
  bool is_member(std::uint64_t coeffs) const;

 private:
  int m_;
  std::vector<std::uint64_t> x_;        // x_j per neuron, ascending j
  std::vector<std::uint64_t> members_;  // sorted
};

bool is_neural(const Endomorphism& phi, const Code& code);

}  // namespace ncode
