#include "ncode/neural_ring.hpp"

#include <algorithm>

#include "ncode/error.hpp"

namespace ncode {

RingElement::RingElement(int m, std::uint64_t coeffs) : m_(m), coeffs_(coeffs) {
  if (m < 1 || m > kMaxRingDim) {
    throw CodeMismatch("ring dimension " + std::to_string(m) + " outside 1..64");
  }
  if ((coeffs & ~neuron_mask(m)) != 0) {
    throw CodeMismatch("coefficients above the ring dimension");
  }
}

RingElement RingElement::rho(int m, int i) {
  if (i < 1 || i > m) {
    throw CodeMismatch("basis index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  }
  return {m, std::uint64_t{1} << (i - 1)};
}

namespace {

void same_ring(const RingElement& y, const RingElement& z) {
  if (y.m() != z.m()) {
    throw CodeMismatch("ring elements of dimension " + std::to_string(y.m()) + " and " + std::to_string(z.m()));
  }
}

}  // namespace

RingElement multiply(const RingElement& y, const RingElement& z) {
  same_ring(y, z);
  return {y.m(), y.coeffs() & z.coeffs()};
}

RingElement add(const RingElement& y, const RingElement& z) {
  same_ring(y, z);
  return {y.m(), y.coeffs() ^ z.coeffs()};
}

RingElement x_element(const Code& code, int neuron) {
  if (neuron < 1 || neuron > code.n()) {
    throw CodeMismatch("neuron " + std::to_string(neuron) + " outside 1.." + std::to_string(code.n()));
  }
  std::uint64_t coeffs = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i].contains(neuron)) coeffs |= std::uint64_t{1} << i;
  }
  return {static_cast<int>(code.size()), coeffs};
}

std::string to_string(const RingElement& y) {
  if (y.coeffs() == 0) return "0";
  std::string out;
  for (int i = 1; i <= y.m(); ++i) {
    if (!y.coefficient(i)) continue;
    if (!out.empty()) out += " + ";
    out += "rho" + std::to_string(i);
  }
  return out;
}

Endomorphism::Endomorphism(std::vector<int> f) : f_(std::move(f)) {
  if (f_.empty() || f_.size() > static_cast<std::size_t>(kMaxRingDim)) {
    throw InvalidEndomorphism("index function size must be between 1 and 64");
  }
  const int m = static_cast<int>(f_.size());
  for (int v : f_) {
    if (v < 0 || v >= m) throw InvalidEndomorphism("index function value " + std::to_string(v) + " outside [0, m)");
  }
}

Endomorphism Endomorphism::identity(int m) {
  std::vector<int> f(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) f[static_cast<std::size_t>(k)] = k;
  return Endomorphism(std::move(f));
}

Endomorphism Endomorphism::constant(int m, int value) {
  return Endomorphism(std::vector<int>(static_cast<std::size_t>(m), value));
}

RingElement Endomorphism::image_of_basis(int i) const {
  std::uint64_t coeffs = 0;
  for (std::size_t k = 0; k < f_.size(); ++k) {
    if (f_[k] == i) coeffs |= std::uint64_t{1} << k;
  }
  return {m(), coeffs};
}

bool Endomorphism::is_bijective() const {
  std::uint64_t hit = 0;
  for (int v : f_) hit |= std::uint64_t{1} << v;
  return hit == neuron_mask(m());
}

bool Endomorphism::is_constant() const {
  return std::all_of(f_.begin(), f_.end(), [&](int v) { return v == f_.front(); });
}

RingElement apply_endo(const Endomorphism& phi, const RingElement& y) {
  if (phi.m() != y.m()) {
    throw CodeMismatch("endomorphism of dimension " + std::to_string(phi.m()) + " applied to an element of dimension " +
                       std::to_string(y.m()));
  }
  std::uint64_t out = 0;
  for (int k = 0; k < phi.m(); ++k) {
    out |= ((y.coeffs() >> phi[static_cast<std::size_t>(k)]) & 1U) << k;
  }
  return {y.m(), out};
}

EndoClass classify(const Endomorphism& phi) {
  if (phi.is_bijective()) return EndoClass::BPM;
  if (phi.is_constant()) return EndoClass::UM;
  return EndoClass::Other;
}

const char* to_string(EndoClass c) {
  switch (c) {
    case EndoClass::BPM:
      return "BPM";
    case EndoClass::UM:
      return "UM";
    case EndoClass::Other:
      return "Other";
  }
  return "unknown";
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  if (phi.m() != psi.m()) throw CodeMismatch("composing endomorphisms of different dimension");
  // (phi o psi)(y)_k = psi(y)_{f_phi(k)} = y_{f_psi(f_phi(k))}
  std::vector<int> f(phi.f().size());
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = psi[static_cast<std::size_t>(phi[k])];
  return Endomorphism(std::move(f));
}

Endomorphism inverse(const Endomorphism& alpha) {
  if (!alpha.is_bijective()) throw InvalidEndomorphism("only a bijective index function has an inverse");
  std::vector<int> f(alpha.f().size());
  for (std::size_t k = 0; k < f.size(); ++k) f[static_cast<std::size_t>(alpha[k])] = static_cast<int>(k);
  return Endomorphism(std::move(f));
}

Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& alpha) {
  return compose(inverse(alpha), compose(phi, alpha));
}

NeuralTester::NeuralTester(const Code& code) : m_(static_cast<int>(code.size())) {
  if (m_ < 1 || m_ > kMaxRingDim) {
    throw CodeMismatch("neural ring dimension " + std::to_string(m_) + " outside 1..64");
  }
  for (int j = 1; j <= code.n(); ++j) x_.push_back(x_element(code, j).coeffs());
  members_ = x_;
  members_.push_back(0);
  members_.push_back(neuron_mask(m_));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool NeuralTester::is_member(std::uint64_t coeffs) const {
  return std::binary_search(members_.begin(), members_.end(), coeffs);
}

bool NeuralTester::is_neural(const Endomorphism& phi) const {
  if (phi.m() != m_) throw CodeMismatch("endomorphism dimension does not match the code size");
  for (std::uint64_t x : x_) {
    if (!is_member(apply_endo(phi, RingElement(m_, x)).coeffs())) return false;
  }
  return true;
}

bool is_neural(const Endomorphism& phi, const Code& code) { return NeuralTester(code).is_neural(phi); }

}  // namespace ncode
