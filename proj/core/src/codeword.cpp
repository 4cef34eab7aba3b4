#include "ncode/codeword.hpp"

#include <stdexcept>

namespace ncode {

Codeword Codeword::from_neurons(std::span<const int> neurons) {
  std::uint64_t mask = 0;
  for (int neuron : neurons) {
    if (neuron < 1 || neuron > kMaxNeurons) {
      throw std::out_of_range("neuron index " + std::to_string(neuron) + " outside 1..64");
    }
    mask |= std::uint64_t{1} << (neuron - 1);
  }
  return Codeword(mask);
}

Codeword Codeword::from_neurons(std::initializer_list<int> neurons) {
  return from_neurons(std::span<const int>(neurons.begin(), neurons.size()));
}

std::vector<int> Codeword::neurons() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string to_index_string(Codeword word, int n) {
  if (word.empty()) {
    return "-";
  }
  std::string out;
  for (int neuron : word.neurons()) {
    if (n > 9 && !out.empty()) {
      out += ',';
    }
    out += std::to_string(neuron);
  }
  return out;
}

std::string to_bit_string(Codeword word, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 1; i <= n; ++i) {
    if (word.contains(i)) {
      out[static_cast<std::size_t>(i - 1)] = '1';
    }
  }
  return out;
}

}  // namespace ncode
