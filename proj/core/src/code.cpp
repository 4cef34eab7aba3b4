#include "ncode/code.hpp"

#include <algorithm>
#include <unordered_set>

#include "ncode/error.hpp"

namespace ncode {

Code::Code(int n, std::vector<Codeword> words) : n_(n), words_(std::move(words)) {
  if (n_ < 1 || n_ > kMaxNeurons) {
    throw InvalidCode("neuron count " + std::to_string(n_) + " outside 1..64");
  }
  const std::uint64_t allowed = neuron_mask(n_);
  std::unordered_set<Codeword, CodewordHash> seen;
  seen.reserve(words_.size());
  for (Codeword w : words_) {
    if ((w.mask() & ~allowed) != 0) {
      throw InvalidCode("codeword uses a neuron above n=" + std::to_string(n_));
    }
    if (!seen.insert(w).second) {
      throw InvalidCode("duplicate codeword " + to_index_string(w, n_));
    }
  }
}

bool Code::contains(Codeword word) const noexcept {
  return std::find(words_.begin(), words_.end(), word) != words_.end();
}

std::optional<std::size_t> Code::index_of(Codeword word) const noexcept {
  auto it = std::find(words_.begin(), words_.end(), word);
  if (it == words_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - words_.begin());
}

bool Code::same_set_as(const Code& other) const {
  return n_ == other.n_ && words_.size() == other.words_.size() && subset_of(other);
}

bool Code::subset_of(const Code& other) const {
  return std::all_of(words_.begin(), words_.end(), [&](Codeword w) { return other.contains(w); });
}

Code Code::sorted() const {
  std::vector<Codeword> copy = words_;
  std::sort(copy.begin(), copy.end());
  return Code(n_, std::move(copy));
}

Code Code::without_empty() const {
  std::vector<Codeword> copy;
  copy.reserve(words_.size());
  std::copy_if(words_.begin(), words_.end(), std::back_inserter(copy), [](Codeword w) { return !w.empty(); });
  return Code(n_, std::move(copy));
}

namespace {

template <typename Fmt>
std::string join(const Code& code, Fmt fmt) {
  std::string out = "{";
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += fmt(code[i], code.n());
  }
  out += "}";
  return out;
}

}  // namespace

std::string to_string(const Code& code) {
  return join(code, [](Codeword w, int n) { return to_index_string(w, n); });
}

std::string to_bit_string(const Code& code) {
  return join(code, [](Codeword w, int n) { return to_bit_string(w, n); });
}

}  // namespace ncode
