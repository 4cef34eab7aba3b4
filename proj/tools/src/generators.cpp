#include "ncode/cli/generators.hpp"

#include <algorithm>
#include <numeric>

#include "ncode/code_properties.hpp"
#include "ncode/error.hpp"

namespace ncode::cli {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Code random_code(Rng& rng, int n, double density) {
  const std::uint64_t top = std::uint64_t{1} << n;
  for (;;) {
    std::vector<Codeword> words;
    for (std::uint64_t mask = 1; mask < top; ++mask) {
      if (coin(rng, density)) words.emplace_back(mask);
    }
    if (!words.empty()) return Code(n, std::move(words));
  }
}

Code random_mic_code(Rng& rng, int n, double density) {
  const Code base = random_code(rng, n, density);
  std::vector<Codeword> words(base.begin(), base.end());
  for (Codeword w : intersection_complete(maximal_codewords(base))) {
    if (!base.contains(w)) words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return Code(n, std::move(words));
}

std::vector<Code> all_codes(int n) {
  if (n < 1 || n > 4) throw CapacityError("all_codes supports 1 <= n <= 4");
  const std::uint64_t words = (std::uint64_t{1} << n) - 1;
  std::vector<Code> out;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << words); ++subset) {
    std::vector<Codeword> list;
    for (std::uint64_t w = 1; w <= words; ++w) {
      if ((subset >> (w - 1)) & 1U) list.emplace_back(w);
    }
    out.emplace_back(n, std::move(list));
  }
  return out;
}

Realization1D random_realization(Rng& rng, int n, RealizationMode mode) {
  const int top = 2 * (n + 2);
  for (;;) {
    std::vector<Interval1D> intervals;
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (coin(rng, 0.1)) {
        intervals.push_back(Interval1D::empty());
        continue;
      }
      any = true;
      const int a = uniform(rng, 0, top - 1);
      if (mode == RealizationMode::Closed && coin(rng, 0.15)) {
        intervals.push_back(Interval1D::point(Rational(a, 2)));
        continue;
      }
      const int b = uniform(rng, a + 1, std::min(top, a + 6));
      const bool closed = mode == RealizationMode::Closed;
      intervals.emplace_back(Rational(a, 2), Rational(b, 2), closed, closed);
    }
    if (any) return Realization1D(mode, std::move(intervals));
  }
}

std::vector<int> random_permutation(Rng& rng, int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ElementaryMap random_elementary_map(Rng& rng, const Code& code) {
  const int n = code.n();
  for (;;) {
    switch (uniform(rng, 0, 4)) {
      case 0: {
        std::vector<int> perm = random_permutation(rng, n);
        for (int& v : perm) ++v;
        return Permutation{std::move(perm)};
      }
      case 1:
        if (n < kMaxNeurons) return AddTrivial{uniform(rng, 0, 1)};
        break;
      case 2:
        if (n < kMaxNeurons) return AddDuplicate{uniform(rng, 1, n)};
        break;
      case 3:
        if (n >= 2) return DeleteNeuron{uniform(rng, 1, n)};
        break;
      default: {
        std::vector<Codeword> words(code.begin(), code.end());
        const int extra = uniform(rng, 0, 2);
        for (int k = 0; k < extra; ++k) {
          const Codeword w(std::uniform_int_distribution<std::uint64_t>(0, neuron_mask(n))(rng));
          if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
        }
        return Inclusion{Code(n, std::move(words))};
      }
    }
  }
}

ElementaryMap random_surjective_map(Rng& rng, const Code& code) {
  ElementaryMap stage = random_elementary_map(rng, code);
  if (std::holds_alternative<Inclusion>(stage)) return Inclusion{code};
  return stage;
}

std::pair<Code, ElementaryMap> random_iso_instance(Rng& rng, const Code& code) {
  const int n = code.n();
  switch (uniform(rng, 0, 3)) {
    case 0: {
      std::vector<int> perm = random_permutation(rng, n);
      for (int& v : perm) ++v;
      return {code, Permutation{std::move(perm)}};
    }
    case 1:
      return {code, AddTrivial{uniform(rng, 0, 1)}};
    case 2:
      return {code, AddDuplicate{uniform(rng, 1, n)}};
    default:
      break;
  }
  // Widen with a trivial or duplicate column at a random position, then delete it.
  const ElementaryMap widen = coin(rng, 0.5) ? ElementaryMap(AddTrivial{uniform(rng, 0, 1)})
                                             : ElementaryMap(AddDuplicate{uniform(rng, 1, n)});
  Code wide = apply(CodeMap({widen}), code);
  const int position = uniform(rng, 1, n + 1);
  std::vector<int> perm;
  for (int j = 1; j <= n + 1; ++j) {
    if (j == position) perm.push_back(n + 1);
    if (j <= n) perm.push_back(j);
  }
  wide = apply(CodeMap({Permutation{perm}}), wide);
  return {wide, DeleteNeuron{position}};
}

}  // namespace ncode::cli
