#include "ncode/code_properties.hpp"

#include <algorithm>
#include <set>

namespace ncode {

Code maximal_codewords(const Code& code) {
  std::vector<Codeword> out;
  for (Codeword w : code) {
    const bool dominated =
        std::any_of(code.begin(), code.end(), [w](Codeword other) { return w.strict_subset_of(other); });
    if (!dominated) {
      out.push_back(w);
    }
  }
  return Code(code.n(), std::move(out));
}

Code intersection_complete(const Code& code) {
  // Closure of the non-empty words under intersection with an original word.
  std::set<std::uint64_t> closure;
  std::vector<std::uint64_t> frontier;
  for (Codeword w : code) {
    if (!w.empty() && closure.insert(w.mask()).second) {
      frontier.push_back(w.mask());
    }
  }
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : frontier) {
      for (Codeword w : code) {
        const std::uint64_t x = f & w.mask();
        if (x != 0 && closure.insert(x).second) {
          next.push_back(x);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Codeword> out;
  out.reserve(closure.size());
  for (std::uint64_t m : closure) {
    out.emplace_back(m);
  }
  return Code(code.n(), std::move(out));
}

std::optional<Codeword> missing_max_intersection(const Code& code) {
  for (Codeword w : intersection_complete(maximal_codewords(code))) {
    if (!code.contains(w)) {
      return w;
    }
  }
  return std::nullopt;
}

bool is_max_intersection_complete(const Code& code) { return !missing_max_intersection(code).has_value(); }

DoubletReport is_doublet_maximal(const Code& code) {
  const Code maximal = maximal_codewords(code);
  DoubletReport report;
  std::vector<int> degree(maximal.size(), 0);
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      if (!(maximal[i] & maximal[j]).empty()) {
        report.pairs.emplace_back(maximal[i], maximal[j]);
        ++degree[i];
        ++degree[j];
      }
    }
  }
  report.doublet = std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 1; });
  return report;
}

std::vector<ObstructionWitness> find_dim1_obstructions(const Code& code) {
  std::vector<ObstructionWitness> out;
  const int n = code.n();
  auto single = [](int i) { return Codeword(std::uint64_t{1} << (i - 1)); };

  for (int i = 1; i <= n; ++i) {
    if (!code.contains(single(i))) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (!code.contains(single(j))) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!code.contains(single(k))) continue;
        const Codeword triple = single(i) | single(j) | single(k);
        const std::vector<Codeword> singles{single(i), single(j), single(k)};

        auto holder = std::find_if(code.begin(), code.end(), [&](Codeword w) { return triple.subset_of(w); });
        if (holder != code.end()) {
          std::vector<Codeword> ws = singles;
          ws.push_back(*holder);
          out.push_back({ObstructionKind::TripleInMaximal, {i, j, k}, std::move(ws)});
        }

        // sigma_ab contains a and b but not the remaining neuron of the triple.
        auto pair_word = [&](int a, int b, int excluded) -> std::optional<Codeword> {
          const Codeword need = single(a) | single(b);
          for (Codeword w : code) {
            if (need.subset_of(w) && !w.contains(excluded)) {
              return w;
            }
          }
          return std::nullopt;
        };
        auto ij = pair_word(i, j, k);
        auto ik = pair_word(i, k, j);
        auto jk = pair_word(j, k, i);
        if (ij && ik && jk) {
          std::vector<Codeword> ws = singles;
          ws.insert(ws.end(), {*ij, *ik, *jk});
          out.push_back({ObstructionKind::TriplePairwise, {i, j, k}, std::move(ws)});
        }
      }
    }
  }
  return out;
}

const char* to_string(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::TripleInMaximal:
      return "triple-in-codeword";
    case ObstructionKind::TriplePairwise:
      return "triple-pairwise";
  }
  return "unknown";
}

}  // namespace ncode
