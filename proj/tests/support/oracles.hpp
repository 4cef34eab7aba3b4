#pragma once

// Slow reference implementations written against the definitions, sharing no
// code paths with the library beyond its value types.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ncode/code.hpp"
#include "ncode/interval.hpp"

namespace oracle {

using Word = std::vector<int>;
using WordSet = std::set<Word>;

inline WordSet words_of(const ncode::Code& code) {
  WordSet out;
  for (ncode::Codeword w : code) {
    if (!w.empty()) out.insert(w.neurons());
  }
  return out;
}

inline bool strictly_inside(const Word& small, const Word& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Word meet(const Word& x, const Word& y) {
  Word out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

inline WordSet maximal(const WordSet& words) {
  WordSet out;
  for (const Word& w : words) {
    bool covered = false;
    for (const Word& v : words) covered = covered || strictly_inside(w, v);
    if (!covered) out.insert(w);
  }
  return out;
}

/// Every non-empty intersection of a non-empty family, grown pairwise to a fixpoint.
inline WordSet intersection_closure(const WordSet& words) {
  WordSet out = words;
  bool grew = true;
  while (grew) {
    grew = false;
    const WordSet snapshot = out;
    for (const Word& x : snapshot) {
      for (const Word& y : snapshot) {
        Word z = meet(x, y);
        if (!z.empty() && out.insert(z).second) grew = true;
      }
    }
  }
  return out;
}

inline bool mic(const WordSet& words) {
  for (const Word& w : intersection_closure(maximal(words))) {
    if (!words.contains(w)) return false;
  }
  return true;
}

inline bool member(const ncode::Interval1D& u, const ncode::Rational& x) {
  if (u.is_empty()) return false;
  const bool left = u.left_closed() ? u.a() <= x : u.a() < x;
  const bool right = u.right_closed() ? x <= u.b() : x < u.b();
  return left && right;
}

/// C(U) by probing every endpoint, every midpoint between neighbouring
/// endpoints and one point beyond each end.
inline WordSet code_by_sampling(const ncode::Realization1D& realization) {
  std::vector<ncode::Rational> ends;
  for (const ncode::Interval1D& u : realization.intervals()) {
    if (u.is_empty()) continue;
    ends.push_back(u.a());
    ends.push_back(u.b());
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<ncode::Rational> probes;
  if (!ends.empty()) {
    probes.push_back(ends.front() - 1);
    probes.push_back(ends.back() + 1);
  }
  for (std::size_t t = 0; t < ends.size(); ++t) {
    probes.push_back(ends[t]);
    if (t + 1 < ends.size()) probes.push_back((ends[t] + ends[t + 1]) / 2);
  }
  WordSet out;
  for (const ncode::Rational& x : probes) {
    Word w;
    for (int i = 1; i <= realization.n(); ++i) {
      if (member(realization.interval(i), x)) w.push_back(i);
    }
    if (!w.empty()) out.insert(w);
  }
  return out;
}

struct Census {
  std::uint64_t total = 0;
  std::uint64_t bpm = 0;
  std::uint64_t um = 0;
  std::uint64_t other = 0;
};

/// Walks all m^m index functions. phi(rho_i) is the sum of rho_k over k with
/// f(k) = i; phi(x_j) is the F2 sum of phi(rho_i) over codewords c_i holding j.
inline Census census(const ncode::Code& code) {
  const int m = static_cast<int>(code.size());
  const int n = code.n();
  using Vec = std::vector<int>;
  std::vector<Vec> xs;
  for (int j = 1; j <= n; ++j) {
    Vec x(m, 0);
    for (int i = 0; i < m; ++i) x[i] = code[static_cast<std::size_t>(i)].contains(j) ? 1 : 0;
    xs.push_back(x);
  }
  std::vector<Vec> allowed = xs;
  allowed.push_back(Vec(m, 0));
  allowed.push_back(Vec(m, 1));

  Census out;
  std::vector<int> f(m, 0);
  while (true) {
    std::vector<Vec> image_of_rho(m, Vec(m, 0));
    for (int k = 0; k < m; ++k) image_of_rho[f[k]][k] = 1;
    bool neural = true;
    for (const Vec& x : xs) {
      Vec y(m, 0);
      for (int i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (int k = 0; k < m; ++k) y[k] ^= image_of_rho[i][k];
      }
      if (std::find(allowed.begin(), allowed.end(), y) == allowed.end()) {
        neural = false;
        break;
      }
    }
    if (neural) {
      ++out.total;
      std::vector<int> sorted = f;
      std::sort(sorted.begin(), sorted.end());
      const bool bijective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      const bool constant = sorted.front() == sorted.back();
      if (bijective) {
        ++out.bpm;
      } else if (constant) {
        ++out.um;
      } else {
        ++out.other;
      }
    }
    int pos = 0;
    while (pos < m && ++f[pos] == m) f[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

inline std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace oracle
