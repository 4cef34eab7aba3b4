#pragma once

#include <random>

#include "ncode/code.hpp"
#include "ncode/code_map.hpp"
#include "ncode/interval.hpp"

namespace ncode::cli {

using Rng = std::mt19937_64;

/// Each non-empty word on n neurons joins with probability `density`;
/// redrawn until the code is non-empty. Words in ascending mask order.
Code random_code(Rng& rng, int n, double density = 0.3);

/// random_code closed under intersections of its maximal codewords.
Code random_mic_code(Rng& rng, int n, double density = 0.3);

/// Every non-empty code on n neurons (2^(2^n - 1) - 1 of them), n <= 4.
std::vector<Code> all_codes(int n);

/// Open or Closed realization on n neurons with endpoints in halves on
/// [0, n + 2]; some intervals empty, Closed ones sometimes singletons. At
/// least one interval is non-empty.
Realization1D random_realization(Rng& rng, int n, RealizationMode mode);

/// Uniform over the five kinds; deletions only when n >= 2. Inclusion targets
/// add a few random words to `code`.
ElementaryMap random_elementary_map(Rng& rng, const Code& code);

/// A map `code` onto its image that is surjective in the declared sense:
/// inclusions target `code` itself.
ElementaryMap random_surjective_map(Rng& rng, const Code& code);

/// Permutation, addition of a trivial or duplicate neuron, or deletion of a
/// trivial or duplicate neuron. For deletions, `code` is first widened with a
/// trivial or duplicate neuron; the code the map applies to is returned
/// alongside.
std::pair<Code, ElementaryMap> random_iso_instance(Rng& rng, const Code& code);

/// Uniform permutation of 0..m-1.
std::vector<int> random_permutation(Rng& rng, int m);

}  // namespace ncode::cli
