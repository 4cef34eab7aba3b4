#pragma once

#include <cstdint>
#include <optional>

#include "ncode/code.hpp"
#include "ncode/interval.hpp"

namespace ncode {

struct SearchOptions {
  /// Largest neuron count accepted; larger codes raise CapacityError.
  int cap = 4;
  int workers = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Exhaustive dimension-1 realizability decider.
///
/// Endpoints are placed on integer levels 1..2n with ties (every weak order of
/// the 2n endpoints) and every closure-flag assignment allowed by `mode`. The
/// empty codeword is ignored on both sides; neurons outside every codeword get
/// the empty interval. Returns the first realization in enumeration order whose
/// code equals C, independent of the worker count, or nullopt when none exists.
std::optional<Realization1D> search_realization_1d(const Code& code, RealizationMode mode,
                                                   const SearchOptions& options = {},
                                                   SearchStats* stats = nullptr);

}  // namespace ncode
