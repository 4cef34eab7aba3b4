#pragma once

#include "ncode/interval.hpp"

namespace ncode {

// Code-preserving rewrites of realizations on the line. Every function throws
// ModeMismatch when handed a realization of the wrong mode, and every one
// leaves code_of(U) unchanged.

/// Open realization with positive distinct-pair epsilon. At every point x
/// where some b_i meets some a_j, each interval ending at x is pulled back by
/// delta, 2*delta = x - (largest endpoint in [a_i, x)). Already-separated
/// realizations are returned unchanged.
Realization1D normalize_open_epsilon(const Realization1D& realization);

/// Closed realization with no singleton sets. A singleton {x} touching no
/// other endpoint grows symmetrically; one sitting on the ends of intervals
/// that all end (or all start) at x grows to that side; otherwise the
/// intervals starting at x, the other singletons at x and {x} itself are all
/// extended left to x - delta.
Realization1D desingularize_closed(const Realization1D& realization);

/// Closed realization, singleton-free, with positive distinct-pair epsilon.
/// Every interval starting where another one ends is extended left by delta,
/// 2*delta = x - (largest endpoint below x).
Realization1D normalize_closed_epsilon(const Realization1D& realization);

/// Open -> closed: normalize, then J_i = [a_i + eps/3, b_i - eps/3] with eps
/// taken over all pairs including i == j.
Realization1D open_to_closed(const Realization1D& realization);

/// Closed -> open: normalize (removing singletons), then
/// I_i = (a_i - eps/3, b_i + eps/3) with eps over all pairs including i == j.
Realization1D closed_to_open(const Realization1D& realization);

}  // namespace ncode
