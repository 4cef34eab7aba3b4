#pragma once

#include "ncode/code.hpp"
#include "ncode/interval.hpp"

namespace ncode::cli {

/// Five open intervals on the line whose code has three maximal codewords
/// with pairwise non-empty intersections and is not max-intersection complete.
Realization1D figmip_realization();
/// {3, 5, 12, 13, 14, 45, 123, 124, 145}
Code figmip_code();

/// Six open intervals realizing a doublet maximal, max-intersection complete
/// code in which the atom of codeword 2 is a single point.
Realization1D ex2_realization();
/// {2, 4, 12, 23, 45, 46}
Code ex2_code();

/// {1, 2, 3, 1234}: three singletons inside one maximal codeword.
Code obstruction_triple_in_maximal();
/// {1, 2, 3, 124, 23, 135}: three singletons joined pairwise.
Code obstruction_triple_pairwise();

/// {12, 23}: convex on the line, neither open nor closed convex there.
Code convexity_counterexample();

}  // namespace ncode::cli
