#include "ncode/cli/figures.hpp"

#include "ncode/code_io.hpp"

namespace ncode::cli {

namespace {

Interval1D open(int an, int ad, int bn, int bd) { return Interval1D::open(Rational(an, ad), Rational(bn, bd)); }

}  // namespace

Realization1D figmip_realization() {
  return Realization1D(RealizationMode::Open, {open(5, 2, 6, 1), open(3, 1, 9, 2), open(7, 4, 7, 2),
                                               open(4, 1, 9, 1), open(5, 1, 10, 1)});
}

Code figmip_code() { return parse_compact(5, "3 5 12 13 14 45 123 124 145"); }

Realization1D ex2_realization() {
  return Realization1D(RealizationMode::Open, {open(5, 2, 7, 2), open(5, 2, 5, 1), open(7, 2, 5, 1),
                                               open(6, 1, 10, 1), open(6, 1, 15, 2), open(15, 2, 10, 1)});
}

Code ex2_code() { return parse_compact(6, "2 4 12 23 45 46"); }

Code obstruction_triple_in_maximal() { return parse_compact(4, "1 2 3 1234"); }

Code obstruction_triple_pairwise() { return parse_compact(5, "1 2 3 124 23 135"); }

Code convexity_counterexample() { return parse_compact(3, "12 23"); }

}  // namespace ncode::cli
