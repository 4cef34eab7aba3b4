#pragma once

#include <chrono>

#include "ncode/cli/report.hpp"

namespace ncode::cli {

template <class F>
Check timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Check c = body();
  c.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace ncode::cli
