#pragma once

#include <optional>

#include "ncode/cli/report.hpp"
#include "ncode/code.hpp"
#include "ncode/code_map.hpp"
#include "ncode/interval.hpp"

namespace ncode::cli {

/// Maximal codewords, their intersection completion, max-intersection and
/// doublet verdicts, and dimension-1 obstruction witnesses.
Report cmd_analyze(const Code& code, const RunConfig& config);

/// Exhaustive search on the line; a found realization is re-checked with
/// code_of before it is reported. Throws CapacityError above the cap.
Report cmd_realize(const Code& code, RealizationMode mode, const RunConfig& config);

Report cmd_atoms(const Realization1D& realization, const RunConfig& config);

/// Open -> closed or closed -> open, reporting the code before and after and
/// the new epsilon. Throws ModeMismatch when the input has the target mode.
Report cmd_convert(const Realization1D& realization, RealizationMode to, const RunConfig& config);

Report cmd_map_apply(const CodeMap& map, const Code& code, const RunConfig& config);

/// Census of `code`, or of the circulant code (n, p) when no code is given.
/// A circulant code is compared with its predicted count.
Report cmd_census(const std::optional<Code>& code, int n, int p, bool prune, const RunConfig& config);

}  // namespace ncode::cli
