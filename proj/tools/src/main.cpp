#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ncode/cli/batteries.hpp"
#include "ncode/cli/commands.hpp"
#include "ncode/code_io.hpp"
#include "ncode/code_map.hpp"
#include "ncode/error.hpp"

namespace {

using namespace ncode;
using namespace ncode::cli;

Realization1D read_realization(const std::string& path) {
  try {
    return realization_from_json(nlohmann::json::parse(read_text_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CodeMap read_map(const std::string& path) {
  try {
    return map_from_json(nlohmann::json::parse(read_text_file(path)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neural code analysis: realizations on the line, code maps, neural ring endomorphisms"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.workers = default_workers();
  std::string format = "text";
  bool json = false;
  app.add_option("--format", format, "Output format: text, json or markdown")->check(CLI::IsMember({"text", "json", "markdown"}));
  app.add_flag("--json", json, "Same as --format json");
  app.add_option("--seed", config.seed, "Root seed for randomized batteries")->capture_default_str();
  app.add_option("--workers", config.workers, "Worker threads (default: NCODE_WORKERS or 1)")->check(CLI::PositiveNumber);
  app.add_flag("--epsilon-include-self", config.epsilon_include_self,
               "Report epsilon over all endpoint pairs including an interval with itself");

  std::string file;
  std::string mode = "open";
  auto* analyze = app.add_subcommand("analyze", "Maximal codewords, max-intersection and doublet verdicts, obstructions");
  analyze->add_option("file", file, "Code file (text or JSON)")->required();

  auto* realize = app.add_subcommand("realize", "Exhaustive search for a realization on the line");
  realize->add_option("--mode", mode, "open, closed or convex")->check(CLI::IsMember({"open", "closed", "convex"}));
  realize->add_option("--cap", config.search_cap, "Largest neuron count searched")->capture_default_str();
  realize->add_option("file", file, "Code file")->required();

  auto* atoms = app.add_subcommand("atoms", "Atoms of a realization");
  atoms->add_option("realization", file, "Realization JSON file")->required();

  std::string to = "closed";
  auto* convert = app.add_subcommand("convert", "Convert an open realization to a closed one or back");
  convert->add_option("--to", to, "open or closed")->required()->check(CLI::IsMember({"open", "closed"}));
  convert->add_option("realization", file, "Realization JSON file")->required();

  std::string spec_file;
  auto* map = app.add_subcommand("map", "Code maps");
  map->require_subcommand(1);
  auto* map_apply = map->add_subcommand("apply", "Apply a composition of elementary code maps");
  map_apply->add_option("--spec", spec_file, "Map description JSON")->required();
  map_apply->add_option("file", file, "Code file")->required();

  int n = 0;
  int p = 0;
  bool prune = false;
  std::string code_file;
  auto* census = app.add_subcommand("census", "Count the neural ring endomorphisms of a code");
  census->add_option("--n", n, "Neurons of the circulant code");
  census->add_option("--p", p, "Support of the circulant code");
  census->add_option("--code", code_file, "Census this code instead of a circulant code");
  census->add_flag("--prune", prune, "Norm pruning (circulant codes only)");
  census->add_option("--cap", config.census_cap, "Largest code size for a plain census")->capture_default_str();

  std::string suite = "all";
  std::string out_prefix;
  auto* verify = app.add_subcommand("verify", "Run the verification batteries");
  verify->add_option("suite", suite, "realization, maps, ring, circulant or all")
      ->check(CLI::IsMember({"realization", "maps", "ring", "circulant", "all"}));
  verify->add_flag("--frontier", config.frontier, "Add the conjecture cells (7,4) and (10,5)");
  verify->add_option("--n-min", config.n_min, "Smallest n of the circulant table")->capture_default_str();
  verify->add_option("--n-max", config.n_max, "Largest n of the circulant table")->capture_default_str();
  verify->add_option("--trials", config.trials, "Randomized trials per battery (0 keeps defaults)");
  verify->add_option("--cap", config.search_cap, "Neuron cap for the line search")->capture_default_str();
  verify->add_option("--out", out_prefix, "Also write <prefix>.md and <prefix>.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  config.format = json ? OutputFormat::Json : parse_format(format);

  try {
    Report report;
    if (*analyze) {
      report = cmd_analyze(read_code_file(file), config);
    } else if (*realize) {
      report = cmd_realize(read_code_file(file), parse_mode(mode), config);
    } else if (*atoms) {
      report = cmd_atoms(read_realization(file), config);
    } else if (*convert) {
      report = cmd_convert(read_realization(file), parse_mode(to), config);
    } else if (*map_apply) {
      report = cmd_map_apply(read_map(spec_file), read_code_file(file), config);
    } else if (*census) {
      std::optional<Code> code;
      if (!code_file.empty()) {
        code = read_code_file(code_file);
      } else if (n < 2 || p < 1) {
        throw ParseError("census needs --code or both --n and --p");
      }
      report = cmd_census(code, n, p, prune, config);
    } else if (*verify) {
      report = cmd_verify(suite, config);
      if (!out_prefix.empty()) {
        write_file(out_prefix + ".md", render_markdown(report));
        write_file(out_prefix + ".json", report_to_json(report).dump(2) + "\n");
      }
    }
    std::cout << render(report, config.format);
    return report.exit_code();
  } catch (const ParseError& e) {
    std::cerr << "ncode: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "ncode: " << e.what() << "\n";
    return 2;
  }
}
