#include "ncode/cli/report.hpp"

#include <cstdlib>
#include <sstream>

#include "ncode/error.hpp"

namespace ncode::cli {

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return "text";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Markdown:
      return "markdown";
  }
  return "text";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  throw ParseError("unknown output format '" + std::string(text) + "'");
}

int default_workers() {
  const char* env = std::getenv("NCODE_WORKERS");
  if (env == nullptr) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
  return static_cast<int>(v);
}

nlohmann::json config_to_json(const RunConfig& c) {
  return {{"seed", c.seed},
          {"workers", c.workers},
          {"search_cap", c.search_cap},
          {"census_cap", c.census_cap},
          {"format", std::string(to_string(c.format))},
          {"frontier", c.frontier},
          {"epsilon_include_self", c.epsilon_include_self},
          {"n_min", c.n_min},
          {"n_max", c.n_max},
          {"trials", c.trials}};
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.seed = j.value("seed", c.seed);
  c.workers = j.value("workers", c.workers);
  c.search_cap = j.value("search_cap", c.search_cap);
  c.census_cap = j.value("census_cap", c.census_cap);
  c.format = parse_format(j.value("format", std::string("text")));
  c.frontier = j.value("frontier", c.frontier);
  c.epsilon_include_self = j.value("epsilon_include_self", c.epsilon_include_self);
  c.n_min = j.value("n_min", c.n_min);
  c.n_max = j.value("n_max", c.n_max);
  c.trials = j.value("trials", c.trials);
  return c;
}

bool Report::passed() const {
  for (const Check& c : checks) {
    if (!c.informational && !c.passed) return false;
  }
  return true;
}

nlohmann::json check_to_json(const Check& c) {
  return {{"name", c.name},           {"citation", c.citation}, {"passed", c.passed},
          {"informational", c.informational}, {"detail", c.detail},     {"elapsed_ms", c.elapsed_ms}};
}

Check check_from_json(const nlohmann::json& j) {
  try {
    Check c;
    c.name = j.at("name").get<std::string>();
    c.citation = j.at("citation").get<std::string>();
    c.passed = j.at("passed").get<bool>();
    c.informational = j.value("informational", false);
    c.detail = j.value("detail", nlohmann::json::object());
    c.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed check JSON: ") + e.what());
  }
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : r.checks) checks.push_back(check_to_json(c));
  return {{"command", r.command}, {"config", config_to_json(r.config)}, {"results", r.results},
          {"checks", checks},     {"passed", r.passed()},               {"elapsed_ms", r.elapsed_ms}};
}

Report report_from_json(const nlohmann::json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.config = config_from_json(j.value("config", nlohmann::json::object()));
    r.results = j.value("results", nlohmann::json::object());
    for (const auto& c : j.value("checks", nlohmann::json::array())) r.checks.push_back(check_from_json(c));
    r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

namespace {

void strip_timing(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) strip_timing(value);
  }
}

bool is_table(const std::string& key) { return key.size() > 9 && key.ends_with("_markdown"); }

bool is_table_json(const std::string& key) { return key.size() > 6 && key.ends_with("_table"); }

std::string status_word(const Check& c) {
  if (c.informational) return "INFO";
  return c.passed ? "PASS" : "FAIL";
}

std::string scalar_text(const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

nlohmann::json canonical_json(const Report& report) {
  nlohmann::json j = report_to_json(report);
  strip_timing(j);
  return j;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "ncode " << r.command << "\n";
  if (r.results.is_object()) {
    for (const auto& [key, value] : r.results.items()) {
      if (is_table(key)) {
        out << "\n" << value.get<std::string>() << "\n";
      } else if (!is_table_json(key)) {
        out << "  " << key << ": " << scalar_text(value) << "\n";
      }
    }
  }
  if (!r.checks.empty()) out << "\n";
  std::size_t failed = 0;
  for (const Check& c : r.checks) {
    if (!c.informational && !c.passed) ++failed;
    out << status_word(c) << "  " << c.name << "  [" << c.citation << "]";
    if (!c.passed || c.informational) {
      if (c.detail.contains("summary")) out << "  " << scalar_text(c.detail["summary"]);
    }
    out << "\n";
  }
  out << "\n" << r.checks.size() << " checks, " << failed << " failed, " << r.elapsed_ms << " ms\n";
  return out.str();
}

std::string render_markdown(const Report& r) {
  std::ostringstream out;
  out << "# ncode " << r.command << "\n\n";
  nlohmann::json rest = nlohmann::json::object();
  if (r.results.is_object()) {
    for (const auto& [key, value] : r.results.items()) {
      if (is_table(key)) {
        out << value.get<std::string>() << "\n";
      } else if (!is_table_json(key)) {
        rest[key] = value;
      }
    }
  }
  if (!rest.empty()) out << "```json\n" << rest.dump(2) << "\n```\n\n";
  if (!r.checks.empty()) {
    out << "| check | claim | status | summary |\n|---|---|---|---|\n";
    for (const Check& c : r.checks) {
      const std::string summary = c.detail.contains("summary") ? scalar_text(c.detail["summary"]) : "";
      out << "| " << c.name << " | " << c.citation << " | " << status_word(c) << " | " << summary << " |\n";
    }
    out << "\n";
  }
  out << "Overall: " << (r.passed() ? "pass" : "fail") << " (" << r.elapsed_ms << " ms)\n";
  return out.str();
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return report_to_json(report).dump(2) + "\n";
    case OutputFormat::Markdown:
      return render_markdown(report);
    case OutputFormat::Text:
      break;
  }
  return render_text(report);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t battery) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(battery), static_cast<std::uint32_t>(battery >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace ncode::cli
