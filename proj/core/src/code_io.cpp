#include "ncode/code_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "ncode/error.hpp"

namespace ncode {

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) {
    s.remove_prefix(1);
  }
  while (!s.empty() && is_space(s.back())) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_bit_string(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<int> parse_header(std::string_view line) {
  if (line.empty() || line.front() != 'n') {
    return std::nullopt;
  }
  std::string_view rest = trim(line.substr(1));
  if (rest.empty() || rest.front() != '=') {
    return std::nullopt;
  }
  return parse_int(trim(rest.substr(1))).value_or(-1);
}

Codeword parse_bits(std::string_view bits) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      mask |= std::uint64_t{1} << i;
    }
  }
  return Codeword(mask);
}

}  // namespace

Code parse_code_text(std::string_view text) {
  std::optional<int> n;
  bool header_allowed = true;
  bool has_header = false;
  std::vector<Codeword> words;
  std::unordered_map<std::uint64_t, std::size_t> first_line;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;

    if (line.empty() || line.front() == '#') {
      continue;
    }
    if (auto header = parse_header(line)) {
      if (!header_allowed) {
        throw ParseError(line_no, "n=<int> header must precede every codeword");
      }
      if (*header < 1 || *header > kMaxNeurons) {
        throw ParseError(line_no, "neuron count must be in 1..64");
      }
      n = *header;
      has_header = true;
      header_allowed = false;
      continue;
    }
    header_allowed = false;

    Codeword word;
    if (line == "-") {
      if (!n) {
        throw ParseError(line_no, "empty codeword '-' needs an n=<int> header or a preceding bit string");
      }
    } else if (is_bit_string(line) && (!n || static_cast<std::size_t>(*n) == line.size())) {
      if (!n) {
        if (line.size() > static_cast<std::size_t>(kMaxNeurons)) {
          throw ParseError(line_no, "bit string longer than 64 neurons");
        }
        n = static_cast<int>(line.size());
      }
      word = parse_bits(line);
    } else {
      if (!has_header) {
        if (is_bit_string(line)) {
          throw ParseError(line_no, "bit string length differs from earlier codewords");
        }
        throw ParseError(line_no, "index-list codewords require an n=<int> header");
      }
      std::istringstream tokens{std::string(line)};
      std::string token;
      std::uint64_t mask = 0;
      while (tokens >> token) {
        auto neuron = parse_int(token);
        if (!neuron) {
          throw ParseError(line_no, "unrecognised token '" + token + "'");
        }
        if (*neuron < 1 || *neuron > *n) {
          throw ParseError(line_no, "neuron " + token + " outside 1.." + std::to_string(*n));
        }
        mask |= std::uint64_t{1} << (*neuron - 1);
      }
      word = Codeword(mask);
    }

    auto [it, inserted] = first_line.emplace(word.mask(), line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate codeword " + to_index_string(word, *n) + " (first seen on line " +
                                    std::to_string(it->second) + ")");
    }
    words.push_back(word);
  }

  if (words.empty()) {
    throw ParseError("code has no codewords");
  }
  return Code(*n, std::move(words));
}

std::string format_code_text(const Code& code) {
  std::string out = "n=" + std::to_string(code.n()) + "\n";
  for (Codeword w : code) {
    out += w.empty() ? std::string("-") : to_bit_string(w, code.n());
    out += '\n';
  }
  return out;
}

nlohmann::json code_to_json(const Code& code) {
  nlohmann::json words = nlohmann::json::array();
  for (Codeword w : code) {
    words.push_back(w.neurons());
  }
  return {{"n", code.n()}, {"words", std::move(words)}};
}

Code code_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("words")) {
    throw ParseError("code JSON needs \"n\" and \"words\"");
  }
  if (!j.at("n").is_number_integer()) {
    throw ParseError("\"n\" must be an integer");
  }
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxNeurons) {
    throw ParseError("neuron count must be in 1..64");
  }
  const auto& list = j.at("words");
  if (!list.is_array() || list.empty()) {
    throw ParseError("\"words\" must be a non-empty array");
  }
  std::vector<Codeword> words;
  for (const auto& entry : list) {
    if (!entry.is_array()) {
      throw ParseError("each word must be an array of neuron indices");
    }
    std::uint64_t mask = 0;
    for (const auto& idx : entry) {
      if (!idx.is_number_integer()) {
        throw ParseError("neuron indices must be integers");
      }
      const int neuron = idx.get<int>();
      if (neuron < 1 || neuron > n) {
        throw ParseError("neuron " + std::to_string(neuron) + " outside 1.." + std::to_string(n));
      }
      mask |= std::uint64_t{1} << (neuron - 1);
    }
    words.emplace_back(mask);
  }
  try {
    return Code(n, std::move(words));
  } catch (const InvalidCode& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Code read_code_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(e.what());
    }
    return code_from_json(j);
  }
  return parse_code_text(text);
}

Code parse_compact(int n, std::string_view words) {
  if (n < 1 || n > 9) {
    throw ParseError("compact notation needs 1 <= n <= 9");
  }
  std::vector<Codeword> out;
  std::istringstream tokens{std::string(words)};
  std::string token;
  while (tokens >> token) {
    if (token == "-") {
      out.emplace_back();
      continue;
    }
    std::uint64_t mask = 0;
    for (char c : token) {
      const int neuron = c - '0';
      if (neuron < 1 || neuron > n) {
        throw ParseError("bad neuron '" + std::string(1, c) + "' in token " + token);
      }
      mask |= std::uint64_t{1} << (neuron - 1);
    }
    out.emplace_back(mask);
  }
  try {
    return Code(n, std::move(out));
  } catch (const InvalidCode& e) {
    throw ParseError(e.what());
  }
}

}  // namespace ncode
