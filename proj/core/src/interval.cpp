#include "ncode/interval.hpp"

#include "ncode/codeword.hpp"
#include "ncode/error.hpp"

namespace ncode {

Interval1D::Interval1D(Rational a, Rational b, bool left_closed, bool right_closed)
    : empty_(false), a_(std::move(a)), b_(std::move(b)), left_closed_(left_closed), right_closed_(right_closed) {
  if (a_ > b_) {
    throw InvalidRealization("interval endpoints out of order: " + format_rational(a_) + " > " + format_rational(b_));
  }
  if (a_ == b_ && !(left_closed_ && right_closed_)) {
    throw InvalidRealization("degenerate interval at " + format_rational(a_) + " must be closed on both ends");
  }
}

bool Interval1D::contains(const Rational& x) const {
  if (empty_) {
    return false;
  }
  const bool after_left = left_closed_ ? x >= a_ : x > a_;
  const bool before_right = right_closed_ ? x <= b_ : x < b_;
  return after_left && before_right;
}

std::string to_string(const Interval1D& interval) {
  if (interval.is_empty()) {
    return "empty";
  }
  std::string out = interval.left_closed() ? "[" : "(";
  out += format_rational(interval.a());
  out += ", ";
  out += format_rational(interval.b());
  out += interval.right_closed() ? "]" : ")";
  return out;
}

std::string_view to_string(RealizationMode mode) {
  switch (mode) {
    case RealizationMode::Open:
      return "open";
    case RealizationMode::Closed:
      return "closed";
    case RealizationMode::Convex:
      return "convex";
  }
  return "unknown";
}

RealizationMode parse_mode(std::string_view text) {
  if (text == "open") return RealizationMode::Open;
  if (text == "closed") return RealizationMode::Closed;
  if (text == "convex") return RealizationMode::Convex;
  throw ParseError("unknown realization mode '" + std::string(text) + "'");
}

Realization1D::Realization1D(RealizationMode mode, std::vector<Interval1D> intervals)
    : mode_(mode), intervals_(std::move(intervals)) {
  if (intervals_.empty() || intervals_.size() > static_cast<std::size_t>(kMaxNeurons)) {
    throw InvalidRealization("a realization needs between 1 and 64 intervals");
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const Interval1D& iv = intervals_[i];
    if (iv.is_empty()) {
      continue;
    }
    const std::string where = "interval " + std::to_string(i + 1) + " " + to_string(iv);
    if (mode_ == RealizationMode::Open && (iv.left_closed() || iv.right_closed())) {
      throw InvalidRealization(where + " is not open");
    }
    if (mode_ == RealizationMode::Closed && !(iv.left_closed() && iv.right_closed())) {
      throw InvalidRealization(where + " is not closed");
    }
  }
}

nlohmann::json realization_to_json(const Realization1D& realization) {
  nlohmann::json intervals = nlohmann::json::array();
  for (const Interval1D& iv : realization.intervals()) {
    if (iv.is_empty()) {
      intervals.push_back("empty");
    } else {
      intervals.push_back({{"a", format_rational(iv.a())},
                           {"b", format_rational(iv.b())},
                           {"lc", iv.left_closed()},
                           {"rc", iv.right_closed()}});
    }
  }
  return {{"n", realization.n()}, {"mode", std::string(to_string(realization.mode()))}, {"intervals", intervals}};
}

Realization1D realization_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("intervals")) {
    throw ParseError("realization JSON needs \"mode\" and \"intervals\"");
  }
  if (!j.at("mode").is_string()) {
    throw ParseError("\"mode\" must be a string");
  }
  const RealizationMode mode = parse_mode(j.at("mode").get<std::string>());
  const auto& list = j.at("intervals");
  if (!list.is_array()) {
    throw ParseError("\"intervals\" must be an array");
  }
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<std::size_t>() != list.size())) {
    throw ParseError("\"n\" does not match the number of intervals");
  }
  std::vector<Interval1D> intervals;
  for (const auto& entry : list) {
    if (entry.is_string() && entry.get<std::string>() == "empty") {
      intervals.push_back(Interval1D::empty());
      continue;
    }
    if (!entry.is_object() || !entry.contains("a") || !entry.contains("b")) {
      throw ParseError("interval entries need \"a\" and \"b\" (or the string \"empty\")");
    }
    auto endpoint = [&](const char* key) {
      const auto& v = entry.at(key);
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<long long>());
      throw ParseError(std::string("endpoint \"") + key + "\" must be a \"p/q\" string");
    };
    auto flag = [&](const char* key, bool fallback) {
      if (!entry.contains(key)) return fallback;
      if (!entry.at(key).is_boolean()) throw ParseError(std::string("\"") + key + "\" must be a boolean");
      return entry.at(key).get<bool>();
    };
    // Missing flags default to the mode's natural closure.
    const bool natural = mode != RealizationMode::Open;
    intervals.emplace_back(endpoint("a"), endpoint("b"), flag("lc", natural), flag("rc", natural));
  }
  return Realization1D(mode, std::move(intervals));
}

}  // namespace ncode
