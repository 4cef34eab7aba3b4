#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncode/rational.hpp"

namespace ncode {

/// A convex subset of the real line with exact endpoints, or the empty set.
class Interval1D {
 public:
  /// Throws InvalidRealization unless a < b, or a == b with both ends closed.
  Interval1D(Rational a, Rational b, bool left_closed, bool right_closed);

  static Interval1D empty() { return Interval1D(); }
  static Interval1D open(Rational a, Rational b) { return {std::move(a), std::move(b), false, false}; }
  static Interval1D closed(Rational a, Rational b) { return {std::move(a), std::move(b), true, true}; }
  static Interval1D point(const Rational& x) { return {x, x, true, true}; }

  bool is_empty() const noexcept { return empty_; }
  bool is_singleton() const noexcept { return !empty_ && a_ == b_; }

  /// Endpoint accessors are meaningless on the empty interval.
  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool left_closed() const noexcept { return left_closed_; }
  bool right_closed() const noexcept { return right_closed_; }

  bool contains(const Rational& x) const;

  friend bool operator==(const Interval1D&, const Interval1D&) = default;

 private:
  Interval1D() = default;

  bool empty_ = true;
  Rational a_{0};
  Rational b_{0};
  bool left_closed_ = false;
  bool right_closed_ = false;
};

/// "(5/2, 6/1)", "[1/1, 1/1]", "empty".
std::string to_string(const Interval1D& interval);

enum class RealizationMode { Open, Closed, Convex };

std::string_view to_string(RealizationMode mode);
/// "open" | "closed" | "convex"; throws ParseError otherwise.
RealizationMode parse_mode(std::string_view text);

/// One interval per neuron. The empty set is allowed in every mode; it stands
/// for a neuron that fires in no codeword.
class Realization1D {
 public:
  /// Throws InvalidRealization when a non-empty interval breaks the mode:
  /// Open needs both ends open (so a < b), Closed needs both ends closed.
  Realization1D(RealizationMode mode, std::vector<Interval1D> intervals);

  int n() const noexcept { return static_cast<int>(intervals_.size()); }
  RealizationMode mode() const noexcept { return mode_; }
  const std::vector<Interval1D>& intervals() const noexcept { return intervals_; }
  /// 1-based neuron index.
  const Interval1D& interval(int neuron) const { return intervals_.at(static_cast<std::size_t>(neuron - 1)); }

  friend bool operator==(const Realization1D&, const Realization1D&) = default;

 private:
  RealizationMode mode_;
  std::vector<Interval1D> intervals_;
};

/// { "n": int, "mode": "open"|"closed"|"convex",
///   "intervals": [ {"a": "p/q", "b": "p/q", "lc": bool, "rc": bool} | "empty", ... ] }
nlohmann::json realization_to_json(const Realization1D& realization);
/// Throws ParseError on malformed JSON, InvalidRealization on invariant violations.
Realization1D realization_from_json(const nlohmann::json& j);

}  // namespace ncode
