#include "ncode/transform.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "ncode/arrangement.hpp"
#include "ncode/error.hpp"

namespace ncode {

namespace {

void require_mode(const Realization1D& u, RealizationMode mode, const char* op) {
  if (u.mode() != mode) {
    throw ModeMismatch(std::string(op) + " expects " + std::string(mode == RealizationMode::Open ? "an" : "a") + " " + std::string(to_string(mode)) + " realization, got " +
                       std::string(to_string(u.mode())));
  }
}

std::set<Rational> endpoints_of(const std::vector<Interval1D>& ivs, std::size_t skip = SIZE_MAX) {
  std::set<Rational> out;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (i == skip || ivs[i].is_empty()) continue;
    out.insert(ivs[i].a());
    out.insert(ivs[i].b());
  }
  return out;
}

std::optional<Rational> largest_below(const std::set<Rational>& points, const Rational& x) {
  auto it = points.lower_bound(x);
  if (it == points.begin()) return std::nullopt;
  return *std::prev(it);
}

std::optional<Rational> smallest_above(const std::set<Rational>& points, const Rational& x) {
  auto it = points.upper_bound(x);
  if (it == points.end()) return std::nullopt;
  return *it;
}

bool any_ends_at(const std::vector<Interval1D>& ivs, const Rational& x, std::size_t except) {
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (i != except && !ivs[i].is_empty() && ivs[i].b() == x) return true;
  }
  return false;
}

bool any_starts_at(const std::vector<Interval1D>& ivs, const Rational& x, std::size_t except) {
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (i != except && !ivs[i].is_empty() && ivs[i].a() == x) return true;
  }
  return false;
}

// The no-pair sentinel: with no admissible pair any positive epsilon works, so use 1.
Rational conversion_epsilon(const Realization1D& u) {
  const auto eps = epsilon_distance(u, EpsilonPairs::IncludeSelf);
  return eps ? *eps : Rational(1);
}

bool positive_epsilon(const Realization1D& u) {
  auto eps = epsilon_distance(u);
  return !eps || *eps > 0;
}

}  // namespace

Realization1D normalize_open_epsilon(const Realization1D& realization) {
  require_mode(realization, RealizationMode::Open, "normalize_open_epsilon");
  if (positive_epsilon(realization)) {
    return realization;
  }
  const auto& ivs = realization.intervals();
  const std::set<Rational> points = endpoints_of(ivs);
  std::vector<Interval1D> out = ivs;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const Interval1D& iv = ivs[i];
    if (iv.is_empty() || !any_starts_at(ivs, iv.b(), i)) continue;
    // Largest endpoint in [a_i, b_i); a_i itself always qualifies.
    Rational delta;
    auto below = largest_below(points, iv.b());
    if (below && *below >= iv.a()) {
      delta = (iv.b() - *below) / 2;
    } else {
      delta = (iv.b() - iv.a()) / 4;
    }
    out[i] = Interval1D::open(iv.a(), iv.b() - delta);
  }
  return Realization1D(RealizationMode::Open, std::move(out));
}

Realization1D desingularize_closed(const Realization1D& realization) {
  require_mode(realization, RealizationMode::Closed, "desingularize_closed");
  std::vector<Interval1D> ivs = realization.intervals();

  for (;;) {
    auto it = std::find_if(ivs.begin(), ivs.end(), [](const Interval1D& iv) { return iv.is_singleton(); });
    if (it == ivs.end()) break;
    const auto j = static_cast<std::size_t>(it - ivs.begin());
    const Rational x = ivs[j].a();

    std::vector<std::size_t> starters, enders, points;
    for (std::size_t k = 0; k < ivs.size(); ++k) {
      if (k == j || ivs[k].is_empty()) continue;
      if (ivs[k].is_singleton()) {
        if (ivs[k].a() == x) points.push_back(k);
      } else if (ivs[k].a() == x) {
        starters.push_back(k);
      } else if (ivs[k].b() == x) {
        enders.push_back(k);
      }
    }
    const std::set<Rational> others = endpoints_of(ivs, j);
    const auto below = largest_below(others, x);
    const auto above = smallest_above(others, x);

    if (starters.empty() && enders.empty() && points.empty()) {
      // x touches no boundary: grow symmetrically inside its constant-membership neighbourhood.
      Rational gap{2};
      if (below) gap = x - *below;
      if (above) gap = std::min(gap, Rational(*above - x));
      const Rational delta = gap / 2;
      ivs[j] = Interval1D::closed(x - delta, x + delta);
    } else if (points.empty() && starters.empty()) {
      // Every interval touching x ends there (below exists: their left ends are < x).
      ivs[j] = Interval1D::closed(x - (x - *below) / 2, x);
    } else if (points.empty() && enders.empty()) {
      ivs[j] = Interval1D::closed(x, x + (*above - x) / 2);
    } else {
      // Mixed boundary: pull the starters and the other singletons left together with {x}.
      const Rational delta = below ? (x - *below) / 2 : Rational(1);
      const Rational left = x - delta;
      for (std::size_t k : starters) ivs[k] = Interval1D::closed(left, ivs[k].b());
      for (std::size_t k : points) ivs[k] = Interval1D::closed(left, x);
      ivs[j] = Interval1D::closed(left, x);
    }
  }
  return Realization1D(RealizationMode::Closed, std::move(ivs));
}

Realization1D normalize_closed_epsilon(const Realization1D& realization) {
  require_mode(realization, RealizationMode::Closed, "normalize_closed_epsilon");
  const Realization1D smooth = desingularize_closed(realization);
  if (positive_epsilon(smooth)) {
    return smooth;
  }
  const auto& ivs = smooth.intervals();
  const std::set<Rational> points = endpoints_of(ivs);
  std::vector<Interval1D> out = ivs;
  for (std::size_t j = 0; j < ivs.size(); ++j) {
    const Interval1D& iv = ivs[j];
    if (iv.is_empty() || !any_ends_at(ivs, iv.a(), j)) continue;
    auto below = largest_below(points, iv.a());
    const Rational delta = below ? (iv.a() - *below) / 2 : (iv.b() - iv.a()) / 4;
    out[j] = Interval1D::closed(iv.a() - delta, iv.b());
  }
  return Realization1D(RealizationMode::Closed, std::move(out));
}

Realization1D open_to_closed(const Realization1D& realization) {
  require_mode(realization, RealizationMode::Open, "open_to_closed");
  const Realization1D normal = normalize_open_epsilon(realization);
  const Rational shift = conversion_epsilon(normal) / 3;
  std::vector<Interval1D> out;
  out.reserve(normal.intervals().size());
  for (const Interval1D& iv : normal.intervals()) {
    if (iv.is_empty()) {
      out.push_back(iv);
      continue;
    }
    if (iv.b() - iv.a() <= 2 * shift) {
      throw InvalidRealization("interval too short for the epsilon/3 shrink");
    }
    out.push_back(Interval1D::closed(iv.a() + shift, iv.b() - shift));
  }
  return Realization1D(RealizationMode::Closed, std::move(out));
}

Realization1D closed_to_open(const Realization1D& realization) {
  require_mode(realization, RealizationMode::Closed, "closed_to_open");
  const Realization1D normal = normalize_closed_epsilon(realization);
  const Rational shift = conversion_epsilon(normal) / 3;
  std::vector<Interval1D> out;
  out.reserve(normal.intervals().size());
  for (const Interval1D& iv : normal.intervals()) {
    if (iv.is_empty()) {
      out.push_back(iv);
      continue;
    }
    out.push_back(Interval1D::open(iv.a() - shift, iv.b() + shift));
  }
  return Realization1D(RealizationMode::Open, std::move(out));
}

}  // namespace ncode
