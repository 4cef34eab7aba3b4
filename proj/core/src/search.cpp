#include "ncode/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "ncode/error.hpp"

namespace ncode {

namespace {

struct Placed {
  int neuron;  // 1-based
  int a;       // level of the left endpoint
  int b;
  bool lc;
  bool rc;
};

struct State {
  int levels = 0;
  std::vector<Placed> placed;
};

class Decider {
 public:
  Decider(const Code& code, RealizationMode mode) : n_(code.n()), mode_(mode) {
    std::uint64_t used = 0;
    for (Codeword w : code) used |= w.mask();
    for (int i = 1; i <= n_; ++i) {
      if ((used >> (i - 1)) & 1U) order_.push_back(i);
    }
    std::uint64_t seen = 0;
    for (int neuron : order_) {
      seen |= std::uint64_t{1} << (neuron - 1);
      std::vector<std::uint64_t> proj;
      for (Codeword w : code) {
        if (const std::uint64_t m = w.mask() & seen; m != 0) proj.push_back(m);
      }
      std::sort(proj.begin(), proj.end());
      proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
      targets_.push_back(std::move(proj));
    }
  }

  std::size_t depth() const noexcept { return order_.size(); }

  /// Children of `s` that are consistent with the projected target, in enumeration order.
  template <class Visit>
  void expand(const State& s, Visit&& visit) const {
    const int neuron = order_[s.placed.size()];
    const int slots_a = 2 * s.levels;
    for (int sa = 0; sa <= slots_a; ++sa) {
      State with_a = s;
      int la = sa / 2;
      if (sa % 2 == 0) {
        shift_from(with_a, la);
        ++with_a.levels;
      }
      for (int sb = 2 * la + 1; sb <= 2 * with_a.levels; ++sb) {
        State child = with_a;
        int lb = sb / 2;
        if (sb % 2 == 0) {
          shift_from(child, lb);
          ++child.levels;
        }
        const bool point = lb == la;
        for (int flags = 0; flags < 4; ++flags) {
          const bool lc = (flags & 2) != 0;
          const bool rc = (flags & 1) != 0;
          if (!allowed(point, lc, rc)) continue;
          child.placed.push_back({neuron, la, lb, lc, rc});
          if (consistent(child)) visit(child);
          child.placed.pop_back();
        }
      }
    }
  }

  bool complete(const State& s) const noexcept { return s.placed.size() == order_.size(); }

  Realization1D to_realization(const State& s) const {
    std::vector<Interval1D> ivs(static_cast<std::size_t>(n_), Interval1D::empty());
    for (const Placed& p : s.placed) {
      ivs[static_cast<std::size_t>(p.neuron - 1)] = Interval1D(Rational(p.a + 1), Rational(p.b + 1), p.lc, p.rc);
    }
    return Realization1D(mode_, std::move(ivs));
  }

 private:
  static void shift_from(State& s, int level) {
    for (Placed& p : s.placed) {
      if (p.a >= level) ++p.a;
      if (p.b >= level) ++p.b;
    }
  }

  bool allowed(bool point, bool lc, bool rc) const noexcept {
    if (point) return mode_ != RealizationMode::Open && lc && rc;
    switch (mode_) {
      case RealizationMode::Open:
        return !lc && !rc;
      case RealizationMode::Closed:
        return lc && rc;
      case RealizationMode::Convex:
        return true;
    }
    return false;
  }

  bool consistent(const State& s) const {
    // Piece 2t is the gap below level t, piece 2t+1 is level t itself.
    const int pieces = 2 * s.levels + 1;
    std::uint64_t words[2 * 2 * kSearchMax + 1] = {};
    for (const Placed& p : s.placed) {
      const std::uint64_t bit = std::uint64_t{1} << (p.neuron - 1);
      const int first = p.lc ? 2 * p.a + 1 : 2 * p.a + 2;
      const int last = p.rc ? 2 * p.b + 1 : 2 * p.b;
      for (int k = first; k <= last; ++k) words[k] |= bit;
    }
    std::uint64_t found[2 * 2 * kSearchMax + 1];
    int count = 0;
    for (int k = 0; k < pieces; ++k) {
      if (words[k] != 0) found[count++] = words[k];
    }
    std::sort(found, found + count);
    count = static_cast<int>(std::unique(found, found + count) - found);
    const auto& want = targets_[s.placed.size() - 1];
    return static_cast<std::size_t>(count) == want.size() && std::equal(want.begin(), want.end(), found);
  }

 public:
  static constexpr int kSearchMax = 16;

 private:
  int n_;
  RealizationMode mode_;
  std::vector<int> order_;
  std::vector<std::vector<std::uint64_t>> targets_;
};

bool dfs(const Decider& d, const State& s, State& out, std::uint64_t& nodes) {
  ++nodes;
  if (d.complete(s)) {
    out = s;
    return true;
  }
  bool hit = false;
  d.expand(s, [&](const State& child) {
    if (!hit) hit = dfs(d, child, out, nodes);
  });
  return hit;
}

}  // namespace

std::optional<Realization1D> search_realization_1d(const Code& code, RealizationMode mode,
                                                   const SearchOptions& options, SearchStats* stats) {
  if (code.n() > options.cap) {
    throw CapacityError("realization search capped at n = " + std::to_string(options.cap) + ", code has n = " +
                        std::to_string(code.n()));
  }
  if (code.n() > Decider::kSearchMax) {
    throw CapacityError("realization search supports at most " + std::to_string(Decider::kSearchMax) + " neurons");
  }
  const Decider decider(code, mode);

  // Seed tasks: every consistent state two neurons deep (or shallower when fewer are used).
  std::vector<State> tasks{State{}};
  const std::size_t seed_depth = std::min<std::size_t>(2, decider.depth());
  for (std::size_t level = 0; level < seed_depth; ++level) {
    std::vector<State> next;
    for (const State& s : tasks) decider.expand(s, [&](const State& child) { next.push_back(child); });
    tasks = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> total_nodes{0};
  std::mutex best_mutex;
  std::size_t best_index = tasks.size();
  State best_state;

  auto worker = [&] {
    std::uint64_t nodes = 0;
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) break;
      {
        std::lock_guard lock(best_mutex);
        if (i > best_index) break;
      }
      State found;
      if (dfs(decider, tasks[i], found, nodes)) {
        std::lock_guard lock(best_mutex);
        if (i < best_index) {
          best_index = i;
          best_state = std::move(found);
        }
        break;
      }
    }
    total_nodes += nodes;
  };

  const int workers = std::max(1, options.workers);
  if (workers == 1 || tasks.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (stats != nullptr) stats->nodes = total_nodes.load();
  if (best_index == tasks.size()) return std::nullopt;
  return decider.to_realization(best_state);
}

}  // namespace ncode
