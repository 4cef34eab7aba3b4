#include "ncode/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "ncode/circulant.hpp"
#include "ncode/error.hpp"

namespace ncode {

namespace {

/// Hard ceiling from the 2^m membership bitmap.
constexpr int kCensusHardMax = 20;

struct Counts {
  std::uint64_t bpm = 0;
  std::uint64_t um = 0;
  std::uint64_t other = 0;
  std::uint64_t evaluated = 0;

  Counts& operator+=(const Counts& o) {
    bpm += o.bpm;
    um += o.um;
    other += o.other;
    evaluated += o.evaluated;
    return *this;
  }
};

class Kernel {
 public:
  explicit Kernel(const Code& code) : m_(static_cast<int>(code.size())) {
    const std::uint64_t all = neuron_mask(m_);
    std::vector<std::uint64_t> members{0, all};
    for (int j = 1; j <= code.n(); ++j) {
      const std::uint64_t x = x_element(code, j).coeffs();
      members.push_back(x);
      // 0 and 1 are fixed by every unital map; repeated columns need one check.
      if (x != 0 && x != all && std::find(xs_.begin(), xs_.end(), x) == xs_.end()) xs_.push_back(x);
    }
    bitmap_.assign((std::size_t{1} << m_) / 64 + 1, 0);
    for (std::uint64_t x : members) bitmap_[x >> 6] |= std::uint64_t{1} << (x & 63);
    col_.assign(static_cast<std::size_t>(m_), 0);
    for (int v = 0; v < m_; ++v) {
      for (std::size_t t = 0; t < xs_.size(); ++t) {
        col_[static_cast<std::size_t>(v)] |= ((xs_[t] >> v) & 1U) << t;
      }
    }
    tmask_ = xs_.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << xs_.size()) - 1;
  }

  int m() const noexcept { return m_; }
  std::size_t checks() const noexcept { return xs_.size(); }
  const std::vector<std::uint64_t>& xs() const noexcept { return xs_; }

  bool member(std::uint64_t c) const noexcept { return ((bitmap_[c >> 6] >> (c & 63)) & 1U) != 0; }

  /// Sets bit k of every image to the value f(k) = v.
  void set_digit(std::vector<std::uint64_t>& img, int k, int v) const noexcept {
    const std::uint64_t c = col_[static_cast<std::size_t>(v)];
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::size_t t = 0; t < img.size(); ++t) {
      img[t] = ((c >> t) & 1U) != 0 ? (img[t] | bit) : (img[t] & ~bit);
    }
  }

  bool all_members(const std::vector<std::uint64_t>& img) const noexcept {
    for (std::uint64_t c : img) {
      if (!member(c)) return false;
    }
    return true;
  }

  void tally(const std::vector<int>& f, Counts& counts) const {
    std::uint64_t hit = 0;
    bool constant = true;
    for (int v : f) {
      hit |= std::uint64_t{1} << v;
      constant = constant && v == f.front();
    }
    if (hit == neuron_mask(m_)) {
      ++counts.bpm;
    } else if (constant) {
      ++counts.um;
    } else {
      ++counts.other;
    }
  }

  /// Every f extending the fixed prefix f[0..prefix): a literal odometer over
  /// the middle digits with the last digit resolved for all m values at once.
  void scan_block(std::vector<int> f, int prefix, Counts& counts) const {
    std::vector<std::uint64_t> img(xs_.size(), 0);
    for (int k = 0; k < m_; ++k) {
      if (k >= prefix) f[static_cast<std::size_t>(k)] = 0;
      set_digit(img, k, f[static_cast<std::size_t>(k)]);
    }
    if (prefix >= m_) {
      ++counts.evaluated;
      if (all_members(img)) tally(f, counts);
      return;
    }
    const int last = m_ - 1;
    const std::uint64_t last_bit = std::uint64_t{1} << last;
    for (;;) {
      std::uint64_t bad0 = 0;
      std::uint64_t bad1 = 0;
      for (std::size_t t = 0; t < img.size(); ++t) {
        const std::uint64_t base = img[t] & ~last_bit;
        if (!member(base)) bad0 |= std::uint64_t{1} << t;
        if (!member(base | last_bit)) bad1 |= std::uint64_t{1} << t;
      }
      counts.evaluated += static_cast<std::uint64_t>(m_);
      if ((bad0 & bad1) == 0) {
        for (int v = 0; v < m_; ++v) {
          const std::uint64_t c = col_[static_cast<std::size_t>(v)];
          if ((c & bad1) == 0 && (~c & tmask_ & bad0) == 0) {
            f[static_cast<std::size_t>(last)] = v;
            tally(f, counts);
          }
        }
      }
      int pos = last - 1;
      while (pos >= prefix) {
        auto& digit = f[static_cast<std::size_t>(pos)];
        if (++digit < m_) {
          set_digit(img, pos, digit);
          break;
        }
        digit = 0;
        set_digit(img, pos, 0);
        --pos;
      }
      if (pos < prefix) return;
    }
  }

 private:
  int m_;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> bitmap_;
  std::vector<std::uint64_t> col_;  // col_[v] bit t = bit v of xs_[t]
  std::uint64_t tmask_ = 0;
};

template <class Task>
Counts run_pool(std::size_t tasks, int workers, Task&& task) {
  std::atomic<std::size_t> cursor{0};
  std::mutex merge;
  Counts total;
  auto worker = [&] {
    Counts local;
    for (std::size_t i = cursor.fetch_add(1); i < tasks; i = cursor.fetch_add(1)) task(i, local);
    std::lock_guard lock(merge);
    total += local;
  };
  if (workers <= 1 || tasks < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const auto count = static_cast<std::size_t>(workers) < tasks ? static_cast<std::size_t>(workers) : tasks;
    for (std::size_t w = 0; w < count; ++w) pool.emplace_back(worker);
  }
  return total;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

std::uint64_t factorial(int m) {
  std::uint64_t out = 1;
  for (int i = 2; i <= m; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

Counts census_plain(const Kernel& kernel, int workers) {
  const int m = kernel.m();
  const int prefix = std::min(2, m);
  const std::size_t blocks = ipow(static_cast<std::uint64_t>(m), prefix);
  return run_pool(blocks, workers, [&](std::size_t block, Counts& counts) {
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    std::size_t rest = block;
    for (int k = prefix - 1; k >= 0; --k) {
      f[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(m));
      rest /= static_cast<std::size_t>(m);
    }
    kernel.scan_block(std::move(f), prefix, counts);
  });
}

Counts evaluate_all(const Kernel& kernel, const std::vector<std::vector<int>>& fs) {
  Counts counts;
  std::vector<std::uint64_t> img(kernel.checks(), 0);
  for (const auto& f : fs) {
    for (int k = 0; k < kernel.m(); ++k) kernel.set_digit(img, k, f[static_cast<std::size_t>(k)]);
    ++counts.evaluated;
    if (kernel.all_members(img)) kernel.tally(f, counts);
  }
  return counts;
}

Counts census_bijections(const Kernel& kernel) {
  std::vector<int> f(static_cast<std::size_t>(kernel.m()));
  std::iota(f.begin(), f.end(), 0);
  Counts counts;
  std::vector<std::uint64_t> img(kernel.checks(), 0);
  do {
    for (int k = 0; k < kernel.m(); ++k) kernel.set_digit(img, k, f[static_cast<std::size_t>(k)]);
    ++counts.evaluated;
    if (kernel.all_members(img)) kernel.tally(f, counts);
  } while (std::next_permutation(f.begin(), f.end()));
  return counts;
}

Counts census_constants(const Kernel& kernel) {
  std::vector<std::vector<int>> fs;
  for (int v = 0; v < kernel.m(); ++v) fs.emplace_back(static_cast<std::size_t>(kernel.m()), v);
  return evaluate_all(kernel, fs);
}

/// Index functions with |f^-1(i)| = h_i, depth-first over positions.
void scan_histogram(const Kernel& kernel, std::vector<int>& remaining, std::vector<int>& f,
                    std::vector<std::uint64_t>& img, int pos, Counts& counts) {
  const int m = kernel.m();
  if (pos == m) {
    ++counts.evaluated;
    if (kernel.all_members(img)) kernel.tally(f, counts);
    return;
  }
  for (int v = 0; v < m; ++v) {
    auto& left = remaining[static_cast<std::size_t>(v)];
    if (left == 0) continue;
    --left;
    f[static_cast<std::size_t>(pos)] = v;
    kernel.set_digit(img, pos, v);
    scan_histogram(kernel, remaining, f, img, pos + 1, counts);
    ++left;
  }
}

/// Histograms (compositions of m into m parts) passing the norm condition:
/// ||phi(x_j)|| = sum of h_i over supp(x_j) must be 0, p or m. With
/// gcd(p, n) = 1 and p > 1, maps outside BPM and UM must give exactly p.
std::vector<std::vector<int>> admissible_histograms(const Code& code, int p) {
  const int m = static_cast<int>(code.size());
  std::vector<std::uint64_t> xs;
  for (int j = 1; j <= code.n(); ++j) xs.push_back(x_element(code, j).coeffs());
  const bool coprime = p > 1 && std::gcd(p, code.n()) == 1;

  std::vector<std::vector<int>> out;
  std::vector<int> h(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> build = [&](int i, int left) {
    if (i == m - 1) {
      h[static_cast<std::size_t>(i)] = left;
      bool all_ones = true;
      bool unity = false;
      for (int c : h) {
        all_ones = all_ones && c == 1;
        unity = unity || c == m;
      }
      const bool strict = coprime && !all_ones && !unity;
      for (std::uint64_t x : xs) {
        int norm = 0;
        for (int k = 0; k < m; ++k) {
          if ((x >> k) & 1U) norm += h[static_cast<std::size_t>(k)];
        }
        const bool ok = strict ? norm == p : (norm == 0 || norm == p || norm == m);
        if (!ok) return;
      }
      out.push_back(h);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      h[static_cast<std::size_t>(i)] = c;
      build(i + 1, left - c);
    }
  };
  build(0, m);
  return out;
}

Counts census_pruned(const Kernel& kernel, const Code& code, int p, int workers) {
  const auto histograms = admissible_histograms(code, p);
  return run_pool(histograms.size(), workers, [&](std::size_t i, Counts& counts) {
    std::vector<int> remaining = histograms[i];
    std::vector<int> f(static_cast<std::size_t>(kernel.m()), 0);
    std::vector<std::uint64_t> img(kernel.checks(), 0);
    scan_histogram(kernel, remaining, f, img, 0, counts);
  });
}

}  // namespace

CensusReport enumerate_nrh(const Code& code, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.m = static_cast<int>(code.size());
  report.n = code.n();
  report.workers = std::max(1, options.workers);
  const int m = report.m;
  if (m < 1) throw CapacityError("census needs a non-empty code");

  std::optional<CirculantSpec> circulant;
  bool prune = false;
  if (options.prune) {
    circulant = detect_circulant(code);
    if (!circulant) {
      report.warnings.emplace_back("pruning ignored: the code is not a circulant code");
    } else if (options.filter) {
      report.warnings.emplace_back("pruning ignored: class filters already enumerate a small subclass");
    } else {
      prune = true;
    }
  }

  const bool within_plain = m <= options.cap;
  const bool within_pruned = prune && m <= options.pruned_cap && report.workers >= options.pruned_min_workers;
  if ((!within_plain && !within_pruned) || m > kCensusHardMax) {
    std::string why = "census capped at m = " + std::to_string(options.cap) + ", code has m = " + std::to_string(m);
    if (prune && m <= options.pruned_cap) {
      why += " (a pruned census up to m = " + std::to_string(options.pruned_cap) + " needs at least " +
             std::to_string(options.pruned_min_workers) + " workers)";
    }
    throw CapacityError(why);
  }

  const Kernel kernel(code);
  Counts counts;
  if (options.filter == EndoClass::BPM) {
    report.total_functions = factorial(m);
    counts = census_bijections(kernel);
  } else if (options.filter == EndoClass::UM) {
    report.total_functions = static_cast<std::uint64_t>(m);
    counts = census_constants(kernel);
  } else {
    report.total_functions = ipow(static_cast<std::uint64_t>(m), m);
    if (prune) {
      counts = census_pruned(kernel, code, circulant->p, report.workers);
      report.pruned = true;
    } else {
      counts = census_plain(kernel, report.workers);
    }
  }
  if (options.filter == EndoClass::Other) {
    // The Other filter walks everything and keeps the Other column only.
    counts.bpm = 0;
    counts.um = 0;
  }

  report.bpm_nrh = counts.bpm;
  report.um_nrh = counts.um;
  report.other_nrh = counts.other;
  report.nrh_total = counts.bpm + counts.um + counts.other;
  report.evaluated = counts.evaluated;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json census_to_json(const CensusReport& r) {
  return {{"m", r.m},
          {"n", r.n},
          {"total_functions", r.total_functions},
          {"nrh_total", r.nrh_total},
          {"bpm_nrh", r.bpm_nrh},
          {"um_nrh", r.um_nrh},
          {"other_nrh", r.other_nrh},
          {"pruned", r.pruned},
          {"elapsed_ms", r.elapsed_ms},
          {"workers", r.workers}};
}

CensusReport census_from_json(const nlohmann::json& j) {
  CensusReport r;
  try {
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.total_functions = j.at("total_functions").get<std::uint64_t>();
    r.nrh_total = j.at("nrh_total").get<std::uint64_t>();
    r.bpm_nrh = j.at("bpm_nrh").get<std::uint64_t>();
    r.um_nrh = j.at("um_nrh").get<std::uint64_t>();
    r.other_nrh = j.at("other_nrh").get<std::uint64_t>();
    r.pruned = j.at("pruned").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.workers = j.at("workers").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("census JSON: ") + e.what());
  }
  r.evaluated = r.total_functions;
  return r;
}

}  // namespace ncode
