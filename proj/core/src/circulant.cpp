#include "ncode/circulant.hpp"

#include <numeric>
#include <sstream>

#include "ncode/error.hpp"

namespace ncode {

int wrap_index(int i, int n) { return ((i - 1) % n + n) % n + 1; }

Code circulant_code(const CirculantSpec& spec) {
  if (spec.n < 2 || spec.n > kMaxNeurons || spec.p < 1 || spec.p >= spec.n) {
    throw InvalidCode("circulant code needs 1 <= p < n <= 64, got n = " + std::to_string(spec.n) +
                      ", p = " + std::to_string(spec.p));
  }
  std::vector<Codeword> words;
  for (int j = 1; j <= spec.n; ++j) {
    Codeword w;
    for (int i = 1; i <= spec.n; ++i) {
      if (((j - i) % spec.n + spec.n) % spec.n < spec.p) w = w.with(i);
    }
    words.push_back(w);
  }
  return Code(spec.n, std::move(words));
}

std::optional<CirculantSpec> detect_circulant(const Code& code) {
  const int n = code.n();
  if (n < 2 || code.size() != static_cast<std::size_t>(n)) return std::nullopt;
  const int p = code[0].size();
  if (p < 1 || p >= n) return std::nullopt;
  for (Codeword w : code) {
    if (w.size() != p) return std::nullopt;
  }
  const CirculantSpec spec{n, p};
  if (!circulant_code(spec).same_set_as(code)) return std::nullopt;
  return spec;
}

const char* to_string(PredictionStatus status) {
  switch (status) {
    case PredictionStatus::Theorem:
      return "theorem";
    case PredictionStatus::Conjecture:
      return "conjecture";
    case PredictionStatus::BruteForceOnly:
      return "brute-force-only";
  }
  return "unknown";
}

std::string to_string(const BigInt& value) { return value.str(); }

namespace {

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

bool is_prime(int v) {
  if (v < 2) return false;
  for (int d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

nlohmann::json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::int64_t>::max()) return v.convert_to<std::int64_t>();
  return v.str();
}

}  // namespace

Prediction predicted_count(const CirculantSpec& spec) {
  const int n = spec.n;
  const int p = spec.p;
  Prediction out;
  out.um_value = n;
  out.bpm_value = (p == 1 || p == n - 1) ? factorial(n) : BigInt(2 * n);

  auto set = [&](PredictionStatus status, BigInt value, std::string source, std::string formula) {
    out.status = status;
    out.value = std::move(value);
    out.source = std::move(source);
    out.formula = std::move(formula);
    return out;
  };
  const auto theorem = PredictionStatus::Theorem;
  const int g = std::gcd(p, n);

  if (n == 4 && p == 2) {
    return set(theorem, 36, "special value: support 2 on 4 neurons exceeds 4!+4", "36");
  }
  if (n == 6 && p == 3) {
    return set(theorem, 270, "special value: support 3 on 6 neurons, brute-force count", "270");
  }
  if (p == 1 || p == n - 1) {
    return set(theorem, factorial(n) + n, "support 1 or n-1 gives n!+n", "n!+n");
  }
  if (p == 2 && n % 2 == 1) {
    return set(theorem, BigInt(3 * n), "support 2 with n odd gives 3n", "3n");
  }
  if (p == 2 && n % 2 == 0 && n / 2 >= 3) {
    return set(theorem, 4 * factorial(n / 2) + 3 * n, "support 2 with n = 2k, k >= 3 gives 2^2(n/2)!+3n",
               "2^2(n/2)!+3n");
  }
  if (p > 2 && p < n - 1 && g == 1 && n % p == 1) {
    return set(theorem, BigInt(3 * n), "coprime support 2<p<n-1 with n = pd+1 gives 3n", "3n");
  }
  if (p > 2 && p < n - 1 && g == 1 && n % p == 2) {
    return set(theorem, BigInt(3 * n), "coprime support 2<p<n-1 with n = pd+2 gives 3n", "3n");
  }
  if (p == 3 && n % 3 == 0 && n / 3 > 2) {
    return set(theorem, 3 * n + 9 * factorial(n / 3) + 12 * n, "support 3 with n = 3d, d > 2 gives 3n+3^2(n/3)!+12n",
               "3n+3^2(n/3)!+12n");
  }
  const auto conjecture = PredictionStatus::Conjecture;
  if (p > 2 && p < n - 1 && g == 1 && n % p > 2) {
    return set(conjecture, BigInt(3 * n), "conjectured: coprime support with n = pd+r, 2<r<p gives 3n", "3n");
  }
  if (p > 2 && is_prime(p) && n % p == 0) {
    return set(conjecture, 3 * n + BigInt(p) * p * factorial(n / p) + p * (p + 1) * n,
               "conjectured: prime support p>2 dividing n gives 3n+p^2(n/p)!+p(p+1)n", "3n+p^2(n/p)!+p(p+1)n");
  }
  out.status = PredictionStatus::BruteForceOnly;
  out.source = "no closed form applies";
  out.formula = "-";
  return out;
}

VerificationRow verify(const CirculantSpec& spec, const VerifyOptions& options) {
  VerificationRow row{spec, predicted_count(spec), {}, false, false, false, false};
  CensusOptions census = options.census;
  census.prune = census.prune || options.prune;
  census.filter.reset();
  row.census = enumerate_nrh(circulant_code(spec), census);
  row.frontier = row.prediction.status != PredictionStatus::Theorem;
  row.total_match = row.prediction.value && *row.prediction.value == row.census.nrh_total;
  row.bpm_match = row.prediction.bpm_value == row.census.bpm_nrh;
  row.um_match = row.prediction.um_value == row.census.um_nrh;
  return row;
}

bool VerificationTable::passed() const {
  for (const VerificationRow& row : rows) {
    if (!row.passed()) return false;
  }
  return true;
}

std::vector<CirculantSpec> circulant_grid(int n_min, int n_max) {
  std::vector<CirculantSpec> cells;
  for (int n = std::max(2, n_min); n <= n_max; ++n) {
    for (int p = 1; p < n; ++p) cells.push_back({n, p});
  }
  return cells;
}

VerificationTable verify_range(const std::vector<CirculantSpec>& cells, const VerifyOptions& options) {
  VerificationTable table;
  for (const CirculantSpec& spec : cells) table.rows.push_back(verify(spec, options));
  return table;
}

std::string to_markdown(const VerificationTable& table) {
  std::ostringstream out;
  out << "| p | n | formula | claim | predicted | brute force | BPM | UM | Other | match |\n";
  out << "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const VerificationRow& r : table.rows) {
    const std::string predicted = r.prediction.value ? to_string(*r.prediction.value) : "-";
    std::string match;
    if (r.frontier) {
      match = r.prediction.value ? (r.total_match ? "agrees (frontier)" : "differs (frontier)") : "frontier";
    } else {
      match = r.passed() ? "yes" : "NO";
    }
    out << "| " << r.spec.p << " | " << r.spec.n << " | " << r.prediction.formula << " | "
        << to_string(r.prediction.status) << " | " << predicted << " | " << r.census.nrh_total << " | "
        << r.census.bpm_nrh << " | " << r.census.um_nrh << " | " << r.census.other_nrh << " | " << match << " |\n";
  }
  return out.str();
}

nlohmann::json to_json(const VerificationRow& r) {
  nlohmann::json prediction = {{"status", to_string(r.prediction.status)},
                               {"source", r.prediction.source},
                               {"formula", r.prediction.formula},
                               {"bpm_value", big_json(r.prediction.bpm_value)},
                               {"um_value", big_json(r.prediction.um_value)}};
  prediction["value"] = r.prediction.value ? big_json(*r.prediction.value) : nlohmann::json(nullptr);
  return {{"n", r.spec.n},
          {"p", r.spec.p},
          {"prediction", prediction},
          {"census", census_to_json(r.census)},
          {"total_match", r.total_match},
          {"bpm_match", r.bpm_match},
          {"um_match", r.um_match},
          {"frontier", r.frontier},
          {"passed", r.passed()}};
}

nlohmann::json to_json(const VerificationTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const VerificationRow& r : table.rows) rows.push_back(to_json(r));
  return {{"rows", rows}, {"passed", table.passed()}};
}

}  // namespace ncode
