#include <algorithm>
#include <set>

#include "ncode/cli/batteries.hpp"
#include "ncode/cli/generators.hpp"
#include "ncode/code_io.hpp"
#include "ncode/code_map.hpp"
#include "ncode/neural_ring.hpp"
#include "timing.hpp"

namespace ncode::cli {

namespace {

enum : std::uint64_t { kLaws = 21, kColumns = 22, kUnity = 23, kMonoid = 24, kConjugation = 25 };

constexpr std::size_t kMaxListed = 5;

void note(nlohmann::json& list, nlohmann::json item) {
  if (list.size() < kMaxListed) list.push_back(std::move(item));
}

int trials_or(const BatteryOptions& options, int fallback) { return options.trials > 0 ? options.trials : fallback; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Endomorphism random_endo(Rng& rng, int m) {
  std::vector<int> f(static_cast<std::size_t>(m));
  for (int& v : f) v = uniform(rng, 0, m - 1);
  return Endomorphism(std::move(f));
}

RingElement random_element(Rng& rng, int m) {
  return {m, std::uniform_int_distribution<std::uint64_t>(0, neuron_mask(m))(rng)};
}

/// At most `m_max` codewords on at most four neurons, in random order.
Code random_small_code(Rng& rng, int m_max) {
  const int n = uniform(rng, 1, 4);
  const Code base = random_code(rng, n, 0.4);
  std::vector<Codeword> words(base.begin(), base.end());
  std::shuffle(words.begin(), words.end(), rng);
  words.resize(std::min<std::size_t>(words.size(), static_cast<std::size_t>(uniform(rng, 1, m_max))));
  return Code(n, std::move(words));
}

std::vector<Endomorphism> enumerate_neural(const Code& code) {
  const int m = static_cast<int>(code.size());
  const NeuralTester tester(code);
  std::vector<Endomorphism> out;
  std::vector<int> f(static_cast<std::size_t>(m), 0);
  for (;;) {
    const Endomorphism phi(f);
    if (tester.is_neural(phi)) out.push_back(phi);
    int k = 0;
    while (k < m && ++f[static_cast<std::size_t>(k)] == m) f[static_cast<std::size_t>(k++)] = 0;
    if (k == m) break;
  }
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<Endomorphism>& list) {
  std::set<std::vector<int>> out;
  for (const Endomorphism& e : list) out.insert(e.f());
  return out;
}

nlohmann::json f_json(const Endomorphism& e) { return e.f(); }

}  // namespace

Check check_endo_laws(const BatteryOptions& options) {
  return timed([&] {
    Check c{"endomorphism laws", "index-function endomorphisms preserve sums, products and the unit", false};
    const int trials = trials_or(options, 1000);
    Rng rng = substream(options.seed, kLaws);
    int broken = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const int m = uniform(rng, 1, 12);
      const Endomorphism phi = random_endo(rng, m);
      const RingElement y = random_element(rng, m);
      const RingElement z = random_element(rng, m);
      const bool ok = apply_endo(phi, multiply(y, z)) == multiply(apply_endo(phi, y), apply_endo(phi, z)) &&
                      apply_endo(phi, add(y, z)) == add(apply_endo(phi, y), apply_endo(phi, z)) &&
                      apply_endo(phi, RingElement::one(m)) == RingElement::one(m) &&
                      apply_endo(phi, RingElement::zero(m)) == RingElement::zero(m) &&
                      multiply(RingElement::one(m), y) == y;
      if (!ok) {
        ++broken;
        note(examples, {{"f", f_json(phi)}, {"y", y.coeffs()}, {"z", z.coeffs()}});
      }
    }
    c.passed = broken == 0;
    c.detail = {{"trials", trials}, {"failures", broken}, {"examples", examples},
                {"summary", std::to_string(broken) + " of " + std::to_string(trials) + " triples broke a law"}};
    return c;
  });
}

Check check_column_law(const BatteryOptions& options) {
  return timed([&] {
    Check c{"column law", "each rho_k appears in exactly one basis image, so the image norms sum to m", false};
    const int trials = trials_or(options, 1000);
    Rng rng = substream(options.seed, kColumns);
    int broken = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const int m = uniform(rng, 1, 12);
      const Endomorphism phi =
          std::bernoulli_distribution(0.2)(rng) ? Endomorphism(random_permutation(rng, m)) : random_endo(rng, m);
      int total = 0;
      std::uint64_t seen = 0;
      bool overlap = false;
      int largest = 0;
      bool all_one = true;
      for (int i = 0; i < m; ++i) {
        const RingElement a = phi.image_of_basis(i);
        total += a.norm();
        largest = std::max(largest, a.norm());
        all_one = all_one && a.norm() == 1;
        overlap = overlap || (seen & a.coeffs()) != 0;
        seen |= a.coeffs();
      }
      const bool class_ok = (classify(phi) == EndoClass::BPM) == all_one &&
                            (classify(phi) == EndoClass::UM) == (largest == m && m > 1);
      if (total != m || overlap || seen != neuron_mask(m) || !class_ok) {
        ++broken;
        note(examples, {{"f", f_json(phi)}});
      }
    }
    c.passed = broken == 0;
    c.detail = {{"trials", trials}, {"failures", broken}, {"examples", examples},
                {"summary", std::to_string(broken) + " of " + std::to_string(trials) + " index functions broke the law"}};
    return c;
  });
}

Check check_unity_maps(const BatteryOptions& options) {
  return timed([&] {
    Check c{"unity maps are neural", "every unity map is a neural ring homomorphism", false};
    const int trials = trials_or(options, 200);
    Rng rng = substream(options.seed, kUnity);
    int broken = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const Code code = random_code(rng, uniform(rng, 1, 6), 0.3);
      const NeuralTester tester(code);
      const int m = tester.m();
      bool ok = tester.is_neural(Endomorphism::identity(m));
      for (int v = 0; v < m && ok; ++v) ok = tester.is_neural(Endomorphism::constant(m, v));
      if (!ok) {
        ++broken;
        note(examples, {{"code", to_string(code)}});
      }
    }
    c.passed = broken == 0;
    c.detail = {{"codes", trials}, {"failures", broken}, {"examples", examples},
                {"summary", std::to_string(broken) + " of " + std::to_string(trials) + " codes rejected a unity map"}};
    return c;
  });
}

Check check_monoid_closure(const BatteryOptions& options) {
  return timed([&] {
    Check c{"neural endomorphisms form a monoid", "neural ring endomorphisms are closed under composition", false};
    const int trials = trials_or(options, 50);
    Rng rng = substream(options.seed, kMonoid);
    int broken = 0;
    std::uint64_t pairs = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const Code code = random_small_code(rng, 4);
      const auto nrh = enumerate_neural(code);
      const auto members = as_set(nrh);
      bool ok = members.count(Endomorphism::identity(static_cast<int>(code.size())).f()) == 1;
      for (const Endomorphism& phi : nrh) {
        for (const Endomorphism& psi : nrh) {
          ++pairs;
          if (members.count(compose(phi, psi).f()) == 0) {
            ok = false;
            note(examples, {{"code", to_string(code)}, {"phi", f_json(phi)}, {"psi", f_json(psi)}});
          }
        }
      }
      if (!ok) ++broken;
    }
    c.passed = broken == 0;
    c.detail = {{"codes", trials}, {"pairs", pairs}, {"failures", broken}, {"examples", examples},
                {"summary", std::to_string(pairs) + " compositions over " + std::to_string(trials) + " codes, " +
                                std::to_string(broken) + " codes not closed"}};
    return c;
  });
}

Check check_conjugation_counts(const BatteryOptions& options) {
  return timed([&] {
    Check c{"conjugation matches neural endomorphisms",
            "an elementary isomorphism of codes conjugates neural ring endomorphisms bijectively", false};
    const int trials = trials_or(options, 50);
    Rng rng = substream(options.seed, kConjugation);
    int count_mismatch = 0;
    int image_mismatch = 0;
    int reversed_differs = 0;
    nlohmann::json examples = nlohmann::json::array();
    for (int t = 0; t < trials; ++t) {
      const auto [code, stage] = random_iso_instance(rng, random_small_code(rng, 4));
      const Code image = apply(CodeMap({stage}), code);
      const int m = static_cast<int>(code.size());
      // Reordered image: position k holds q(code[sigma[k]]).
      const std::vector<int> sigma = random_permutation(rng, m);
      std::vector<Codeword> words;
      for (int k = 0; k < m; ++k) words.push_back(image[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]);
      const Code reordered(image.n(), std::move(words));
      // alpha pulls functions on the reordered code back along q: coordinate i reads sigma^{-1}(i).
      std::vector<int> pull(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) pull[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = k;
      const Endomorphism alpha(pull);

      const auto left = enumerate_neural(code);
      const auto right = as_set(enumerate_neural(reordered));
      std::set<std::vector<int>> mapped;
      std::set<std::vector<int>> reversed;
      for (const Endomorphism& phi : left) {
        mapped.insert(conjugate(phi, alpha).f());
        reversed.insert(conjugate(phi, inverse(alpha)).f());
      }
      const bool counts = left.size() == right.size();
      const bool images = mapped == right;
      if (!counts) ++count_mismatch;
      if (!images) ++image_mismatch;
      if (reversed != right) ++reversed_differs;
      if (!counts || !images) {
        note(examples, {{"code", to_bit_string(code)},
                        {"map", to_string(stage)},
                        {"reordered", to_bit_string(reordered)},
                        {"nrh", left.size()},
                        {"nrh_image", right.size()}});
      }
    }
    c.passed = count_mismatch == 0 && image_mismatch == 0;
    c.detail = {{"pairs", trials},
                {"count_mismatches", count_mismatch},
                {"image_mismatches", image_mismatch},
                {"reversed_orientation_fails", reversed_differs},
                {"examples", examples},
                {"summary", std::to_string(trials) + " pairs, " + std::to_string(count_mismatch) + " count and " +
                                std::to_string(image_mismatch) + " bijection mismatches"}};
    return c;
  });
}

Check check_conjugation_examples(const BatteryOptions&) {
  return timed([&] {
    Check c{"conjugation examples", "reordering a circulant code keeps its number of neural endomorphisms", false};
    // {101, 110, 011} against {110, 011, 101}: position k of the second is word k+1 of the first.
    const Code circ = parse_compact(3, "13 12 23");
    const Code moved = parse_compact(3, "12 23 13");
    const Endomorphism alpha({2, 0, 1});
    const auto left = enumerate_neural(circ);
    const auto right = as_set(enumerate_neural(moved));
    std::set<std::vector<int>> mapped;
    bool class_kept = true;
    for (const Endomorphism& phi : left) {
      const Endomorphism psi = conjugate(phi, alpha);
      mapped.insert(psi.f());
      class_kept = class_kept && classify(psi) == classify(phi);
    }
    const Endomorphism sample({1, 1, 0});
    const bool identity_ok = conjugate(sample, Endomorphism::identity(3)) == sample;
    const bool unity_ok = conjugate(Endomorphism::constant(3, 1), alpha).is_constant();
    c.passed = left.size() == 9 && right.size() == 9 && mapped == right && class_kept && identity_ok && unity_ok;
    c.detail = {{"nrh", left.size()},
                {"nrh_reordered", right.size()},
                {"bijection", mapped == right},
                {"class_preserved", class_kept},
                {"identity_conjugation", identity_ok},
                {"unity_stays_unity", unity_ok},
                {"summary", std::to_string(left.size()) + " and " + std::to_string(right.size()) +
                                " neural endomorphisms, explicit bijection " + (mapped == right ? "holds" : "fails")}};
    return c;
  });
}

std::vector<Check> ring_suite(const RunConfig& config) {
  const BatteryOptions options = battery_options(config, nullptr);
  return {check_endo_laws(options),       check_column_law(options),        check_unity_maps(options),
          check_monoid_closure(options), check_conjugation_counts(options), check_conjugation_examples(options)};
}

}  // namespace ncode::cli
