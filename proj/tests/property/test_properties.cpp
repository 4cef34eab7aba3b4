#include "doctest.h"

#include <random>

#include "ncode/arrangement.hpp"
#include "ncode/census.hpp"
#include "ncode/cli/generators.hpp"
#include "ncode/code_io.hpp"
#include "ncode/code_map.hpp"
#include "ncode/code_properties.hpp"
#include "ncode/neural_ring.hpp"
#include "ncode/search.hpp"
#include "ncode/transform.hpp"
#include "oracles.hpp"

using namespace ncode;
using cli::Rng;

namespace {

constexpr std::uint64_t kSeed = 20240611;

/// Arbitrary closure flags, integer endpoints on 0..2n.
Realization1D random_convex(Rng& rng, int n) {
  std::uniform_int_distribution<int> end(0, 2 * n);
  std::bernoulli_distribution coin(0.5);
  std::vector<Interval1D> out;
  for (int i = 0; i < n; ++i) {
    int a = end(rng);
    int b = end(rng);
    if (a > b) std::swap(a, b);
    if (a == b) {
      out.push_back(coin(rng) ? Interval1D::point(Rational(a)) : Interval1D::empty());
    } else {
      out.emplace_back(Rational(a), Rational(b), coin(rng), coin(rng));
    }
  }
  if (std::all_of(out.begin(), out.end(), [](const Interval1D& u) { return u.is_empty(); })) {
    out[0] = Interval1D::closed(Rational(0), Rational(1));
  }
  return Realization1D(RealizationMode::Convex, out);
}

std::vector<Realization1D> realization_pool(std::uint64_t salt, int count) {
  Rng rng(kSeed ^ salt);
  std::uniform_int_distribution<int> size(1, 5);
  std::vector<Realization1D> out;
  for (int t = 0; t < count; ++t) {
    const int n = size(rng);
    switch (t % 3) {
      case 0:
        out.push_back(cli::random_realization(rng, n, RealizationMode::Open));
        break;
      case 1:
        out.push_back(cli::random_realization(rng, n, RealizationMode::Closed));
        break;
      default:
        out.push_back(random_convex(rng, n));
    }
  }
  return out;
}

std::vector<Rational> probes(const Realization1D& u) {
  std::vector<Rational> ends;
  for (const Interval1D& i : u.intervals()) {
    if (i.is_empty()) continue;
    ends.push_back(i.a());
    ends.push_back(i.b());
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<Rational> out{ends.front() - 1, ends.back() + 1};
  for (std::size_t t = 0; t < ends.size(); ++t) {
    out.push_back(ends[t]);
    if (t + 1 < ends.size()) out.push_back((ends[t] + ends[t + 1]) / 2);
  }
  return out;
}

}  // namespace

TEST_CASE("code of a realization matches point sampling") {
  for (const Realization1D& u : realization_pool(1, 400)) {
    CHECK(oracle::words_of(code_of(u)) == oracle::code_by_sampling(u));
  }
}

TEST_CASE("atoms partition the union of the sets") {
  for (const Realization1D& u : realization_pool(2, 300)) {
    const AtomTable table = atoms(u);
    CHECK(oracle::words_of(Code(u.n(), [&] {
            std::vector<Codeword> keys;
            for (const auto& [word, pieces] : table) keys.push_back(word);
            return keys;
          }())) == oracle::words_of(code_of(u)));
    for (const Rational& x : probes(u)) {
      oracle::Word here;
      for (int i = 1; i <= u.n(); ++i) {
        if (oracle::member(u.interval(i), x)) here.push_back(i);
      }
      int owners = 0;
      for (const auto& [word, pieces] : table) {
        CHECK_FALSE(pieces.empty());
        for (const Interval1D& piece : pieces) {
          if (oracle::member(piece, x)) {
            ++owners;
            CHECK(word.neurons() == here);
          }
        }
      }
      CHECK(owners == (here.empty() ? 0 : 1));
    }
  }
}

TEST_CASE("maximal atoms are full intersections on generated realizations") {
  for (const Realization1D& u : realization_pool(3, 300)) CHECK(check_maximal_atoms(u));
}

TEST_CASE("rewrites keep the code") {
  Rng rng(kSeed ^ 4);
  std::uniform_int_distribution<int> size(1, 5);
  for (int t = 0; t < 150; ++t) {
    const Realization1D open = cli::random_realization(rng, size(rng), RealizationMode::Open);
    const Code code = code_of(open);
    const Realization1D normal = normalize_open_epsilon(open);
    CHECK(code_of(normal) == code);
    const auto eps = epsilon_distance(normal);
    CHECK((!eps || *eps > 0));
    const Realization1D closed = open_to_closed(open);
    CHECK(code_of(closed) == code);
    CHECK(check_maximal_atoms(closed));

    const Realization1D c = cli::random_realization(rng, size(rng), RealizationMode::Closed);
    const Code ccode = code_of(c);
    const Realization1D smooth = desingularize_closed(c);
    CHECK(code_of(smooth) == ccode);
    for (const Interval1D& i : smooth.intervals()) CHECK_FALSE(i.is_singleton());
    const Realization1D spaced = normalize_closed_epsilon(c);
    CHECK(code_of(spaced) == ccode);
    const auto ceps = epsilon_distance(spaced);
    CHECK((!ceps || *ceps > 0));
    const Realization1D reopened = closed_to_open(c);
    CHECK(code_of(reopened) == ccode);
    CHECK(check_maximal_atoms(reopened));
  }
}

TEST_CASE("search finds a realization for every realizable code it is shown") {
  Rng rng(kSeed ^ 5);
  std::uniform_int_distribution<int> size(1, 4);
  for (int t = 0; t < 90; ++t) {
    const int n = size(rng);
    Realization1D u = t % 3 == 0   ? cli::random_realization(rng, n, RealizationMode::Open)
                      : t % 3 == 1 ? cli::random_realization(rng, n, RealizationMode::Closed)
                                   : random_convex(rng, n);
    const Code code = code_of(u);
    const auto found = search_realization_1d(code, u.mode());
    REQUIRE(found.has_value());
    CHECK(found->mode() == u.mode());
    CHECK(code_of(*found).same_set_as(code));
  }
}

TEST_CASE("realization JSON round trips") {
  for (const Realization1D& u : realization_pool(6, 100)) {
    CHECK(realization_from_json(realization_to_json(u)) == u);
  }
}

TEST_CASE("code text and JSON round trip") {
  Rng rng(kSeed ^ 7);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> order;
    const Code code = cli::random_code(rng, 1 + t % 9, 0.2);
    std::vector<Codeword> shuffled(code.begin(), code.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Code unordered(code.n(), shuffled);
    CHECK(parse_code_text(format_code_text(unordered)) == unordered);
    CHECK(code_from_json(code_to_json(unordered)) == unordered);
  }
}

TEST_CASE("maximality, completion and max-intersection completeness") {
  Rng rng(kSeed ^ 8);
  for (int t = 0; t < 300; ++t) {
    const Code code = cli::random_code(rng, 2 + t % 4, 0.3);
    const oracle::WordSet set = oracle::words_of(code);
    CHECK(oracle::words_of(maximal_codewords(code)) == oracle::maximal(set));
    CHECK(is_max_intersection_complete(code) == oracle::mic(set));

    const Code hat = intersection_complete(code);
    CHECK(intersection_complete(hat) == hat);

    // A strict superset of a codeword demotes it.
    const Codeword sigma = code[0];
    const Codeword full(neuron_mask(code.n()));
    if (sigma != full && !code.contains(full)) {
      std::vector<Codeword> words(code.begin(), code.end());
      words.push_back(full);
      CHECK_FALSE(maximal_codewords(Code(code.n(), words)).contains(sigma));
    }

    // Adding intersections of maximal codewords keeps a MIC code MIC.
    const Code mic = cli::random_mic_code(rng, 2 + t % 4, 0.3);
    std::vector<Codeword> grown(mic.begin(), mic.end());
    for (Codeword w : intersection_complete(maximal_codewords(mic))) {
      if (std::find(grown.begin(), grown.end(), w) == grown.end()) grown.push_back(w);
    }
    CHECK(is_max_intersection_complete(Code(mic.n(), grown)));
  }
}

TEST_CASE("obstruction witnesses rule out every mode") {
  Rng rng(kSeed ^ 9);
  int witnessed = 0;
  for (int t = 0; t < 150; ++t) {
    std::vector<Codeword> words = {Codeword(1), Codeword(2), Codeword(4)};
    for (Codeword w : cli::random_code(rng, 4, 0.2)) {
      if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    }
    const Code code(4, words);
    if (find_dim1_obstructions(code).empty()) continue;
    ++witnessed;
    for (RealizationMode mode : {RealizationMode::Open, RealizationMode::Closed, RealizationMode::Convex}) {
      CHECK_FALSE(search_realization_1d(code, mode).has_value());
    }
  }
  CHECK(witnessed > 20);
}

TEST_CASE("code maps are monotone") {
  Rng rng(kSeed ^ 10);
  for (int t = 0; t < 500; ++t) {
    const Code code = cli::random_code(rng, 1 + t % 5, 0.3);
    std::vector<ElementaryMap> stages{cli::random_elementary_map(rng, code)};
    if (t % 2 == 0) {
      const Code mid = apply(CodeMap(stages), code);
      stages.push_back(cli::random_elementary_map(rng, mid));
    }
    CHECK(verify_monotone(CodeMap(stages), code));
  }
}

TEST_CASE("iso-type maps carry maximal codewords onto maximal codewords") {
  Rng rng(kSeed ^ 11);
  for (int t = 0; t < 300; ++t) {
    const auto [source, map] = cli::random_iso_instance(rng, cli::random_code(rng, 1 + t % 4, 0.3));
    const MaximalReport report = maximal_correspondence(map, source);
    CHECK(report.iso_type);
    CHECK(report.holds);
  }
}

TEST_CASE("ring endomorphisms preserve one and products") {
  Rng rng(kSeed ^ 12);
  for (int t = 0; t < 1000; ++t) {
    const int m = 1 + t % 8;
    std::uniform_int_distribution<int> value(0, m - 1);
    std::uniform_int_distribution<std::uint64_t> coeffs(0, neuron_mask(m));
    std::vector<int> f(m);
    for (int& v : f) v = value(rng);
    const Endomorphism phi(f);
    const RingElement y(m, coeffs(rng));
    const RingElement z(m, coeffs(rng));
    CHECK(apply_endo(phi, RingElement::one(m)) == RingElement::one(m));
    CHECK(apply_endo(phi, multiply(y, z)) == multiply(apply_endo(phi, y), apply_endo(phi, z)));
    CHECK(apply_endo(phi, add(y, z)) == add(apply_endo(phi, y), apply_endo(phi, z)));

    int total = 0;
    std::uint64_t seen = 0;
    for (int i = 0; i < m; ++i) {
      const RingElement a = phi.image_of_basis(i);
      CHECK((a.coeffs() & seen) == 0);
      seen |= a.coeffs();
      total += a.norm();
    }
    CHECK(total == m);
    CHECK(seen == neuron_mask(m));
  }
}

TEST_CASE("census agrees with the definition-level oracle on random codes") {
  Rng rng(kSeed ^ 13);
  int checked = 0;
  while (checked < 40) {
    const Code code = cli::random_code(rng, 2 + checked % 4, 0.25);
    if (code.size() > 5) continue;
    ++checked;
    const CensusReport got = enumerate_nrh(code);
    const oracle::Census want = oracle::census(code);
    CHECK(got.nrh_total == want.total);
    CHECK(got.bpm_nrh == want.bpm);
    CHECK(got.um_nrh == want.um);
    CHECK(got.other_nrh == want.other);
    CHECK(got.um_nrh == code.size() - (code.size() == 1 ? 1 : 0));
  }
}

TEST_CASE("reordering the code conjugates its neural ring homomorphisms") {
  Rng rng(kSeed ^ 14);
  for (int t = 0; t < 40; ++t) {
    const Code code = cli::random_code(rng, 3, 0.45);
    if (code.size() > 5) continue;
    const int m = static_cast<int>(code.size());
    const std::vector<int> sigma = cli::random_permutation(rng, m);
    std::vector<Codeword> words;
    std::vector<int> pull(m);
    for (int k = 0; k < m; ++k) {
      words.push_back(code[static_cast<std::size_t>(sigma[k])]);
      pull[sigma[k]] = k;
    }
    const Code reordered(code.n(), words);
    const Endomorphism alpha(pull);
    const NeuralTester here(code);
    const NeuralTester there(reordered);
    std::vector<int> f(m, 0);
    while (true) {
      const Endomorphism phi(f);
      CHECK(here.is_neural(phi) == there.is_neural(conjugate(phi, alpha)));
      int pos = 0;
      while (pos < m && ++f[pos] == m) f[pos++] = 0;
      if (pos == m) break;
    }
    CHECK(enumerate_nrh(code).nrh_total == enumerate_nrh(reordered).nrh_total);
  }
}
