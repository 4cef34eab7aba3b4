#include "doctest.h"

#include "ncode/arrangement.hpp"
#include "ncode/cli/figures.hpp"
#include "ncode/code_io.hpp"
#include "ncode/error.hpp"
#include "ncode/search.hpp"
#include "ncode/transform.hpp"
#include "oracles.hpp"

using namespace ncode;

namespace {

Rational q(const char* text) { return parse_rational(text); }

Realization1D open_real(std::vector<std::pair<const char*, const char*>> ends) {
  std::vector<Interval1D> out;
  for (auto [a, b] : ends) out.push_back(Interval1D::open(q(a), q(b)));
  return Realization1D(RealizationMode::Open, out);
}

Realization1D closed_real(std::vector<std::pair<const char*, const char*>> ends) {
  std::vector<Interval1D> out;
  for (auto [a, b] : ends) out.push_back(Interval1D::closed(q(a), q(b)));
  return Realization1D(RealizationMode::Closed, out);
}

bool singleton_free(const Realization1D& u) {
  for (const Interval1D& i : u.intervals()) {
    if (i.is_singleton()) return false;
  }
  return true;
}

bool positive_epsilon(const Realization1D& u) {
  const auto eps = epsilon_distance(u);
  return !eps || *eps > 0;
}

}  // namespace

TEST_CASE("exact rationals") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(Rational(-1, 6)) == "-1/6");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(to_double(Rational(1, 4)) == doctest::Approx(0.25));
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(Interval1D::open(q("1"), q("1")), InvalidRealization);
  CHECK_THROWS_AS(Interval1D::closed(q("2"), q("1")), InvalidRealization);
  CHECK_THROWS_AS(Interval1D(q("1"), q("1"), true, false), InvalidRealization);
  CHECK(Interval1D::point(q("1")).is_singleton());
  CHECK(Interval1D::empty().is_empty());

  const Interval1D half(q("0"), q("1"), true, false);
  CHECK(half.contains(q("0")));
  CHECK_FALSE(half.contains(q("1")));
  CHECK_FALSE(Interval1D::empty().contains(q("0")));
  CHECK(to_string(Interval1D::open(q("5/2"), q("6"))) == "(5/2, 6/1)");
  CHECK(to_string(Interval1D::point(q("1"))) == "[1/1, 1/1]");
  CHECK(to_string(Interval1D::empty()) == "empty");
}

TEST_CASE("realization modes") {
  CHECK_THROWS_AS(Realization1D(RealizationMode::Open, {Interval1D::closed(q("0"), q("1"))}), InvalidRealization);
  CHECK_THROWS_AS(Realization1D(RealizationMode::Closed, {Interval1D::open(q("0"), q("1"))}), InvalidRealization);
  CHECK_NOTHROW(Realization1D(RealizationMode::Convex, {Interval1D(q("0"), q("1"), true, false)}));
  CHECK_NOTHROW(Realization1D(RealizationMode::Open, {Interval1D::empty(), Interval1D::open(q("0"), q("1"))}));
  CHECK(parse_mode("closed") == RealizationMode::Closed);
  CHECK(to_string(RealizationMode::Convex) == "convex");
  CHECK_THROWS_AS(parse_mode("half-open"), ParseError);
}

TEST_CASE("realization JSON") {
  const Realization1D figmip = cli::figmip_realization();
  CHECK(realization_from_json(realization_to_json(figmip)) == figmip);
  const Realization1D mixed(RealizationMode::Convex,
                            {Interval1D(q("0"), q("1"), true, false), Interval1D::empty(), Interval1D::point(q("1/3"))});
  CHECK(realization_from_json(realization_to_json(mixed)) == mixed);
  CHECK(realization_to_json(mixed)["intervals"][1] == "empty");
  CHECK(realization_from_json(nlohmann::json::parse(read_text_file(NCODE_FIXTURES "/three_maximal.realization.json"))) ==
        figmip);
  CHECK_THROWS_AS(realization_from_json(nlohmann::json::parse(R"({"n": 1})")), ParseError);
  CHECK_THROWS_AS(
      realization_from_json(nlohmann::json::parse(R"({"n": 2, "mode": "open", "intervals": ["empty"]})")),
      ParseError);
  CHECK_THROWS_AS(realization_from_json(nlohmann::json::parse(
                      R"({"n": 1, "mode": "open", "intervals": [{"a": "2", "b": "1", "lc": false, "rc": false}]})")),
                  InvalidRealization);
}

TEST_CASE("code of a realization") {
  CHECK(code_of(cli::figmip_realization()) == parse_compact(5, "3 5 12 13 14 45 123 124 145").sorted());
  CHECK(code_of(cli::ex2_realization()).same_set_as(parse_compact(6, "2 4 12 23 45 46")));
  CHECK(code_of(open_real({{"0", "1"}})) == parse_compact(1, "1"));
  CHECK(code_of(closed_real({{"0", "1"}, {"1", "2"}})).same_set_as(parse_compact(2, "1 12 2")));
  CHECK(code_of(open_real({{"0", "1"}, {"1", "2"}})).same_set_as(parse_compact(2, "1 2")));
  CHECK(code_of(Realization1D(RealizationMode::Open, {Interval1D::empty(), Interval1D::open(q("0"), q("1"))})) ==
        parse_compact(2, "2"));
}

TEST_CASE("atoms") {
  const AtomTable ex2 = atoms(cli::ex2_realization());
  const auto two = ex2.find(Codeword::from_neurons({2}));
  REQUIRE(two != ex2.end());
  REQUIRE(two->second.size() == 1);
  CHECK(two->second[0] == Interval1D::point(q("7/2")));

  const AtomTable figmip = atoms(cli::figmip_realization());
  CHECK(figmip.at(Codeword::from_neurons({1, 4, 5})) == std::vector{Interval1D::open(q("5"), q("6"))});
  CHECK(figmip.size() == 9);

  const AtomTable single = atoms(open_real({{"0", "1"}}));
  CHECK(single.at(Codeword::from_neurons({1})) == std::vector{Interval1D::open(q("0"), q("1"))});

  const AtomTable split = atoms(open_real({{"0", "3"}, {"1", "2"}}));
  CHECK(split.at(Codeword::from_neurons({1})) ==
        std::vector{Interval1D(q("0"), q("1"), false, true), Interval1D(q("2"), q("3"), true, false)});
}

TEST_CASE("epsilon distance") {
  CHECK(epsilon_distance(cli::figmip_realization()) == Rational(1, 2));
  CHECK(epsilon_distance(open_real({{"0", "1"}, {"1", "2"}})) == Rational(0));
  CHECK_FALSE(epsilon_distance(open_real({{"0", "1"}})).has_value());
  CHECK(epsilon_distance(open_real({{"0", "1"}}), EpsilonPairs::IncludeSelf) == Rational(1));

  // Far apart short intervals: the distinct-pair reading exceeds the lengths.
  const Realization1D far = open_real({{"0", "1"}, {"10", "20"}});
  CHECK(epsilon_distance(far) == Rational(9));
  CHECK(epsilon_distance(far, EpsilonPairs::IncludeSelf) == Rational(1));
  const Realization1D closed = open_to_closed(far);
  CHECK(closed.mode() == RealizationMode::Closed);
  CHECK(code_of(closed) == code_of(far));
}

TEST_CASE("normalize open epsilon") {
  const Realization1D shared = open_real({{"0", "2"}, {"2", "3"}, {"0", "3"}});
  CHECK(code_of(shared).same_set_as(parse_compact(3, "13 3 23")));
  const Realization1D fixed = normalize_open_epsilon(shared);
  CHECK(positive_epsilon(fixed));
  CHECK(code_of(fixed) == code_of(shared));
  CHECK(fixed.interval(1).b() < 2);

  const Realization1D touching = open_real({{"0", "1"}, {"1", "2"}});
  const Realization1D moved = normalize_open_epsilon(touching);
  CHECK(moved.interval(1).b() < 1);
  CHECK(code_of(moved).same_set_as(parse_compact(2, "1 2")));

  CHECK(normalize_open_epsilon(cli::figmip_realization()) == cli::figmip_realization());
  CHECK_THROWS_AS(normalize_open_epsilon(closed_real({{"0", "1"}})), ModeMismatch);
}

TEST_CASE("desingularize closed") {
  const Realization1D lone(RealizationMode::Closed, {Interval1D::point(q("5")), Interval1D::closed(q("0"), q("1"))});
  const Realization1D grown = desingularize_closed(lone);
  CHECK(singleton_free(grown));
  CHECK(grown.interval(1).contains(q("5")));
  CHECK(code_of(grown).same_set_as(parse_compact(2, "1 2")));

  const Realization1D pinch(RealizationMode::Closed, {Interval1D::closed(q("0"), q("1")),
                                                      Interval1D::closed(q("1"), q("2")), Interval1D::point(q("1"))});
  CHECK(code_of(pinch).same_set_as(parse_compact(3, "1 123 2")));
  const Realization1D opened = desingularize_closed(pinch);
  CHECK(singleton_free(opened));
  CHECK(code_of(opened) == code_of(pinch));

  const Realization1D plain = closed_real({{"0", "1"}, {"2", "3"}});
  CHECK(desingularize_closed(plain) == plain);
  CHECK_THROWS_AS(desingularize_closed(open_real({{"0", "1"}})), ModeMismatch);
}

TEST_CASE("normalize closed epsilon") {
  const Realization1D touching = closed_real({{"0", "1"}, {"1", "2"}});
  const Realization1D fixed = normalize_closed_epsilon(touching);
  CHECK(positive_epsilon(fixed));
  CHECK(code_of(fixed).same_set_as(parse_compact(2, "1 12 2")));

  const Realization1D apart = closed_real({{"0", "1"}, {"2", "3"}});
  CHECK(normalize_closed_epsilon(apart) == apart);

  const Realization1D with_point(RealizationMode::Closed, {Interval1D::closed(q("0"), q("1")), Interval1D::point(q("1"))});
  const Realization1D cleaned = normalize_closed_epsilon(with_point);
  CHECK(singleton_free(cleaned));
  CHECK(positive_epsilon(cleaned));
  CHECK(code_of(cleaned) == code_of(with_point));
}

TEST_CASE("open to closed") {
  const Realization1D figmip = cli::figmip_realization();
  const Realization1D closed = open_to_closed(figmip);
  for (int i = 1; i <= figmip.n(); ++i) {
    CHECK(closed.interval(i) == Interval1D::closed(figmip.interval(i).a() + Rational(1, 6),
                                                   figmip.interval(i).b() - Rational(1, 6)));
  }
  CHECK(code_of(closed) == code_of(figmip));

  CHECK(open_to_closed(open_real({{"0", "1"}})).interval(1) == Interval1D::closed(q("1/3"), q("2/3")));
  CHECK(code_of(open_to_closed(cli::ex2_realization())) == code_of(cli::ex2_realization()));
  CHECK_THROWS_AS(open_to_closed(closed_real({{"0", "1"}})), ModeMismatch);
}

TEST_CASE("closed to open") {
  const Realization1D apart = closed_real({{"0", "1"}, {"2", "3"}});
  const Realization1D open = closed_to_open(apart);
  CHECK(open.interval(1) == Interval1D::open(q("-1/3"), q("4/3")));
  CHECK(open.interval(2) == Interval1D::open(q("5/3"), q("10/3")));
  CHECK(code_of(open).same_set_as(parse_compact(2, "1 2")));

  const Realization1D figmip = cli::figmip_realization();
  CHECK(code_of(closed_to_open(open_to_closed(figmip))) == code_of(figmip));

  const Realization1D single = closed_to_open(closed_real({{"0", "1"}}));
  CHECK(single.interval(1).a() < 0);
  CHECK(single.interval(1).b() > 1);
  CHECK(code_of(single) == parse_compact(1, "1"));
  CHECK_THROWS_AS(closed_to_open(open_real({{"0", "1"}})), ModeMismatch);
}

TEST_CASE("dimension-1 search") {
  const Code bridge = cli::convexity_counterexample();
  const auto convex = search_realization_1d(bridge, RealizationMode::Convex);
  REQUIRE(convex.has_value());
  CHECK(code_of(*convex).same_set_as(bridge));
  CHECK_FALSE(search_realization_1d(bridge, RealizationMode::Open).has_value());
  CHECK_FALSE(search_realization_1d(bridge, RealizationMode::Closed).has_value());

  for (RealizationMode mode : {RealizationMode::Open, RealizationMode::Closed, RealizationMode::Convex}) {
    CHECK_FALSE(search_realization_1d(cli::obstruction_triple_in_maximal(), mode).has_value());
  }

  SearchStats stats;
  const auto figmip = search_realization_1d(cli::figmip_code(), RealizationMode::Open, {5, 1}, &stats);
  REQUIRE(figmip.has_value());
  CHECK(stats.nodes > 0);
  CHECK(figmip->mode() == RealizationMode::Open);
  CHECK(code_of(*figmip).same_set_as(cli::figmip_code()));
  CHECK(check_maximal_atoms(*figmip));

  CHECK_THROWS_AS(search_realization_1d(cli::figmip_code(), RealizationMode::Open), CapacityError);
}

TEST_CASE("search ignores the empty word and unused neurons") {
  const auto found = search_realization_1d(parse_compact(3, "- 1 12"), RealizationMode::Open);
  REQUIRE(found.has_value());
  CHECK(found->interval(3).is_empty());
  CHECK(code_of(*found).same_set_as(parse_compact(3, "1 12")));
}

TEST_CASE("search results do not depend on the worker count") {
  // A path of overlaps: the middle set is split by two disjoint neighbours,
  // which needs one half-open end.
  const Code code = parse_compact(4, "1 12 23 34");
  CHECK_FALSE(search_realization_1d(code, RealizationMode::Closed).has_value());
  const auto one = search_realization_1d(code, RealizationMode::Convex, {4, 1});
  const auto four = search_realization_1d(code, RealizationMode::Convex, {4, 4});
  REQUIRE(one.has_value());
  CHECK(one == four);
}

TEST_CASE("atoms of maximal codewords equal the plain intersections") {
  CHECK(check_maximal_atoms(cli::figmip_realization()));
  CHECK(check_maximal_atoms(cli::ex2_realization()));
  CHECK(check_maximal_atoms(open_real({{"0", "1"}})));
  CHECK(check_maximal_atoms(closed_real({{"0", "1"}, {"1", "2"}})));
}

TEST_CASE("code of a realization agrees with point sampling on the figures") {
  CHECK(oracle::words_of(code_of(cli::figmip_realization())) == oracle::code_by_sampling(cli::figmip_realization()));
  CHECK(oracle::words_of(code_of(cli::ex2_realization())) == oracle::code_by_sampling(cli::ex2_realization()));
}
