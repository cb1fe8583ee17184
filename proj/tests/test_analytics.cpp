#include <random>

#include "doctest.h"
#include "mostar/analytics.hpp"
#include "mostar/constructions.hpp"
#include "mostar/error.hpp"
#include "mostar/graph6.hpp"

using namespace mostar;

TEST_SUITE_BEGIN("analytics");

TEST_CASE("rational rendering") {
  CHECK(Rational::reduced(144, 21) == Rational{48, 7});
  CHECK(Rational{48, 7}.decimal(3) == "6.857");
  CHECK(Rational{35, 3}.decimal(3) == "11.667");
  CHECK(Rational{1, 2000}.decimal(3) == "0.001");  // half rounds up
  CHECK(Rational{-1, 2000}.decimal(3) == "-0.001");
  CHECK(Rational{3, 1}.decimal(3) == "3.000");
  CHECK(Rational{0, 1}.decimal(0) == "0");
}

TEST_CASE("histogram parity views and mode tie-break") {
  Histogram h;
  h.add(0);
  h.add(2);
  CHECK(pick_mode(h) == ValueCount{2, 1});
  h.add(9, 3);
  h.add(4, 5);
  CHECK(h.mass() == 10);
  CHECK(h.even().mass + h.odd().mass == h.mass());
  CHECK(h.even().peak == ValueCount{4, 5});
  CHECK(h.odd().min == 9);
  CHECK(h.odd().max == 9);
  CHECK(h.count(7) == 0);
}

TEST_CASE("stats rows for small orders") {
  Census census(2);
  const auto r1 = stats_from_histogram(1, census.histogram(1));
  CHECK(r1.count == 1);
  CHECK(r1.min.value == 0);
  CHECK(r1.max.value == 0);

  const auto r2 = stats_row(census.stream(2));
  CHECK(r2.count == 1);
  CHECK(r2.max == ValueCount{0, 1});
  CHECK(r2.average == Rational{0, 1});

  const auto r5 = stats_row(census.stream(5));
  CHECK(r5.count == 21);
  CHECK(r5.min == ValueCount{0, 2});
  CHECK(r5.max == ValueCount{12, 2});
  CHECK(r5.mode == ValueCount{8, 6});
  CHECK(r5.average_3dp() == "6.857");

  const auto &h3 = census.histogram(3);
  CHECK(h3.counts() == std::map<std::int64_t, std::uint64_t>{{0, 1}, {2, 1}});
  CHECK(stats_from_histogram(3, h3).mode == ValueCount{2, 1});
  CHECK(census.histogram(4).counts() ==
        std::map<std::int64_t, std::uint64_t>{{0, 2}, {4, 3}, {6, 1}});
}

TEST_CASE("stream errors") {
  CHECK_THROWS_AS(stats_row(GraphStream{}), Error);
  try {
    stats_row(GraphStream({"Bw", "C~"}));
    FAIL("expected MixedOrder");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::MixedOrder);
  }
  try {
    mo_histogram(GraphStream{});
    FAIL("expected EmptyStream");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::EmptyStream);
  }
}

TEST_CASE("histogram merge is chunking independent") {
  Census census(1);
  const auto &s = census.stream(6);
  const Histogram whole = mo_histogram(s, 1);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> a;
    std::vector<std::string> b;
    std::bernoulli_distribution coin(0.5);
    for (const auto &r : s.records()) (coin(rng) ? a : b).push_back(r);
    Histogram merged;
    if (!a.empty()) merged.merge(mo_histogram(GraphStream(a)));
    if (!b.empty()) merged.merge(mo_histogram(GraphStream(b)));
    CHECK(merged == whole);
  }
  const auto row = stats_row(s);
  const auto again = stats_from_histogram(6, whole);
  CHECK(row.mode == again.mode);
  CHECK(row.average == again.average);
  CHECK(row.count == whole.mass());
}

TEST_CASE("realizer table and first realizer") {
  Census census;
  const auto t = realizer_table(census, 7, 10);
  CHECK(t.at(4, 7) == 12);
  CHECK(t.at(9, 6) == 1);
  CHECK(t.at(2, 4) == 0);
  CHECK(t.at(8, 5) == 6);
  CHECK(first_realizer_order(census, 2, 7) == 3);
  CHECK(first_realizer_order(census, 6, 7) == 4);
  CHECK(first_realizer_order(census, 7, 7) == 5);
  CHECK_FALSE(first_realizer_order(census, 3, 7).has_value());
  CHECK_THROWS_AS(realizer_table(census, 11, 10), Error);
  CHECK_THROWS_AS(first_realizer_order(census, 1, 7), Error);
}

TEST_CASE("verification suites on small orders") {
  Census census;
  for (const auto &id : suite_ids()) {
    const auto report = verify_suite(census, id, 7);
    CHECK(report.suite == id);
    CHECK(report.passed());
    for (const auto &c : report.claims) {
      CHECK(c.counterexamples == 0);
      CHECK(c.first_counterexample.has_value() == (c.counterexamples > 0));
    }
  }
  const auto gap = verify_suite(census, "small_gap", 7);
  CHECK(gap.claim("no_mostar_1")->population == 1 + 1 + 2 + 6 + 21 + 112 + 853);
  CHECK(gap.observation("mostar_3_count_order_7") == 0);
  const auto trees = verify_suite(census, "trees", 7);
  // trees on 1..7 vertices: 1, 1, 1, 2, 3, 6, 11
  CHECK(trees.claim("tree_mostar_even")->population == 25);
  try {
    verify_suite(census, "nope", 5);
    FAIL("expected UnknownSuite");
  } catch (const Error &e) {
    CHECK(e.code() == Errc::UnknownSuite);
  }
}

TEST_CASE("a counterexample to a proved claim fails the report") {
  VerificationReport r{"x", {{"a", true, 3, 1, "Bw"}, {"b", false, 3, 2, "Bg"}}, {}};
  CHECK_FALSE(r.passed());
  r.claims[0].counterexamples = 0;
  CHECK(r.passed());
  CHECK(r.claim("c") == nullptr);
}

TEST_SUITE_END();
