#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "creach/decide.hpp"
#include "creach/oracle.hpp"
#include "creach/rng.hpp"

using namespace creach;

static const RuleVector kFx = parse_rule_vector("9,170,195,80");

static RuleVector rand_rv(int n, SplitMix64& g) {
  RuleVector rv(n);
  for (auto& r : rv) r = Rule{std::uint8_t(g.draw_bits(8))};
  return rv;
}

static Decision run(const std::string& rules, const std::string& s, const std::string& d,
                    DecideOptions opts = {}) {
  return decide(parse_rule_vector(rules), parse_configuration(s), parse_configuration(d), opts);
}

TEST_CASE("fixture decisions") {
  Decision d = run("9,170,195,80", "0000", "0101");
  CHECK(d.reachable);
  CHECK(d.min_steps == 2);
  CHECK(d.explored_edges == 20);

  d = run("9,170,195,80", "0000", "1011");
  CHECK_FALSE(d.reachable);
  CHECK(d.reason == Reason::kCondition1);
  CHECK(d.at_level == 3);
  CHECK(d.explored_edges == 14);

  d = run("9,170,195,80", "1111", "0000");
  CHECK_FALSE(d.reachable);
  CHECK(d.reason == Reason::kCondition2);
  CHECK(d.at_level == 2);

  d = run("9,170,195,80", "1010", "0000");
  CHECK(d.reachable);
  CHECK(d.min_steps == 2);
  CHECK(d.explored_edges == 20);

  CHECK_FALSE(run("9,170,195,80", "0000", "1101").reachable);

  d = run("9,170,195,80", "0110", "0110");
  CHECK(d.reachable);
  CHECK(d.min_steps == 0);
  CHECK(d.explored_edges == 0);  // zero-step witness needs no tree
}

TEST_CASE("a cycle revisits its start under the strict step requirement") {
  DecideOptions strict;
  strict.min_steps_required = 1;
  Decision d = run("9,170,195,80", "0101", "0101", strict);
  CHECK(d.reachable);
  CHECK(d.min_steps == 3);
  CHECK(d.explored_edges == 20);

  // a fixed point one step off its own cycle
  d = run("0,0", "11", "11", strict);
  CHECK_FALSE(d.reachable);
  d = run("0,0", "00", "00", strict);
  CHECK(d.reachable);
  CHECK(d.min_steps == 1);
}

TEST_CASE("frozen ten-cell instance") {
  Decision d = run("8,58,40,57,186,70,13,177,37,22", "1011001101", "0110111011");
  CHECK(d.reachable);
  CHECK(d.min_steps == 1);
  CHECK(d.explored_edges == 178);

  DecideOptions noprune;
  noprune.prune_enabled = false;
  d = run("8,58,40,57,186,70,13,177,37,22", "1011001101", "0110111011", noprune);
  CHECK(d.reachable);
  CHECK(d.min_steps == 1);
  CHECK(d.explored_edges == 870);
}

TEST_CASE("early-abort rows hold for any completion of the free rules") {
  SplitMix64 g(41);
  for (int n = 3; n <= 8; ++n)
    for (int it = 0; it < 20; ++it) {
      RuleVector rv = rand_rv(n, g);
      Configuration S{g.draw_bits128(n), n}, D{g.draw_bits128(n), n};

      rv[0] = Rule{8};
      rv[1] = Rule{58};
      S.val = (S.val & ((u128{1} << (n - 2)) - 1)) | u128{0b10} << (n - 2);
      D.val = (D.val & ((u128{1} << (n - 2)) - 1)) | u128{0b11} << (n - 2);
      Decision d = decide(rv, S, D);
      CHECK_FALSE(d.reachable);
      CHECK(d.reason == Reason::kCondition1);
      CHECK(d.at_level == 1);

      rv[0] = Rule{10};
      rv[1] = Rule{164};
      S.val &= (u128{1} << (n - 2)) - 1;
      D.val = (D.val & ((u128{1} << (n - 2)) - 1)) | u128{0b10} << (n - 2);
      d = decide(rv, S, D);
      CHECK_FALSE(d.reachable);
      CHECK(d.reason == Reason::kCondition2);
      CHECK(d.at_level == 1);

      rv[0] = Rule{7};
      rv[1] = Rule{72};
      rv[2] = Rule{254};
      S.val = (S.val & ((u128{1} << (n - 3)) - 1)) | u128{0b111} << (n - 3);
      D.val = (D.val & ((u128{1} << (n - 3)) - 1)) | u128{0b011} << (n - 3);
      d = decide(rv, S, D);
      CHECK_FALSE(d.reachable);
      CHECK(d.reason == Reason::kNoPath);
      CHECK(d.at_level == 2);
    }
}

TEST_CASE("agreement with the brute-force oracle") {
  SplitMix64 g(42);
  auto sweep = [&](int n, int rvs, bool exhaustive, int min_req) {
    DecideOptions opts;
    opts.min_steps_required = min_req;
    for (int it = 0; it < rvs; ++it) {
      RuleVector rv = rand_rv(n, g);
      long long pairs = exhaustive ? (1ll << (2 * n)) : 200;
      for (long long p = 0; p < pairs; ++p) {
        Configuration S{0, n}, D{0, n};
        if (exhaustive) {
          S.val = u128(p) >> n;
          D.val = u128(p) & ((u64{1} << n) - 1);
        } else {
          S.val = g.draw_bits128(n);
          D.val = g.draw_bits128(n);
        }
        Decision got = decide(rv, S, D, opts);
        auto want = oracle_decide(rv, S, D, min_req);
        REQUIRE(got.reachable == want.has_value());
        if (want) REQUIRE(got.min_steps == *want);
      }
    }
  };
  for (int n = 2; n <= 6; ++n) sweep(n, 6, true, 0);
  for (int n = 2; n <= 5; ++n) sweep(n, 4, true, 1);
  for (int n = 7; n <= 10; ++n) {
    sweep(n, 5, false, 0);
    sweep(n, 3, false, 1);
  }
}

TEST_CASE("aborts never contradict the plain search") {
  SplitMix64 g(43);
  DecideOptions plain;
  plain.shortcuts_enabled = false;
  int fired = 0;
  for (int it = 0; it < 400; ++it) {
    int n = 2 + int(g.draw_bits(2));
    RuleVector rv = rand_rv(n, g);
    Configuration S{g.draw_bits128(n), n}, D{g.draw_bits128(n), n};
    Decision d = decide(rv, S, D);
    Decision p = decide(rv, S, D, plain);
    CHECK(d.reachable == p.reachable);
    if (d.reachable) CHECK(d.min_steps == p.min_steps);
    if (!d.reachable && d.reason != Reason::kNoPath) {
      ++fired;
      CHECK(p.at_level >= d.at_level);  // the abort can only be earlier
    }
  }
  CHECK(fired > 20);
}

TEST_CASE("pruning changes the work, never the answer") {
  SplitMix64 g(44);
  DecideOptions noprune;
  noprune.prune_enabled = false;
  for (int it = 0; it < 400; ++it) {
    int n = 2 + int(g.draw_bits(3));
    RuleVector rv = rand_rv(n, g);
    Configuration S{g.draw_bits128(n), n}, D{g.draw_bits128(n), n};
    Decision a = decide(rv, S, D);
    Decision b = decide(rv, S, D, noprune);
    CHECK(a.reachable == b.reachable);
    if (a.reachable) CHECK(a.min_steps == b.min_steps);
    CHECK(a.explored_edges <= b.explored_edges);
  }
}

TEST_CASE("edge counter bounds") {
  SplitMix64 g(45);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + int(g.draw_bits(3));
    RuleVector rv = rand_rv(n, g);
    Configuration S{g.draw_bits128(n), n};
    Configuration D{g.draw_bits128(n), n};
    Decision d = decide(rv, S, D);
    CHECK(d.explored_edges <= (u64{1} << (n + 1)) - 2);
    if (d.reachable && d.min_steps > 0) CHECK(d.explored_edges >= 2 * u64(n));
  }
}

TEST_CASE("kept edges always descend from kept parents") {
  SplitMix64 g(46);
  for (int it = 0; it < 150; ++it) {
    int n = 3 + int(g.draw_bits(2));
    RuleVector rv = rand_rv(n, g);
    Configuration S{g.draw_bits128(n), n};
    Configuration D = evolve_t(rv, S, g.draw_bits(2));
    DecideTrace trace;
    DecideOptions opts;
    opts.trace = &trace;
    Decision d = decide(rv, S, D, opts);
    REQUIRE(d.reachable);
    for (std::size_t i = 1; i < trace.kept.size(); ++i)
      for (PathVal p : trace.kept[i])
        CHECK(std::binary_search(trace.kept[i - 1].begin(), trace.kept[i - 1].end(), p >> 1));
  }
}

TEST_CASE("count_edges toggles the counter output") {
  DecideOptions off;
  off.count_edges = false;
  CHECK(run("9,170,195,80", "0000", "0101", off).explored_edges == 0);
}

TEST_CASE("shortest-step helper") {
  CHECK(min_steps(kFx, parse_configuration("0000"), parse_configuration("0101")) == 2);
  CHECK(min_steps(kFx, parse_configuration("0000"), parse_configuration("1011")) ==
        std::nullopt);
  SplitMix64 g(47);
  for (int it = 0; it < 50; ++it) {
    int n = 2 + int(g.draw_bits(2));
    RuleVector rv = rand_rv(n, g);
    Configuration X{g.draw_bits128(n), n};
    CHECK(min_steps(rv, X, X) == 0);
    auto one = min_steps(rv, X, evolve(rv, X));
    REQUIRE(one.has_value());
    CHECK((*one == 0 || *one == 1));  // zero exactly when X is a fixed point
    CHECK((*one == 1) == (evolve(rv, X) != X));
  }
}

TEST_CASE("malformed decide inputs") {
  CHECK_THROWS_AS(run("9,170", "0", "00"), std::invalid_argument);
  CHECK_THROWS_AS(run("9,170", "000", "000"), std::invalid_argument);
  CHECK_THROWS_AS(decide(RuleVector{}, parse_configuration("0"), parse_configuration("0")),
                  std::invalid_argument);
  DecideOptions bad;
  bad.min_steps_required = 2;
  CHECK_THROWS_AS(run("9,170", "00", "00", bad), std::invalid_argument);
}
