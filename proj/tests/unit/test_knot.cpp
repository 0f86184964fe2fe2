#include <doctest.h>

#include <random>

#include "cusp/knot.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cusp;

namespace {

KnotSpec torus(std::int64_t a, std::int64_t b) { return KnotSpec({cs(a, {b})}); }

// Gap function of a single semigroup evaluated from the closure oracle.
auto oracle_gap(const CharSeq& c) {
  const std::int64_t d = semigroup_of(c).delta();
  auto table = oracle::closure(generators_from_char_seq(c), 2 * d + 1);
  return [table](std::int64_t m) { return oracle::gaps_at_least(table, m); };
}

}  // namespace

TEST_CASE("GapFunction basics") {
  const GapFunction unknot;
  CHECK(unknot.genus() == 0);
  CHECK(unknot(0) == 0);
  CHECK(unknot(5) == 0);
  CHECK(unknot(-3) == 3);

  const GapFunction f = GapFunction::of(semigroup_of(cs(2, {3})));
  CHECK(f.genus() == 1);
  CHECK(f.values() == std::vector<std::int64_t>{1, 1, 0});
  CHECK(f(-2) == 3);
  CHECK(f(7) == 0);

  CHECK_ERROR_CODE(GapFunction(1, {1, 0}), ErrorCode::kValidation);
  CHECK_ERROR_CODE(GapFunction(1, {0, 1, 0}), ErrorCode::kValidation);
  CHECK_ERROR_CODE(GapFunction(-1, {}), ErrorCode::kValidation);
}

TEST_CASE("infimum_convolution examples") {
  const auto t23 = torus(2, 3);
  const GapFunction twice = infimum_convolution(t23.gap_function(), t23.gap_function());
  const auto g = oracle_gap(cs(2, {3}));
  CHECK(twice(2) == 1);
  CHECK(oracle::min_plus(g, g, 2, -10, 10) == 1);

  const KnotSpec big({cs(4, {9}), cs(5, {61})});
  CHECK(big.genus() == 12 + 120);
  CHECK(big.gap_function()(2 * (12 + 120)) == 0);
}

TEST_CASE("knot_gap_function and knot_genus") {
  CHECK(knot_gap_function(KnotSpec::unknot(), 0) == 0);
  CHECK(knot_gap_function(KnotSpec::unknot(), 17) == 0);
  CHECK(knot_gap_function(torus(6, 7), 29) == 1);
  CHECK(knot_gap_function(torus(6, 7), 30) == 0);
  for (std::int64_t a : {5, 7, 9}) {
    for (std::int64_t b : {6, 7, 8, 9}) {
      const KnotSpec k({cs(4, {a}), cs(5, {b})});
      CHECK(knot_gap_function(k, 0) == semigroup_of(cs(4, {a})).delta() + semigroup_of(cs(5, {b})).delta());
    }
  }
  CHECK(knot_genus(torus(6, 7)) == 15);
  CHECK(knot_genus(torus(4, 9)) == 12);
  CHECK(knot_genus(KnotSpec({cs(2, {3}), cs(2, {3})})) == 2);
  CHECK(knot_genus(KnotSpec::unknot()) == 0);
}

TEST_CASE("parse_knot grammar") {
  CHECK(parse_knot("U").is_unknot());
  CHECK(parse_knot(" u ").is_unknot());
  CHECK(parse_knot("2;3#2;3").genus() == 2);
  CHECK(parse_knot("6;7 # 4;9") == KnotSpec({cs(4, {9}), cs(6, {7})}));
  CHECK(parse_knot("6;7#4;9").to_string() == "4;9#6;7");
  CHECK(KnotSpec::unknot().to_string() == "U");
  CHECK_ERROR_CODE(parse_knot(""), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_knot("#"), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_knot("2;3#"), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_knot("2;4"), ErrorCode::kGcdNotOne);
}

TEST_CASE("convolution matches an exhaustive min-plus over a wide window") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const CharSeq a = oracle::random_char_seq(rng, 30);
    const CharSeq b = oracle::random_char_seq(rng, 30);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    const KnotSpec k({a, b});
    const auto fa = oracle_gap(a);
    const auto fb = oracle_gap(b);
    const std::int64_t g = k.genus();
    CHECK(g == semigroup_of(a).delta() + semigroup_of(b).delta());
    for (std::int64_t m = -3; m <= 2 * g + 3; ++m) {
      REQUIRE(k.gap_function()(m) == oracle::min_plus(fa, fb, m, -2 * g - 10, 2 * g + 10));
    }
    // Gap-shaped: drops by 0 or 1, from g at 0 down to 0 at 2g.
    for (std::int64_t m = -3; m <= 2 * g + 3; ++m) {
      const std::int64_t step = k.gap_function()(m) - k.gap_function()(m + 1);
      REQUIRE((step == 0 || step == 1));
    }
  }
}

TEST_CASE("convolution is commutative and associative") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = GapFunction::of(semigroup_of(oracle::random_char_seq(rng, 25)));
    const auto g = GapFunction::of(semigroup_of(oracle::random_char_seq(rng, 25)));
    const auto h = GapFunction::of(semigroup_of(oracle::random_char_seq(rng, 25)));
    CHECK(infimum_convolution(f, g) == infimum_convolution(g, f));
    CHECK(infimum_convolution(infimum_convolution(f, g), h) == infimum_convolution(f, infimum_convolution(g, h)));
    CHECK(infimum_convolution(f, GapFunction()) == f);
  }
}

TEST_CASE("connected sums do not depend on summand order") {
  const KnotSpec a({cs(4, {9}), cs(6, {7}), cs(2, {3})});
  const KnotSpec b({cs(2, {3}), cs(4, {9}), cs(6, {7})});
  CHECK(a == b);
  CHECK(a.gap_function() == b.gap_function());
}
