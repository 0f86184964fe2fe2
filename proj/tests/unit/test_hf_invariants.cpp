#include <doctest.h>

#include <random>

#include "cusp/hf_invariants.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cusp;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

KnotSpec torus(std::int64_t a, std::int64_t b) { return KnotSpec({cs(a, {b})}); }

std::vector<Piece> expected_pieces(std::initializer_list<std::array<Rational, 4>> rows) {
  std::vector<Piece> out;
  for (const auto& r : rows) out.push_back({r[0], r[1], Line{r[3], r[2]}});
  return out;
}

bool same_pieces(const std::vector<Piece>& a, const std::vector<Piece>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].from != b[i].from || a[i].to != b[i].to || !(a[i].line == b[i].line)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("d-invariants of large surgeries") {
  CHECK(d_invariant_large_surgery({KnotSpec::unknot(), 1, 0}) == 0);
  CHECK(d_invariant_large_surgery({torus(2, 3), 7, 0}) == q(-1, 2));
  CHECK(d_invariant_large_surgery({KnotSpec::unknot(), 3, 1}) == q(-1, 6));
  CHECK(lens_space_term(7, 0) == q(3, 2));

  CHECK_ERROR_CODE(d_invariant_large_surgery({torus(2, 3), 2, 0}), ErrorCode::kNotLargeSurgery);
  CHECK_ERROR_CODE(d_invariant_large_surgery({KnotSpec::unknot(), 0, 0}), ErrorCode::kNotLargeSurgery);
  CHECK_ERROR_CODE(d_invariant_large_surgery({torus(2, 3), 7, 4}), ErrorCode::kSpincOutOfRange);
  CHECK_ERROR_CODE(d_invariant_large_surgery({torus(2, 3), 7, -4}), ErrorCode::kSpincOutOfRange);
  CHECK_NOTHROW(d_invariant_large_surgery({torus(2, 3), 8, -4}));
  CHECK_ERROR_CODE(d_invariant_large_surgery({torus(2, 3), 8, 4}), ErrorCode::kSpincOutOfRange);
}

TEST_CASE("d-invariant properties over random knots") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const KnotSpec k({oracle::random_char_seq(rng, 20), oracle::random_char_seq(rng, 20)});
    const std::int64_t g = k.genus();
    for (std::int64_t s = 2 * g + 1; s <= 2 * g + 6; ++s) {
      for (std::int64_t m = -s / 2; 2 * m < s; ++m) {
        if (2 * m < -s) continue;
        const Rational d = d_invariant_large_surgery({k, s, m});
        // Direct evaluation of the closed formula with the lens space term.
        const Rational lens = make_rational((2 * m - s) * (2 * m - s) - s, 4 * s);
        REQUIRE(d == -2 * k.gap_function()(m + g) + lens);
        REQUIRE(d <= lens);
        // Conjugation symmetry of the Spin^c labels.
        if (2 * -m < s && 2 * -m >= -s) REQUIRE(d == d_invariant_large_surgery({k, s, -m}));
      }
    }
  }
  // Unknot surgeries are lens spaces.
  for (std::int64_t s = 1; s <= 15; ++s) {
    for (std::int64_t m = 0; 2 * m < s; ++m) {
      CHECK(d_invariant_large_surgery({KnotSpec::unknot(), s, m}) == lens_space_term(s, m));
    }
  }
}

TEST_CASE("Upsilon of torus knots") {
  const auto u49 = upsilon(torus(4, 9)).pieces();
  CHECK(same_pieces(u49, expected_pieces({{q(0), q(1, 2), q(-12), q(0)}, {q(1, 2), q(1), q(-4), q(-4)}})));

  const auto u67 = upsilon(torus(6, 7)).pieces();
  CHECK(same_pieces(u67, expected_pieces({{q(0), q(1, 3), q(-15), q(0)},
                                          {q(1, 3), q(2, 3), q(-9), q(-2)},
                                          {q(2, 3), q(1), q(-3), q(-6)}})));

  CHECK(upsilon(torus(2, 3)) == PLFunction::from_line(Line{q(0), q(-1)}));
  CHECK(upsilon(KnotSpec::unknot()) == PLFunction::from_line(Line{q(0), q(0)}));
  CHECK_ERROR_CODE(upsilon(KnotSpec({cs(2, {3}), cs(2, {3})})), ErrorCode::kMultipleSummands);

  const auto diff = pl_subtract(upsilon(torus(4, 9)), upsilon(torus(6, 7))).pieces();
  CHECK(same_pieces(diff, expected_pieces({{q(0), q(1, 3), q(3), q(0)},
                                           {q(1, 3), q(1, 2), q(-3), q(2)},
                                           {q(1, 2), q(2, 3), q(5), q(-2)},
                                           {q(2, 3), q(1), q(-1), q(2)}})));
}

TEST_CASE("Upsilon equals the brute-force maximum on a rational grid") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const CharSeq c = oracle::random_char_seq(rng, 60);
    CAPTURE(c.to_string());
    const PLFunction u = upsilon(KnotSpec({c}));
    CHECK(u.is_convex());
    const std::int64_t g = semigroup_of(c).delta();
    const auto table = oracle::closure(generators_from_char_seq(c), 2 * g + 1);
    for (std::int64_t k = 0; k <= 24; ++k) {
      const Rational t = make_rational(k, 24);
      Rational best = -2 * oracle::count(table, 0) - g * t;
      for (std::int64_t m = 0; m <= 2 * g; ++m) {
        best = std::max<Rational>(best, Rational(-2 * oracle::count(table, m)) + Rational(m - g) * t);
      }
      REQUIRE(u(t) == best);
    }
    CHECK(u(q(0)) == 0);
    // Slope at 0 is -g.
    CHECK(u.pieces().front().line.slope == -g);
  }
}
