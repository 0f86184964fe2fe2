#include <doctest.h>

#include "cusp/surgery_homology.hpp"
#include "helpers.hpp"

using namespace cusp;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Cofactor expansion along the first row; independent of the Bareiss code.
mpz_class cofactor_det(const IntMatrix& m) {
  if (m.size() == 1) return static_cast<long>(m(0, 0));
  mpz_class det = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    const mpz_class term = static_cast<long>(m(0, j)) * cofactor_det(m.minor(0, j));
    det += j % 2 == 0 ? term : mpz_class(-term);
  }
  return det;
}

}  // namespace

TEST_CASE("adopted intersection matrices") {
  CHECK(build_matrix({3, 1, 3}) == from_rows({{-21}}));
  CHECK(build_matrix({3, 2, 3}) == from_rows({{-21, 3}, {3, -2}}));
  CHECK(build_matrix({5, 3, 1}) == from_rows({{-45, 5, 0}, {5, -2, 1}, {0, 1, -2}}));
  CHECK(build_matrix({5, 4, 1}).is_symmetric());
  CHECK_ERROR_CODE(build_matrix({3, 0, 3}), ErrorCode::kValidation);
}

TEST_CASE("printed matrix conventions") {
  CHECK(build_matrix({3, 1, 3}, MatrixConvention::kPrinted) == from_rows({{-9}}));
  CHECK(build_matrix({3, 2, 3}, MatrixConvention::kPrinted) == from_rows({{-9, 3}, {3, -2}}));
  CHECK(build_matrix({5, 3, 1}, MatrixConvention::kPrinted) == from_rows({{-25, 5, 0}, {5, -2, 1}, {0, 1, -2}}));
  CHECK(build_matrix({3, 2, 3}, MatrixConvention::kPrintedExtended) ==
        from_rows({{-9, 3, 0}, {3, -2, 1}, {0, 1, -2}}));
  CHECK(matrix_determinant(build_matrix({3, 1, 3}, MatrixConvention::kPrinted)) == -9);
  CHECK(matrix_determinant(build_matrix({3, 2, 3}, MatrixConvention::kPrinted)) == 9);
  CHECK(matrix_determinant(build_matrix({3, 2, 3}, MatrixConvention::kPrintedExtended)) == -9);
  // Neither printed convention reproduces (-1)^p q(q+4p); both give (-1)^n q^2.
  for (std::int64_t p = 2; p <= 8; ++p) {
    for (std::int64_t qq : {1, 3, 5, 9}) {
      const IntMatrix a = build_matrix({qq, p, 1}, MatrixConvention::kPrinted);
      const IntMatrix b = build_matrix({qq, p, 1}, MatrixConvention::kPrintedExtended);
      const mpz_class q2 = qq * qq;
      CHECK(matrix_determinant(a) == (p % 2 == 0 ? q2 : mpz_class(-q2)));
      CHECK(matrix_determinant(b) == ((p + 1) % 2 == 0 ? q2 : mpz_class(-q2)));
      CHECK(matrix_determinant(a) != expected_determinant(p, qq));
    }
  }
}

TEST_CASE("adopted matrix equals the Gram matrix of the exceptional classes") {
  for (std::int64_t p = 1; p <= 12; ++p) {
    for (std::int64_t qq = -15; qq <= 25; ++qq) {
      REQUIRE(pairing_from_exceptional_classes(p, qq) == build_matrix({qq, p, 1}));
    }
  }
}

TEST_CASE("determinant and inverse entry on the full grid") {
  CHECK(expected_determinant(2, 1) == 9);
  for (std::int64_t p = 1; p <= 12; ++p) {
    for (std::int64_t qq = 1; qq <= 99; qq += 2) {
      const IntMatrix a = build_matrix({qq, p, 1});
      const mpz_class det = matrix_determinant(a);
      REQUIRE(det == expected_determinant(p, qq));
      if (p <= 6) REQUIRE(cofactor_det(a) == det);
      REQUIRE(beta0_squared({qq, p, 1}) == make_rational(-p, qq * (qq + 4 * p)));
      REQUIRE(is_negative_definite(a));
    }
  }
  CHECK(beta0_squared({5, 3, 1}) == make_rational(-3, 85));
  CHECK(beta0_squared({-9, 2, 3}) == make_rational(-2, 9));
  for (std::int64_t qq : {1, 3, 7, 11}) CHECK(beta0_squared({qq, 1, 1}) == make_rational(-1, qq * (qq + 4)));
}

TEST_CASE("determinant edge cases") {
  CHECK(matrix_determinant(IntMatrix(0)) == 1);
  CHECK(matrix_determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(matrix_determinant(from_rows({{0, 0}, {0, 5}})) == 0);
  CHECK(matrix_determinant(from_rows({{0, 2, 1}, {1, 0, 0}, {0, 1, 3}})) == cofactor_det(from_rows({{0, 2, 1}, {1, 0, 0}, {0, 1, 3}})));
  CHECK_ERROR_CODE(inverse_entry(from_rows({{1, 2}, {2, 4}}), 0, 0), ErrorCode::kSingularMatrix);
  CHECK_ERROR_CODE(beta0_squared({0, 2, 0}), ErrorCode::kSingularMatrix);
  CHECK(inverse_entry(from_rows({{2, 1}, {1, 1}}), 0, 1) == -1);
  CHECK(inverse_entry(from_rows({{2, 1}, {1, 1}}), 1, 1) == 2);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite(build_matrix({5, 3, 1})));
  // q + 4p < 0 < q(q + 4p): the leading minors are -45 and 9.
  CHECK(is_negative_definite(build_matrix({-9, 2, 3})));
  CHECK(is_negative_definite(build_matrix({-9, 2, 3}, MatrixConvention::kPrinted)));
  CHECK(is_negative_definite(from_rows({{-4}})));
  CHECK_FALSE(is_negative_definite(build_matrix({-2, 1, 1})));
  CHECK_FALSE(is_negative_definite(from_rows({{-1, 2}, {2, -1}})));
  CHECK_FALSE(is_negative_definite(from_rows({{1}})));
}

TEST_CASE("Spin^c restriction") {
  for (std::int64_t p = 1; p <= 5; ++p) {
    CHECK(spinc_restriction({7, p, 7}) == SpincRestriction{p, 0});
  }
  CHECK(spinc_restriction({7, 2, 3}) == SpincRestriction{3, 1});
  CHECK(spinc_restriction({5, 1, 9}) == SpincRestriction{0, -1});
  CHECK_ERROR_CODE(spinc_restriction({7, 2, 5}), ErrorCode::kCongruenceViolated);
  CHECK_ERROR_CODE(spinc_restriction({3, 1, -13}), ErrorCode::kRangeViolated);
  CHECK_ERROR_CODE(spinc_restriction({1, 1, 17}), ErrorCode::kRangeViolated);
}

TEST_CASE("c1 identity") {
  CHECK(c1_identity_check(0, 1, 1));
  CHECK(c1_identity_check(5, 3, 4));
  CHECK(c1_identity_check(-2, 11, 7));
  std::int64_t checked = 0;
  for (std::int64_t m = -5; m <= 5; ++m) {
    for (std::int64_t r = 1; r <= 19; r += 2) {
      for (std::int64_t p = 1; p <= 10; ++p) {
        if (4 * m + r <= 0) {
          CHECK_ERROR_CODE(c1_identity_check(m, r, p), ErrorCode::kRangeViolated);
          continue;
        }
        REQUIRE(c1_identity_check(m, r, p));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}
