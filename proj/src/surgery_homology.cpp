#include "cusp/surgery_homology.hpp"

#include <utility>

#include "cusp/error.hpp"

namespace cusp {

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::leading(std::size_t k) const {
  IntMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::minor(std::size_t row, std::size_t col) const {
  IntMatrix out(n_ - 1);
  for (std::size_t i = 0, oi = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n_; ++j) {
      if (j == col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

std::string_view convention_name(MatrixConvention c) {
  switch (c) {
    case MatrixConvention::kPairing: return "pairing";
    case MatrixConvention::kPrinted: return "printed";
    case MatrixConvention::kPrintedExtended: return "printed-extended";
  }
  return "unknown";
}

IntMatrix build_matrix(const CobordismParams& params, MatrixConvention convention) {
  const std::int64_t p = params.p;
  const std::int64_t q = params.q;
  if (p < 1) throw Error(ErrorCode::kValidation, "double point count p must be at least 1");
  const std::size_t n = static_cast<std::size_t>(convention == MatrixConvention::kPrintedExtended ? p + 1 : p);
  IntMatrix a(n);
  a(0, 0) = convention == MatrixConvention::kPairing ? -q * (q + 4) : -q * q;
  for (std::size_t i = 1; i < n; ++i) a(i, i) = -2;
  if (n > 1) a(0, 1) = a(1, 0) = q;
  for (std::size_t i = 1; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = 1;
  return a;
}

IntMatrix pairing_from_exceptional_classes(std::int64_t p, std::int64_t q) {
  const std::size_t dim = static_cast<std::size_t>(p) + 1;  // E_0, ..., E_p
  IntMatrix form(dim);
  form(0, 0) = q;
  for (std::size_t i = 1; i < dim; ++i) {
    form(i, i) = -1;
    form(0, i) = form(i, 0) = 2;
  }
  // Coordinates of alpha_0, ..., alpha_{p-1} in the E basis.
  std::vector<std::vector<std::int64_t>> alpha(static_cast<std::size_t>(p), std::vector<std::int64_t>(dim, 0));
  alpha[0][0] = 2;
  alpha[0][1] = -q;
  for (std::size_t j = 1; j < alpha.size(); ++j) {
    alpha[j][j] = 1;
    alpha[j][j + 1] = -1;
  }
  IntMatrix gram(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      std::int64_t sum = 0;
      for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) sum += alpha[i][a] * form(a, b) * alpha[j][b];
      }
      gram(i, j) = sum;
    }
  }
  return gram;
}

mpz_class matrix_determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  }
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

mpz_class expected_determinant(std::int64_t p, std::int64_t q) {
  mpz_class out = mpz_class(static_cast<long>(q)) * mpz_class(static_cast<long>(q + 4 * p));
  return p % 2 == 0 ? out : mpz_class(-out);
}

Rational inverse_entry(const IntMatrix& m, std::size_t i, std::size_t j) {
  const mpz_class det = matrix_determinant(m);
  if (det == 0) throw Error(ErrorCode::kSingularMatrix, "intersection matrix is singular");
  // (A^{-1})_{ij} = C_{ji} / det A, with C the cofactor matrix.
  mpz_class cofactor = matrix_determinant(m.minor(j, i));
  if ((i + j) % 2 == 1) cofactor = -cofactor;
  Rational out(cofactor, det);
  out.canonicalize();
  return out;
}

Rational beta0_squared(const CobordismParams& params) {
  return inverse_entry(build_matrix(params), 0, 0);
}

bool is_negative_definite(const IntMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    const int sign = sgn(matrix_determinant(m.leading(k)));
    if (sign != (k % 2 == 1 ? -1 : 1)) return false;
  }
  return true;
}

namespace {

// x in [-|s|/2, |s|/2)  <=>  -|s| <= 2x < |s|
bool in_spinc_range(std::int64_t x, std::int64_t s) {
  const std::int64_t abs_s = s < 0 ? -s : s;
  return -abs_s <= 2 * x && 2 * x < abs_s;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

SpincRestriction spinc_restriction(const CobordismParams& params) {
  const std::int64_t q = params.q;
  const std::int64_t p = params.p;
  const std::int64_t r = params.r;
  if (floor_mod(q - r, 4) != 0) {
    throw Error(ErrorCode::kCongruenceViolated,
                "q = " + std::to_string(q) + " and r = " + std::to_string(r) + " must agree mod 4");
  }
  const std::int64_t m1 = (q + 4 * p - r) / 4;
  const std::int64_t m0 = (q - r) / 4;
  if (!in_spinc_range(m1, q + 4 * p)) {
    throw Error(ErrorCode::kRangeViolated, "(q+4p-r)/4 = " + std::to_string(m1) +
                                               " is outside [-(q+4p)/2, (q+4p)/2) for q+4p = " +
                                               std::to_string(q + 4 * p));
  }
  if (!in_spinc_range(m0, q)) {
    throw Error(ErrorCode::kRangeViolated, "(q-r)/4 = " + std::to_string(m0) +
                                               " is outside [-q/2, q/2) for q = " + std::to_string(q));
  }
  return {m1, m0};
}

bool c1_identity_check(std::int64_t m, std::int64_t r, std::int64_t p) {
  const std::int64_t q = 4 * m + r;
  if (q <= 0) throw Error(ErrorCode::kRangeViolated, "c1 identity needs q = 4m + r > 0");
  const Rational qq = make_rational(q);
  const Rational big = make_rational(q + 4 * p);
  const Rational a = make_rational(-2 * (m + p) + q + 4 * p);
  const Rational b = make_rational(-2 * m + q);
  const Rational rr = make_rational(r);
  const Rational pp = make_rational(p);
  const Rational lhs = (a * a - big) / (4 * big) - (b * b - qq) / (4 * qq);
  const Rational rhs = -rr * rr * pp / (4 * qq * big) + pp / 4;
  return lhs - rhs == 0;
}

}  // namespace cusp
