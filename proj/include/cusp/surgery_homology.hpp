#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "cusp/rational.hpp"

namespace cusp {

/// Parameters of the cobordism W_q between S^3_q(K0) and S^3_{q+4p}(K1)
/// built from a concordance with p positive double points. r is the odd
/// multiplier of the characteristic class c_r = r * beta_0.
struct CobordismParams {
  std::int64_t q = 1;
  std::int64_t p = 1;
  std::int64_t r = 1;
};

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  bool is_symmetric() const;
  /// Top-left k x k block.
  IntMatrix leading(std::size_t k) const;
  /// Matrix with row i and column j removed.
  IntMatrix minor(std::size_t i, std::size_t j) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

/// Which reading of the intersection matrix of alpha_0, ..., alpha_{p-1}
/// to build. The displayed pattern has corner -q^2; computing alpha_0^2 from
/// alpha_0 = 2E_0 - qE_1 with E_0^2 = q, E_0.E_1 = 2, E_1^2 = -1 gives
/// -q(q+4). Only kPairing has determinant (-1)^p q(q+4p).
enum class MatrixConvention {
  kPairing,          // size p, corner -q(q+4)
  kPrinted,          // size p, corner -q^2
  kPrintedExtended,  // size p+1, corner -q^2
};

std::string_view convention_name(MatrixConvention c);

/// Tridiagonal intersection matrix: diag (c, -2, ..., -2), entry (0,1) = q,
/// other off-diagonal neighbours 1. Requires p >= 1.
IntMatrix build_matrix(const CobordismParams& params, MatrixConvention convention = MatrixConvention::kPairing);

/// Gram matrix of alpha_0 = 2E_0 - qE_1, alpha_j = E_j - E_{j+1} computed from
/// the intersection numbers of E_0, ..., E_p. Independent of build_matrix.
IntMatrix pairing_from_exceptional_classes(std::int64_t p, std::int64_t q);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class matrix_determinant(const IntMatrix& m);

/// (-1)^p q (q + 4p).
mpz_class expected_determinant(std::int64_t p, std::int64_t q);

/// Entry (i, j) of the inverse matrix, via the adjugate. Throws
/// Error{kSingularMatrix}.
Rational inverse_entry(const IntMatrix& m, std::size_t i, std::size_t j);

/// beta_0^2 = (A^{-1})_{00} for the adopted matrix; equals -p / (q(q+4p)).
Rational beta0_squared(const CobordismParams& params);

/// All leading principal minors alternate in sign starting negative.
bool is_negative_definite(const IntMatrix& m);

/// Labels of the restricted Spin^c structures: m1 on S^3_{q+4p}(K1) and m0 on
/// S^3_q(K0), with m1 - m0 = p.
struct SpincRestriction {
  std::int64_t m1 = 0;
  std::int64_t m0 = 0;
  friend bool operator==(const SpincRestriction&, const SpincRestriction&) = default;
};

/// Requires q = r mod 4, (q+4p-r)/4 in [-(q+4p)/2, (q+4p)/2) and
/// (q-r)/4 in [-q/2, q/2). Throws Error{kCongruenceViolated | kRangeViolated}.
SpincRestriction spinc_restriction(const CobordismParams& params);

/// With q = 4m + r > 0, checks exactly that
///   ((-2(m+p)+q+4p)^2 - (q+4p)) / (4(q+4p)) - ((-2m+q)^2 - q) / (4q)
///     - (-r^2 p / (4q(q+4p)) + p/4) == 0,
/// i.e. that the d-invariant inequality collapses to a gap function
/// inequality.
bool c1_identity_check(std::int64_t m, std::int64_t r, std::int64_t p);

}  // namespace cusp
