#pragma once

#include <cstdint>
#include <vector>

#include "cusp/knot.hpp"
#include "cusp/pl_function.hpp"
#include "cusp/rational.hpp"

namespace cusp {

/// Large integer surgery S^3_s(K) with the Spin^c structure labelled by
/// m in [-s/2, s/2).
struct SurgeryDescriptor {
  KnotSpec knot;
  std::int64_t coefficient = 0;
  std::int64_t spinc = 0;
};

/// d(S^3_s(K), s_m) = -2 I_K(m + g) + ((2m - s)^2 - s) / (4s), valid for
/// s > 2g. The lens-space term uses -s in the numerator, so that the unknot
/// with s = 1 gives d(S^3) = 0.
///
/// Throws Error{kNotLargeSurgery} when s <= 2g and Error{kSpincOutOfRange}
/// when m is outside [-s/2, s/2).
Rational d_invariant_large_surgery(const SurgeryDescriptor& desc);

/// The d-invariant of the lens space L(s,1) in the same labelling (I = 0).
Rational lens_space_term(std::int64_t s, std::int64_t m);

/// Lines t -> -2 #(S ∩ [0,m)) + (m - g) t for m = 0..2g; their upper
/// envelope is Upsilon on [0, 1].
std::vector<Line> upsilon_lines(const Semigroup& s);

/// Upsilon of an algebraic knot restricted to [0, 1]:
///   Upsilon(t) = -2 min_{m in 0..2g} (#(S ∩ [0,m)) + t (g - m) / 2).
/// On [1, 2] it is determined by Upsilon(2 - t) = Upsilon(t).
/// The unknot gives the zero function. Throws Error{kMultipleSummands} for a
/// connected sum of two or more knots.
PLFunction upsilon(const KnotSpec& k);

}  // namespace cusp
