#include "cusp/hf_invariants.hpp"

#include "cusp/error.hpp"

namespace cusp {

Rational lens_space_term(std::int64_t s, std::int64_t m) {
  const Rational two_m_minus_s = make_rational(2 * m - s);
  return (two_m_minus_s * two_m_minus_s - s) / (4 * make_rational(s));
}

Rational d_invariant_large_surgery(const SurgeryDescriptor& desc) {
  const std::int64_t s = desc.coefficient;
  const std::int64_t g = desc.knot.genus();
  if (s <= 2 * g) {
    throw Error(ErrorCode::kNotLargeSurgery, "surgery coefficient s = " + std::to_string(s) +
                                                 " must exceed 2g = " + std::to_string(2 * g));
  }
  const std::int64_t m = desc.spinc;
  if (2 * m < -s || 2 * m >= s) {
    throw Error(ErrorCode::kSpincOutOfRange,
                "Spin^c label m = " + std::to_string(m) + " is outside [-s/2, s/2) for s = " + std::to_string(s));
  }
  return make_rational(-2 * knot_gap_function(desc.knot, m + g)) + lens_space_term(s, m);
}

std::vector<Line> upsilon_lines(const Semigroup& s) {
  const std::int64_t g = s.delta();
  std::vector<Line> lines;
  lines.reserve(static_cast<std::size_t>(2 * g + 1));
  for (std::int64_t m = 0; m <= 2 * g; ++m) {
    lines.push_back(Line{make_rational(-2 * s.count_below(m)), make_rational(m - g)});
  }
  return lines;
}

PLFunction upsilon(const KnotSpec& k) {
  if (k.is_unknot()) return PLFunction::from_line(Line{Rational(0), Rational(0)});
  if (k.summands().size() > 1) {
    throw Error(ErrorCode::kMultipleSummands,
                "Upsilon is only available for a single algebraic knot, got " + k.to_string());
  }
  const auto lines = upsilon_lines(k.semigroups().front());
  return pl_upper_envelope(lines);
}

}  // namespace cusp
