#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cusp/rational.hpp"

namespace cusp {

/// t -> intercept + slope * t.
struct Line {
  Rational intercept;
  Rational slope;

  Rational at(const Rational& t) const { return intercept + slope * t; }
  friend bool operator==(const Line&, const Line&) = default;
};

/// Affine piece of a PLFunction on [from, to].
struct Piece {
  Rational from;
  Rational to;
  Line line;
};

/// Continuous piecewise-linear function on [0, 1] with exact rational
/// breakpoints. Breakpoints strictly increase from 0 to 1; the function is
/// affine between consecutive breakpoints. Redundant breakpoints (equal
/// slopes on both sides) are removed on construction.
class PLFunction {
 public:
  PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

  /// The affine function on all of [0, 1].
  static PLFunction from_line(const Line& line);

  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::vector<Piece> pieces() const;

  /// Exact evaluation; t must lie in [0, 1].
  Rational operator()(const Rational& t) const;

  bool is_convex() const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// Pointwise maximum of the lines on [0, 1]. Lines that never attain the
/// maximum on a set of positive length do not produce breakpoints.
PLFunction pl_upper_envelope(std::span<const Line> lines);

PLFunction pl_subtract(const PLFunction& f, const PLFunction& g);
PLFunction pl_add(const PLFunction& f, const PLFunction& g);

/// Decides f <= g on [0, 1]. Both sides are affine between merged
/// breakpoints, so checking those is exhaustive. Returns the smallest
/// breakpoint t with f(t) > g(t), or nullopt when f <= g everywhere.
std::optional<Rational> pl_compare(const PLFunction& f, const PLFunction& g);

}  // namespace cusp
