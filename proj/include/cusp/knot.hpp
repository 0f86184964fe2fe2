#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cusp/semigroup.hpp"

namespace cusp {

/// Integer function on Z of the shape of a gap function of genus g:
///   f(m) = g - m  for m <= 0,
///   f(m) = 0      for m >= 2g,
/// and tabulated on [0, 2g] in between. Nonincreasing with steps in {0, 1}.
class GapFunction {
 public:
  GapFunction() : values_{0} {}
  /// values[k] = f(k) for k in [0, 2*genus]; requires values[0] == genus and
  /// values[2*genus] == 0.
  GapFunction(std::int64_t genus, std::vector<std::int64_t> values);

  static GapFunction of(const Semigroup& s);

  std::int64_t genus() const noexcept { return genus_; }
  std::int64_t operator()(std::int64_t m) const noexcept;
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  friend bool operator==(const GapFunction&, const GapFunction&) = default;

 private:
  std::int64_t genus_ = 0;
  std::vector<std::int64_t> values_;
};

/// (f ⋄ h)(k) = min over l in Z of f(k - l) + h(l).
///
/// Only l in [0, 2 g_h] with k - l in [0, 2 g_f] can be optimal: moving l
/// below 0 costs at least as much on h as it saves on f (unit steps), and
/// past 2 g_h the h term is already 0 while f only grows. The result is again
/// gap-shaped with genus g_f + g_h.
GapFunction infimum_convolution(const GapFunction& f, const GapFunction& h);

/// Connected sum of algebraic knots, one summand per characteristic sequence.
/// The empty sum is the unknot. Summands are kept sorted so equal multisets
/// compare equal.
class KnotSpec {
 public:
  KnotSpec() = default;
  explicit KnotSpec(std::vector<CharSeq> summands);

  static KnotSpec unknot() { return KnotSpec(); }

  const std::vector<CharSeq>& summands() const noexcept { return summands_; }
  const std::vector<Semigroup>& semigroups() const noexcept { return semigroups_; }
  bool is_unknot() const noexcept { return summands_.empty(); }
  /// Sum of summand deltas.
  std::int64_t genus() const noexcept { return gap_.genus(); }
  /// I_J = I_1 ⋄ ... ⋄ I_n.
  const GapFunction& gap_function() const noexcept { return gap_; }

  /// "U" for the unknot, otherwise summands joined by '#'.
  std::string to_string() const;

  friend bool operator==(const KnotSpec& a, const KnotSpec& b) { return a.summands_ == b.summands_; }

 private:
  std::vector<CharSeq> summands_;
  std::vector<Semigroup> semigroups_;
  GapFunction gap_;
};

/// Knot grammar: "U" or char-seqs joined by '#', e.g. "4;9#5;61".
KnotSpec parse_knot(std::string_view text);

std::int64_t knot_gap_function(const KnotSpec& k, std::int64_t m);
std::int64_t knot_genus(const KnotSpec& k);

}  // namespace cusp
