#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cusp {

/// Characteristic sequence (p; q1, ..., qn) of a cuspidal plane-curve
/// singularity. Only constructible through validate_char_seq, so every
/// instance satisfies
///   p < q1 < ... < qn,
///   gcd(p, q1, ..., q_{k-1}) does not divide q_k for every k,
///   gcd(p, q1, ..., qn) = 1.
class CharSeq {
 public:
  std::int64_t multiplicity() const noexcept { return p_; }
  const std::vector<std::int64_t>& exponents() const noexcept { return q_; }
  /// Number of characteristic exponents n (always >= 1).
  std::size_t length() const noexcept { return q_.size(); }

  /// "p;q1,q2,...", the inverse of parse_char_seq.
  std::string to_string() const;

  friend auto operator<=>(const CharSeq&, const CharSeq&) = default;

 private:
  friend CharSeq validate_char_seq(std::int64_t p, std::span<const std::int64_t> q);
  CharSeq(std::int64_t p, std::vector<std::int64_t> q) : p_(p), q_(std::move(q)) {}

  std::int64_t p_ = 0;
  std::vector<std::int64_t> q_;
};

/// Throws Error{kNotIncreasing | kGcdChainViolated | kGcdNotOne}; the message
/// names the first constraint that fails.
CharSeq validate_char_seq(std::int64_t p, std::span<const std::int64_t> q);

/// Parses "p;q1,q2,...,qn" and validates it.
CharSeq parse_char_seq(std::string_view text);

/// Minimal generators of the semigroup of the singularity:
///   e_0 = p, e_k = gcd(e_{k-1}, q_k),
///   b_0 = p, b_1 = q_1, b_{k+1} = (e_{k-1}/e_k) b_k + q_{k+1} - q_k.
std::vector<std::int64_t> generators_from_char_seq(const CharSeq& c);

/// Closed form for delta from the generators, with no table:
///   conductor = sum_{k=1..n} (e_{k-1}/e_k - 1) b_k - b_0 + 1 = 2 delta.
std::int64_t delta_from_char_seq(const CharSeq& c);

/// A numerical semigroup S (0 in S, closed under +, finite complement).
class Semigroup {
 public:
  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::int64_t delta() const noexcept { return delta_; }
  /// Milnor number of a cuspidal singularity with this semigroup, 2 delta.
  std::int64_t mu() const noexcept { return 2 * delta_; }
  /// Smallest c with [c, inf) contained in S.
  std::int64_t conductor() const noexcept { return conductor_; }
  /// Semigroups of plane-curve singularities are symmetric: conductor = 2 delta.
  bool is_symmetric() const noexcept { return conductor_ == 2 * delta_; }

  bool contains(std::int64_t x) const noexcept;
  /// #(S intersect [0, m)); 0 for m <= 0 and m - delta for m >= conductor.
  std::int64_t count_below(std::int64_t m) const noexcept;
  /// Gaps in increasing order.
  std::vector<std::int64_t> gaps() const;

  /// Membership over [0, conductor].
  const std::vector<bool>& table() const noexcept { return member_; }

 private:
  friend Semigroup semigroup_from_generators(std::span<const std::int64_t> gens);

  std::vector<std::int64_t> generators_;
  std::vector<bool> member_;
  std::vector<std::int64_t> prefix_;  // prefix_[m] = #(S ∩ [0, m)) for m <= conductor
  std::int64_t delta_ = 0;
  std::int64_t conductor_ = 0;
};

/// Sieves the semigroup generated by gens. Throws Error{kGcdNotOne}.
Semigroup semigroup_from_generators(std::span<const std::int64_t> gens);

Semigroup semigroup_of(const CharSeq& c);

/// #(S ∩ [0, m)).
inline std::int64_t count_below(const Semigroup& s, std::int64_t m) { return s.count_below(m); }

/// Gap function I(m) = #{x in Z : x >= m, x not in S}. Negative integers are
/// gaps, so I(m) = delta - m for m <= 0; I(m) = 0 for m >= conductor.
/// For symmetric S: I(2 delta - m) = count_below(S, m) for every integer m.
std::int64_t gap_function_eval(const Semigroup& s, std::int64_t m);

/// Exhaustive closure of {0} ∪ gens under addition on [0, bound]. Slow
/// reference used to cross-check the sieve.
std::vector<bool> brute_force_semigroup(std::span<const std::int64_t> gens, std::int64_t bound);

}  // namespace cusp
