#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cusp/knot.hpp"
#include "cusp/rational.hpp"
#include "cusp/semigroup.hpp"

namespace cusp {

enum class Verdict { kObstructed, kNotObstructed, kInapplicable };

std::string_view verdict_name(Verdict v);

/// Result of one criterion. witness is set exactly when the verdict is
/// kObstructed; reason explains kInapplicable.
template <class Witness>
struct Outcome {
  Verdict verdict = Verdict::kNotObstructed;
  std::optional<Witness> witness;
  std::string reason;

  static Outcome obstructed(Witness w) { return {Verdict::kObstructed, std::move(w), {}}; }
  static Outcome not_obstructed() { return {Verdict::kNotObstructed, std::nullopt, {}}; }
  static Outcome inapplicable(std::string why) { return {Verdict::kInapplicable, std::nullopt, std::move(why)}; }
};

/// A cuspidal singularity `central` deformed so that the nearby fibre carries
/// the cuspidal singularities `targets`. A delta-constant deformation forces
/// sum delta(targets) <= delta(central); the difference is the double point
/// count of the associated concordance from #targets to central.
class DeformationProblem {
 public:
  /// Throws Error{kInvalidProblem} when targets is empty or the target deltas
  /// exceed the central delta.
  static DeformationProblem make(CharSeq central, std::vector<CharSeq> targets, bool delta_constant = true);

  const CharSeq& central() const noexcept { return central_; }
  const std::vector<CharSeq>& targets() const noexcept { return targets_; }
  const Semigroup& central_semigroup() const noexcept { return central_semigroup_; }
  const std::vector<Semigroup>& target_semigroups() const noexcept { return target_semigroups_; }
  bool delta_constant() const noexcept { return delta_constant_; }

  std::int64_t central_delta() const noexcept { return central_semigroup_.delta(); }
  std::int64_t target_delta_sum() const noexcept;
  /// delta(central) - sum delta(targets) >= 0.
  std::int64_t double_points() const noexcept { return central_delta() - target_delta_sum(); }

  /// The knot the concordance starts from (#targets) and the one it ends at.
  KnotSpec target_knot() const { return KnotSpec(targets_); }
  KnotSpec central_knot() const { return KnotSpec({central_}); }

 private:
  DeformationProblem(CharSeq central, std::vector<CharSeq> targets, bool delta_constant);

  CharSeq central_;
  std::vector<CharSeq> targets_;
  Semigroup central_semigroup_;
  std::vector<Semigroup> target_semigroups_;
  bool delta_constant_ = true;
};

// ---------------------------------------------------------------------------
// Semicontinuity of semigroups
//
// Obstructed iff some m >= 0 and nonnegative m_1 + ... + m_n = m give
//   #S_0 ∩ [0, m) > sum_j #S_j ∩ [0, m_j).
// Scanning m in [0, 2 max(delta_0, sum delta_j)] is enough: beyond that the
// left side is m - delta_0 and the cheapest partition costs m - sum delta_j.

struct SemigroupWitness {
  std::int64_t m = 0;
  std::vector<std::int64_t> partition;
  std::int64_t central_count = 0;
  std::int64_t target_count = 0;
};

struct PartitionMin {
  std::int64_t value = 0;
  std::vector<std::int64_t> partition;
};

/// F(m) = min over nonnegative m_1 + ... + m_n = m of sum #S_j ∩ [0, m_j), for
/// m in [0, bound]: an infimum convolution of the counting functions. A part
/// m_j > 2 delta_j never helps (moving a unit elsewhere lowers its term by
/// exactly one), which bounds the inner loop.
std::vector<std::int64_t> min_partition_counts(std::span<const Semigroup> targets, std::int64_t bound);

/// The minimum at a single m together with a minimizing partition. Ties are
/// broken towards partitions in which every part is positive (every target
/// takes part), then lexicographically smallest.
PartitionMin min_partition_at(std::span<const Semigroup> targets, std::int64_t m);

/// Exhaustive enumeration of all partitions; reference for the convolution.
/// Throws Error{kTooLarge} for more than three targets or too many partitions.
PartitionMin partition_oracle(std::span<const Semigroup> targets, std::int64_t m);
PartitionMin partition_oracle(const DeformationProblem& prob, std::int64_t m);

/// Core check on bare semigroups; does not require sum delta_j <= delta_0.
/// The witness is the smallest violating m.
Outcome<SemigroupWitness> semigroup_semicontinuity(const Semigroup& central, std::span<const Semigroup> targets);
Outcome<SemigroupWitness> semigroup_semicontinuity(const DeformationProblem& prob);

/// Both sides of the inequality at one chosen m.
SemigroupWitness semigroup_probe(const Semigroup& central, std::span<const Semigroup> targets, std::int64_t m);

// ---------------------------------------------------------------------------
// d-invariant (gap function) inequality for a concordance K0 -> K1 with p
// positive double points: I_{K1}(m + g(K1) + p) <= I_{K0}(m + g(K0)) for all m.

struct GapWitness {
  std::int64_t m = 0;
  std::int64_t lhs = 0;  // I_{K1}(m + g(K1) + p)
  std::int64_t rhs = 0;  // I_{K0}(m + g(K0))
};

/// Scans m in [-2g(K1) - p - 1, 2g(K0) + 1]; outside this window the
/// difference of the two sides is -p. The witness is the largest violating
/// m, which corresponds to the smallest semigroup index g(K0) - m.
Outcome<GapWitness> gap_inequality(const KnotSpec& k0, const KnotSpec& k1, std::int64_t p);
/// K0 = #targets, K1 = central, p = double point count.
Outcome<GapWitness> gap_inequality(const DeformationProblem& prob);

// ---------------------------------------------------------------------------
// Upsilon band: Upsilon_{K1}(t) <= Upsilon_{K0}(t) <= Upsilon_{K1}(t) + p t.

struct UpsilonWitness {
  Rational t;
  Rational upsilon0;  // Upsilon_{K0}(t)
  Rational upsilon1;  // Upsilon_{K1}(t)
  bool lower_bound_failed = false;  // Upsilon_{K1}(t) > Upsilon_{K0}(t)
};

/// Throws Error{kMultipleSummands} unless both knots have at most one summand.
Outcome<UpsilonWitness> upsilon_band(const KnotSpec& k0, const KnotSpec& k1, std::int64_t p);
/// kInapplicable when the deformation has more than one target.
Outcome<UpsilonWitness> upsilon_band(const DeformationProblem& prob);

// ---------------------------------------------------------------------------
// Spectrum of x^p - y^q: {i/p + j/q : 1 <= i < p, 1 <= j < q}, sorted.

std::vector<Rational> spectrum_of(std::int64_t p, std::int64_t q);
/// Throws Error{kNotTwoGenerator} for characteristic sequences with n > 1.
std::vector<Rational> spectrum_of(const CharSeq& c);

struct SpectrumWitness {
  Rational x;  // left end of the open interval (x, x+1)
  std::int64_t central_count = 0;
  std::int64_t target_count = 0;
};

/// Obstructed iff some open unit interval (x, x+1) holds more target values
/// than central values. Both counts only change at spectrum values and at
/// spectrum values minus one, so those points and the midpoints between them
/// are checked. The witness is the smallest violating x.
Outcome<SpectrumWitness> spectrum_semicontinuity(std::span<const Rational> central,
                                                 std::span<const Rational> targets);
/// kInapplicable unless every singularity is (p;q).
Outcome<SpectrumWitness> spectrum_semicontinuity(const DeformationProblem& prob);

// ---------------------------------------------------------------------------
// M-bar number p + q - floor(q/p) - 3 (conjectural semicontinuity).

std::int64_t mbar(std::int64_t p, std::int64_t q);

struct MbarWitness {
  std::int64_t central = 0;
  std::int64_t target = 0;
};

/// Obstructed iff M(central) <= M(target). kInapplicable unless there is a
/// single target and both sequences are (p;q).
Outcome<MbarWitness> mbar_check(const DeformationProblem& prob);

// ---------------------------------------------------------------------------
// Multiplicity: (mult(central) - 1) >= sum (mult(target_j) - 1). Holds for
// analytic delta-constant deformations only.

struct MultiplicityWitness {
  std::int64_t central = 0;  // mult(central) - 1
  std::int64_t targets = 0;  // sum mult(target_j) - 1
};

Outcome<MultiplicityWitness> multiplicity_check(const CharSeq& central, std::span<const CharSeq> targets);
/// kInapplicable unless the problem is delta-constant.
Outcome<MultiplicityWitness> multiplicity_check(const DeformationProblem& prob);

// ---------------------------------------------------------------------------
// Minimal unknotting sequences of torus knots: T(a,b) can appear in a minimal
// unknotting sequence of T(c,d) only if #S_{c,d} ∩ [0,m) <= #S_{a,b} ∩ [0,m)
// for every m (and g(T(c,d)) >= g(T(a,b))). This fails at m = c + 1 whenever
// a > c.

struct UnknotWitness {
  std::int64_t m = 0;
  std::int64_t count_cd = 0;  // #S_{c,d} ∩ [0, m)
  std::int64_t count_ab = 0;  // #S_{a,b} ∩ [0, m)
  std::int64_t double_points = 0;  // g(T(c,d)) - g(T(a,b))
};

/// Semigroup of T(a,b) (all of N for a = 1). Throws
/// Error{kInvalidTorusParameters} unless 0 < a < b and gcd(a,b) = 1.
Semigroup torus_semigroup(std::int64_t a, std::int64_t b);
KnotSpec torus_knot(std::int64_t a, std::int64_t b);

Outcome<UnknotWitness> unknotting_sequence_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

// ---------------------------------------------------------------------------
// Running several criteria on one problem.

enum class Criterion { kSemigroup, kDInvariant, kUpsilon, kSpectrum, kMbar, kMultiplicity };

std::string_view criterion_name(Criterion c);
/// Accepts the names produced by criterion_name; throws Error{kParse}.
Criterion parse_criterion(std::string_view name);
std::span<const Criterion> all_criteria();

using AnyOutcome = std::variant<Outcome<SemigroupWitness>, Outcome<GapWitness>, Outcome<UpsilonWitness>,
                                Outcome<SpectrumWitness>, Outcome<MbarWitness>, Outcome<MultiplicityWitness>>;

struct CriterionResult {
  Criterion criterion;
  AnyOutcome outcome;

  Verdict verdict() const;
  /// "CONJECTURAL" for M-bar, "ANALYTIC-ONLY" for multiplicity.
  std::vector<std::string> labels() const;
};

struct ObstructionReport {
  std::string name;
  std::int64_t double_points = 0;
  std::vector<CriterionResult> results;

  bool any_obstructed() const;
};

ObstructionReport evaluate_problem(const DeformationProblem& prob, std::span<const Criterion> criteria,
                                   std::string name = {});

}  // namespace cusp
