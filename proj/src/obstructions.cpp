#include "cusp/obstructions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "cusp/error.hpp"
#include "cusp/hf_invariants.hpp"
#include "cusp/pl_function.hpp"

namespace cusp {

namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t delta_sum(std::span<const Semigroup> semigroups) {
  std::int64_t sum = 0;
  for (const auto& s : semigroups) sum += s.delta();
  return sum;
}

bool is_two_generator(const CharSeq& c) { return c.length() == 1; }

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kObstructed: return "OBSTRUCTED";
    case Verdict::kNotObstructed: return "NOT_OBSTRUCTED";
    case Verdict::kInapplicable: return "INAPPLICABLE";
  }
  return "UNKNOWN";
}

// --- DeformationProblem ----------------------------------------------------

DeformationProblem::DeformationProblem(CharSeq central, std::vector<CharSeq> targets, bool delta_constant)
    : central_(std::move(central)),
      targets_(std::move(targets)),
      central_semigroup_(semigroup_of(central_)),
      delta_constant_(delta_constant) {
  target_semigroups_.reserve(targets_.size());
  for (const auto& t : targets_) target_semigroups_.push_back(semigroup_of(t));
}

DeformationProblem DeformationProblem::make(CharSeq central, std::vector<CharSeq> targets, bool delta_constant) {
  if (targets.empty()) {
    throw Error(ErrorCode::kInvalidProblem, "a deformation problem needs at least one target singularity");
  }
  std::sort(targets.begin(), targets.end());
  DeformationProblem prob(std::move(central), std::move(targets), delta_constant);
  if (prob.double_points() < 0) {
    throw Error(ErrorCode::kInvalidProblem,
                "sum of target deltas " + std::to_string(prob.target_delta_sum()) + " exceeds central delta " +
                    std::to_string(prob.central_delta()) +
                    " (the genus delta_0 - sum delta_j of the nearby fibre would be negative)");
  }
  return prob;
}

std::int64_t DeformationProblem::target_delta_sum() const noexcept { return delta_sum(target_semigroups_); }

// --- Semigroup semicontinuity ----------------------------------------------

std::vector<std::int64_t> min_partition_counts(std::span<const Semigroup> targets, std::int64_t bound) {
  if (targets.empty()) throw Error(ErrorCode::kInvalidProblem, "no target semigroups");
  const auto size = static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)) + 1;
  std::vector<std::int64_t> acc(size);
  for (std::size_t m = 0; m < size; ++m) acc[m] = targets[0].count_below(static_cast<std::int64_t>(m));
  for (std::size_t j = 1; j < targets.size(); ++j) {
    const auto& s = targets[j];
    const std::int64_t cap = 2 * s.delta();
    std::vector<std::int64_t> next(size, kInfinity);
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(size); ++m) {
      const std::int64_t top = std::min(m, cap);
      std::int64_t best = kInfinity;
      for (std::int64_t l = 0; l <= top; ++l) {
        best = std::min(best, s.count_below(l) + acc[static_cast<std::size_t>(m - l)]);
      }
      next[static_cast<std::size_t>(m)] = best;
    }
    acc = std::move(next);
  }
  return acc;
}

namespace {

// suffix[j][s] = min over parts m_j..m_{n-1} >= lower summing to s.
std::vector<std::vector<std::int64_t>> suffix_minima(std::span<const Semigroup> targets, std::int64_t m,
                                                     std::int64_t lower) {
  const std::size_t n = targets.size();
  const auto size = static_cast<std::size_t>(m) + 1;
  std::vector<std::vector<std::int64_t>> suffix(n, std::vector<std::int64_t>(size, kInfinity));
  for (std::int64_t s = lower; s <= m; ++s) {
    suffix[n - 1][static_cast<std::size_t>(s)] = targets[n - 1].count_below(s);
  }
  for (std::size_t j = n - 1; j-- > 0;) {
    const std::int64_t cap = std::max(lower, 2 * targets[j].delta());
    for (std::int64_t s = 0; s <= m; ++s) {
      std::int64_t best = kInfinity;
      for (std::int64_t l = lower; l <= std::min(s, cap); ++l) {
        const std::int64_t rest = suffix[j + 1][static_cast<std::size_t>(s - l)];
        if (rest < kInfinity) best = std::min(best, targets[j].count_below(l) + rest);
      }
      suffix[j][static_cast<std::size_t>(s)] = best;
    }
  }
  return suffix;
}

std::vector<std::int64_t> lexicographic_minimizer(std::span<const Semigroup> targets, std::int64_t m,
                                                  std::int64_t lower,
                                                  const std::vector<std::vector<std::int64_t>>& suffix) {
  std::vector<std::int64_t> parts;
  std::int64_t remaining = m;
  std::int64_t goal = suffix[0][static_cast<std::size_t>(m)];
  for (std::size_t j = 0; j + 1 < targets.size(); ++j) {
    for (std::int64_t l = lower; l <= remaining; ++l) {
      const std::int64_t rest = suffix[j + 1][static_cast<std::size_t>(remaining - l)];
      if (rest < kInfinity && targets[j].count_below(l) + rest == goal) {
        parts.push_back(l);
        goal -= targets[j].count_below(l);
        remaining -= l;
        break;
      }
    }
  }
  parts.push_back(remaining);
  return parts;
}

}  // namespace

PartitionMin min_partition_at(std::span<const Semigroup> targets, std::int64_t m) {
  if (targets.empty()) throw Error(ErrorCode::kInvalidProblem, "no target semigroups");
  if (m < 0) throw Error(ErrorCode::kRangeViolated, "partition index m must be nonnegative");
  const auto any = suffix_minima(targets, m, 0);
  const std::int64_t best = any[0][static_cast<std::size_t>(m)];
  if (m >= static_cast<std::int64_t>(targets.size())) {
    const auto positive = suffix_minima(targets, m, 1);
    if (positive[0][static_cast<std::size_t>(m)] == best) {
      return {best, lexicographic_minimizer(targets, m, 1, positive)};
    }
  }
  return {best, lexicographic_minimizer(targets, m, 0, any)};
}

PartitionMin partition_oracle(std::span<const Semigroup> targets, std::int64_t m) {
  const std::size_t n = targets.size();
  if (n == 0 || n > 3) {
    throw Error(ErrorCode::kTooLarge, "exhaustive partition enumeration supports 1 to 3 targets");
  }
  if (m < 0) throw Error(ErrorCode::kRangeViolated, "partition index m must be nonnegative");
  if (n == 3 && (m + 1) * (m + 2) / 2 > 50'000'000) {
    throw Error(ErrorCode::kTooLarge, "too many partitions to enumerate for m = " + std::to_string(m));
  }
  PartitionMin best{kInfinity, {}};
  auto consider = [&](std::vector<std::int64_t> parts) {
    std::int64_t value = 0;
    for (std::size_t j = 0; j < n; ++j) value += targets[j].count_below(parts[j]);
    if (value < best.value) best = {value, std::move(parts)};
  };
  if (n == 1) {
    consider({m});
  } else if (n == 2) {
    for (std::int64_t a = 0; a <= m; ++a) consider({a, m - a});
  } else {
    for (std::int64_t a = 0; a <= m; ++a) {
      for (std::int64_t b = 0; a + b <= m; ++b) consider({a, b, m - a - b});
    }
  }
  return best;
}

PartitionMin partition_oracle(const DeformationProblem& prob, std::int64_t m) {
  return partition_oracle(prob.target_semigroups(), m);
}

SemigroupWitness semigroup_probe(const Semigroup& central, std::span<const Semigroup> targets, std::int64_t m) {
  auto best = min_partition_at(targets, m);
  return SemigroupWitness{m, std::move(best.partition), central.count_below(m), best.value};
}

Outcome<SemigroupWitness> semigroup_semicontinuity(const Semigroup& central, std::span<const Semigroup> targets) {
  const std::int64_t bound = 2 * std::max(central.delta(), delta_sum(targets));
  const auto cheapest = min_partition_counts(targets, bound);
  for (std::int64_t m = 0; m <= bound; ++m) {
    if (central.count_below(m) > cheapest[static_cast<std::size_t>(m)]) {
      return Outcome<SemigroupWitness>::obstructed(semigroup_probe(central, targets, m));
    }
  }
  return Outcome<SemigroupWitness>::not_obstructed();
}

Outcome<SemigroupWitness> semigroup_semicontinuity(const DeformationProblem& prob) {
  return semigroup_semicontinuity(prob.central_semigroup(), prob.target_semigroups());
}

// --- Gap function inequality -----------------------------------------------

Outcome<GapWitness> gap_inequality(const KnotSpec& k0, const KnotSpec& k1, std::int64_t p) {
  const std::int64_t g0 = k0.genus();
  const std::int64_t g1 = k1.genus();
  const auto& i0 = k0.gap_function();
  const auto& i1 = k1.gap_function();
  for (std::int64_t m = 2 * g0 + 1; m >= -2 * g1 - p - 1; --m) {
    const std::int64_t lhs = i1(m + g1 + p);
    const std::int64_t rhs = i0(m + g0);
    if (lhs > rhs) return Outcome<GapWitness>::obstructed({m, lhs, rhs});
  }
  return Outcome<GapWitness>::not_obstructed();
}

Outcome<GapWitness> gap_inequality(const DeformationProblem& prob) {
  return gap_inequality(prob.target_knot(), prob.central_knot(), prob.double_points());
}

// --- Upsilon -----------------------------------------------------------------

Outcome<UpsilonWitness> upsilon_band(const KnotSpec& k0, const KnotSpec& k1, std::int64_t p) {
  const PLFunction u0 = upsilon(k0);
  const PLFunction u1 = upsilon(k1);
  if (auto t = pl_compare(u1, u0)) {
    return Outcome<UpsilonWitness>::obstructed({*t, u0(*t), u1(*t), true});
  }
  const PLFunction upper = pl_add(u1, PLFunction::from_line(Line{Rational(0), make_rational(p)}));
  if (auto t = pl_compare(u0, upper)) {
    return Outcome<UpsilonWitness>::obstructed({*t, u0(*t), u1(*t), false});
  }
  return Outcome<UpsilonWitness>::not_obstructed();
}

Outcome<UpsilonWitness> upsilon_band(const DeformationProblem& prob) {
  if (prob.targets().size() != 1) {
    return Outcome<UpsilonWitness>::inapplicable("Upsilon is only computed for a single target knot");
  }
  return upsilon_band(prob.target_knot(), prob.central_knot(), prob.double_points());
}

// --- Spectrum ----------------------------------------------------------------

std::vector<Rational> spectrum_of(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::kNotTwoGenerator,
                "spectrum needs coprime p, q >= 2, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>((p - 1) * (q - 1)));
  for (std::int64_t i = 1; i < p; ++i) {
    for (std::int64_t j = 1; j < q; ++j) out.push_back(make_rational(i * q + j * p, p * q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> spectrum_of(const CharSeq& c) {
  if (!is_two_generator(c)) {
    throw Error(ErrorCode::kNotTwoGenerator,
                "spectrum is only available for (p;q) singularities, got " + c.to_string());
  }
  return spectrum_of(c.multiplicity(), c.exponents().front());
}

namespace {

std::int64_t count_open(std::span<const Rational> sorted, const Rational& lo, const Rational& hi) {
  const auto first = std::upper_bound(sorted.begin(), sorted.end(), lo);
  const auto last = std::lower_bound(sorted.begin(), sorted.end(), hi);
  return last > first ? static_cast<std::int64_t>(last - first) : 0;
}

}  // namespace

Outcome<SpectrumWitness> spectrum_semicontinuity(std::span<const Rational> central,
                                                 std::span<const Rational> targets) {
  std::vector<Rational> c(central.begin(), central.end());
  std::vector<Rational> t(targets.begin(), targets.end());
  std::sort(c.begin(), c.end());
  std::sort(t.begin(), t.end());

  std::vector<Rational> jumps;
  for (const auto* list : {&c, &t}) {
    for (const auto& s : *list) {
      jumps.push_back(s);
      jumps.push_back(s - 1);
    }
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());

  std::vector<Rational> candidates;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    candidates.push_back(jumps[i]);
    if (i + 1 < jumps.size()) candidates.push_back((jumps[i] + jumps[i + 1]) / 2);
  }
  for (const auto& x : candidates) {
    const Rational x1 = x + 1;
    const std::int64_t nc = count_open(c, x, x1);
    const std::int64_t nt = count_open(t, x, x1);
    if (nt > nc) return Outcome<SpectrumWitness>::obstructed({x, nc, nt});
  }
  return Outcome<SpectrumWitness>::not_obstructed();
}

Outcome<SpectrumWitness> spectrum_semicontinuity(const DeformationProblem& prob) {
  if (!is_two_generator(prob.central()) ||
      !std::all_of(prob.targets().begin(), prob.targets().end(), is_two_generator)) {
    return Outcome<SpectrumWitness>::inapplicable(
        "spectrum is only computed for (p;q) singularities");
  }
  const auto central = spectrum_of(prob.central());
  std::vector<Rational> targets;
  for (const auto& t : prob.targets()) {
    const auto sp = spectrum_of(t);
    targets.insert(targets.end(), sp.begin(), sp.end());
  }
  return spectrum_semicontinuity(central, targets);
}

// --- M-bar -------------------------------------------------------------------

std::int64_t mbar(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= p || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::kInvalidTorusParameters,
                "M-bar needs 0 < p < q coprime, got (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return p + q - q / p - 3;
}

Outcome<MbarWitness> mbar_check(const DeformationProblem& prob) {
  if (prob.targets().size() != 1) {
    return Outcome<MbarWitness>::inapplicable("M-bar semicontinuity is stated for a single target");
  }
  const auto& c = prob.central();
  const auto& t = prob.targets().front();
  if (!is_two_generator(c) || !is_two_generator(t)) {
    return Outcome<MbarWitness>::inapplicable("M-bar is only defined for (p;q) singularities");
  }
  const std::int64_t mc = mbar(c.multiplicity(), c.exponents().front());
  const std::int64_t mt = mbar(t.multiplicity(), t.exponents().front());
  if (mc <= mt) return Outcome<MbarWitness>::obstructed({mc, mt});
  return Outcome<MbarWitness>::not_obstructed();
}

// --- Multiplicity ------------------------------------------------------------

Outcome<MultiplicityWitness> multiplicity_check(const CharSeq& central, std::span<const CharSeq> targets) {
  const std::int64_t c = central.multiplicity() - 1;
  std::int64_t t = 0;
  for (const auto& target : targets) t += target.multiplicity() - 1;
  if (c < t) return Outcome<MultiplicityWitness>::obstructed({c, t});
  return Outcome<MultiplicityWitness>::not_obstructed();
}

Outcome<MultiplicityWitness> multiplicity_check(const DeformationProblem& prob) {
  if (!prob.delta_constant()) {
    return Outcome<MultiplicityWitness>::inapplicable("multiplicity bound needs a delta-constant deformation");
  }
  return multiplicity_check(prob.central(), prob.targets());
}

// --- Torus knots and unknotting sequences -------------------------------------

Semigroup torus_semigroup(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= a || std::gcd(a, b) != 1) {
    throw Error(ErrorCode::kInvalidTorusParameters,
                "torus knot T(a,b) needs 0 < a < b coprime, got (" + std::to_string(a) + "," + std::to_string(b) +
                    ")");
  }
  const std::array<std::int64_t, 2> gens{a, b};
  return semigroup_from_generators(gens);
}

KnotSpec torus_knot(std::int64_t a, std::int64_t b) {
  (void)torus_semigroup(a, b);
  if (a == 1) return KnotSpec::unknot();
  const std::array<std::int64_t, 1> q{b};
  return KnotSpec({validate_char_seq(a, q)});
}

Outcome<UnknotWitness> unknotting_sequence_check(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const Semigroup s_ab = torus_semigroup(a, b);
  const Semigroup s_cd = torus_semigroup(c, d);
  const std::int64_t p = s_cd.delta() - s_ab.delta();
  auto witness_at = [&](std::int64_t m) {
    return UnknotWitness{m, s_cd.count_below(m), s_ab.count_below(m), p};
  };
  if (p >= 0) {
    const KnotSpec k0 = torus_knot(a, b);
    const auto gap = gap_inequality(k0, torus_knot(c, d), p);
    if (gap.verdict == Verdict::kObstructed) {
      // I_{K}(2g - m) = #S ∩ [0, m) turns gap index m into semigroup index g0 - m.
      return Outcome<UnknotWitness>::obstructed(witness_at(k0.genus() - gap.witness->m));
    }
    return Outcome<UnknotWitness>::not_obstructed();
  }
  // Fewer double points than zero: obstructed outright; report the first m
  // where the counting inequality fails (it must, since for large m the
  // counts differ by g(T(a,b)) - g(T(c,d)) > 0).
  for (std::int64_t m = 0;; ++m) {
    if (s_cd.count_below(m) > s_ab.count_below(m)) return Outcome<UnknotWitness>::obstructed(witness_at(m));
  }
}

// --- Reports -------------------------------------------------------------------

namespace {

constexpr std::array<Criterion, 6> kAllCriteria{Criterion::kSemigroup, Criterion::kDInvariant, Criterion::kUpsilon,
                                                Criterion::kSpectrum,  Criterion::kMbar,       Criterion::kMultiplicity};

}  // namespace

std::string_view criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kSemigroup: return "semigroup";
    case Criterion::kDInvariant: return "dinv";
    case Criterion::kUpsilon: return "upsilon";
    case Criterion::kSpectrum: return "spectrum";
    case Criterion::kMbar: return "mbar";
    case Criterion::kMultiplicity: return "multiplicity";
  }
  return "unknown";
}

Criterion parse_criterion(std::string_view name) {
  for (auto c : kAllCriteria) {
    if (criterion_name(c) == name) return c;
  }
  throw Error(ErrorCode::kParse, "unknown criterion '" + std::string(name) +
                                     "' (expected semigroup, dinv, upsilon, spectrum, mbar or multiplicity)");
}

std::span<const Criterion> all_criteria() { return kAllCriteria; }

Verdict CriterionResult::verdict() const {
  return std::visit([](const auto& o) { return o.verdict; }, outcome);
}

std::vector<std::string> CriterionResult::labels() const {
  switch (criterion) {
    case Criterion::kMbar: return {"CONJECTURAL"};
    case Criterion::kMultiplicity: return {"ANALYTIC-ONLY"};
    default: return {};
  }
}

bool ObstructionReport::any_obstructed() const {
  return std::any_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.verdict() == Verdict::kObstructed; });
}

ObstructionReport evaluate_problem(const DeformationProblem& prob, std::span<const Criterion> criteria,
                                   std::string name) {
  ObstructionReport report{std::move(name), prob.double_points(), {}};
  for (auto c : criteria) {
    switch (c) {
      case Criterion::kSemigroup: report.results.push_back({c, semigroup_semicontinuity(prob)}); break;
      case Criterion::kDInvariant: report.results.push_back({c, gap_inequality(prob)}); break;
      case Criterion::kUpsilon: report.results.push_back({c, upsilon_band(prob)}); break;
      case Criterion::kSpectrum: report.results.push_back({c, spectrum_semicontinuity(prob)}); break;
      case Criterion::kMbar: report.results.push_back({c, mbar_check(prob)}); break;
      case Criterion::kMultiplicity: report.results.push_back({c, multiplicity_check(prob)}); break;
    }
  }
  return report;
}

}  // namespace cusp
