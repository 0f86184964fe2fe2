#include "cusp/app/reproduce.hpp"

#include <array>
#include <numeric>
#include <string>

#include "cusp/hf_invariants.hpp"

namespace cusp::app {

namespace {

CharSeq seq(std::int64_t p, std::initializer_list<std::int64_t> q) {
  const std::vector<std::int64_t> v(q);
  return validate_char_seq(p, v);
}

Json elements_below(const Semigroup& s, std::int64_t m) {
  Json out = Json::array();
  for (std::int64_t x = 0; x < m; ++x) {
    if (s.contains(x)) out.push_back(x);
  }
  return out;
}

Json two_singularities() {
  const CharSeq c67 = seq(6, {7});
  const CharSeq c49 = seq(4, {9});
  const auto prob = DeformationProblem::make(c67, {c49});
  Json out;
  out["report"] = report_json(evaluate_problem(prob, all_criteria(), "(6;7) -> (4;9)"));

  Json semigroups;
  for (const auto& c : {c67, c49}) {
    Json entry = semigroup_json(c);
    entry["elements_below_8"] = elements_below(semigroup_of(c), 8);
    semigroups[c.to_string()] = std::move(entry);
  }
  out["semigroups"] = std::move(semigroups);

  const auto s67 = spectrum_of(6, 7);
  const auto s49 = spectrum_of(4, 9);
  std::vector<std::pair<Rational, std::string>> merged;
  for (const auto& x : s67) merged.emplace_back(x, "6;7");
  for (const auto& x : s49) merged.emplace_back(x, "4;9");
  std::stable_sort(merged.begin(), merged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Json merged_json = Json::array();
  for (const auto& [value, from] : merged) {
    merged_json.push_back(Json{{"value", rational_json(value)}, {"from", from}});
  }
  out["spectrum"] = Json{{"6;7", rationals_json(s67)},
                         {"4;9", rationals_json(s49)},
                         {"merged", std::move(merged_json)},
                         {"verdict", std::string(verdict_name(spectrum_semicontinuity(prob).verdict))}};

  const PLFunction u49 = upsilon(KnotSpec({c49}));
  const PLFunction u67 = upsilon(KnotSpec({c67}));
  const PLFunction diff = pl_subtract(u49, u67);
  bool within = true;
  for (const auto& t : diff.breakpoints()) {
    const Rational v = diff(t);
    within = within && v >= 0 && v <= 3 * t;
  }
  out["upsilon"] = Json{{"4;9", pl_function_json(u49)},
                        {"6;7", pl_function_json(u67)},
                        {"difference", pl_function_json(diff)},
                        {"difference_within_0_and_3t", within},
                        {"verdict", std::string(verdict_name(upsilon_band(prob).verdict))}};

  out["mbar"] = Json{{"6;7", mbar(6, 7)},
                     {"4;9", mbar(4, 9)},
                     {"verdict", std::string(verdict_name(mbar_check(prob).verdict))}};
  return out;
}

Json family_6_8() {
  Json out = Json::array();
  const std::array<Criterion, 2> criteria{Criterion::kSemigroup, Criterion::kMultiplicity};
  for (std::int64_t r = 1; r <= 5; ++r) {
    const CharSeq central = seq(6, {8, 2 * r + 7});
    Json cases = Json::array();
    for (const auto& [a, b] : family_pairs(r)) {
      const auto prob = DeformationProblem::make(central, {seq(4, {a}), seq(5, {b})});
      cases.push_back(report_json(evaluate_problem(prob, criteria, "(4;" + std::to_string(a) + ") + (5;" +
                                                                      std::to_string(b) + ")")));
    }
    out.push_back(Json{{"r", r},
                       {"central", central.to_string()},
                       {"delta", semigroup_of(central).delta()},
                       {"cases", std::move(cases)}});
  }
  return out;
}

Json family_10_12() {
  Json out = Json::array();
  const std::vector<CharSeq> targets{seq(5, {6}), seq(5, {61})};
  const std::vector<Semigroup> target_semigroups{semigroup_of(targets[0]), semigroup_of(targets[1])};
  const std::int64_t target_delta = target_semigroups[0].delta() + target_semigroups[1].delta();
  for (std::int64_t r = 1; r <= 5; ++r) {
    const CharSeq central = seq(10, {12, 2 * r + 13});
    const Semigroup s = semigroup_of(central);
    const auto first = semigroup_semicontinuity(s, target_semigroups);
    const auto mult = multiplicity_check(central, targets);
    Json entry{{"r", r},
               {"central", central.to_string()},
               {"delta", s.delta()},
               {"target_delta_sum", target_delta},
               {"nearby_genus_nonnegative", target_delta <= s.delta()},
               {"semigroup_verdict", std::string(verdict_name(first.verdict))}};
    if (first.witness) entry["first_violation"] = probe_json(*first.witness);
    entry["probe_m61"] = probe_json(semigroup_probe(s, target_semigroups, 61));
    entry["multiplicity_verdict"] = std::string(verdict_name(mult.verdict));
    out.push_back(std::move(entry));
  }
  return out;
}

Json unknotting() {
  Json out;
  out["T(4,5) in T(3,7)"] = unknot_json(4, 5, 3, 7);
  out["T(2,3) in T(6,7)"] = unknot_json(2, 3, 6, 7);

  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::int64_t a = 2; a <= 10; ++a) {
    for (std::int64_t b = a + 1; b <= 21; ++b) {
      if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
    }
  }
  std::int64_t checked = 0;
  std::int64_t a_greater = 0;
  std::int64_t a_greater_obstructed = 0;
  std::int64_t witness_at_c_plus_1 = 0;
  for (const auto& [a, b] : pairs) {
    for (const auto& [c, d] : pairs) {
      ++checked;
      if (a <= c) continue;
      ++a_greater;
      const auto res = unknotting_sequence_check(a, b, c, d);
      if (res.verdict != Verdict::kObstructed) continue;
      ++a_greater_obstructed;
      const Semigroup sab = torus_semigroup(a, b);
      const Semigroup scd = torus_semigroup(c, d);
      if (scd.count_below(c + 1) > sab.count_below(c + 1)) ++witness_at_c_plus_1;
    }
  }
  out["sweep"] = Json{{"torus_knots", pairs.size()},
                      {"pairs", checked},
                      {"pairs_with_a_greater_than_c", a_greater},
                      {"obstructed", a_greater_obstructed},
                      {"violated_at_c_plus_1", witness_at_c_plus_1}};
  return out;
}

Json unknot_to_trefoil() {
  Json out = Json::array();
  const KnotSpec trefoil({seq(2, {3})});
  for (std::int64_t p : {0, 1}) {
    const auto res = gap_inequality(KnotSpec::unknot(), trefoil, p);
    Json entry{{"p", p}, {"verdict", std::string(verdict_name(res.verdict))}};
    if (res.witness) entry["witness"] = Json{{"m", res.witness->m}, {"lhs", res.witness->lhs}, {"rhs", res.witness->rhs}};
    out.push_back(std::move(entry));
  }
  return out;
}

Json surgeries() {
  Json out;
  out["d_invariants"] = Json::array({dinv_json(KnotSpec({seq(2, {3})}), 7, 0), dinv_json(KnotSpec::unknot(), 3, 1),
                                     dinv_json(KnotSpec::unknot(), 1, 0)});
  out["cobordisms"] = Json::array({cobordism_json(1, 3, std::nullopt), cobordism_json(2, 3, std::nullopt),
                                   cobordism_json(2, 7, 3), cobordism_json(3, 5, std::nullopt)});
  return out;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> family_pairs(std::int64_t r) {
  const std::int64_t delta0 = semigroup_of(seq(6, {8, 2 * r + 7})).delta();
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a : {5, 7, 9}) {
    for (std::int64_t b : {6, 7, 8, 9}) {
      const std::int64_t sum = semigroup_of(seq(4, {a})).delta() + semigroup_of(seq(5, {b})).delta();
      if (sum <= delta0) out.emplace_back(a, b);
    }
  }
  return out;
}

Json reproduce_examples() {
  Json doc;
  doc["two_singularities"] = two_singularities();
  doc["family_6_8"] = family_6_8();
  doc["family_10_12"] = family_10_12();
  doc["unknotting"] = unknotting();
  doc["unknot_to_trefoil"] = unknot_to_trefoil();
  doc["surgeries"] = surgeries();
  return doc;
}

}  // namespace cusp::app
