#include "cusp/app/render.hpp"

#include <sstream>

#include "cusp/hf_invariants.hpp"

namespace cusp::app {

Json rational_json(const Rational& q) { return to_string(q); }

Json rationals_json(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(rational_json(q));
  return out;
}

namespace {

Json witness_json(const SemigroupWitness& w) { return probe_json(w); }

Json witness_json(const GapWitness& w) {
  return Json{{"m", w.m}, {"lhs", w.lhs}, {"rhs", w.rhs}};
}

Json witness_json(const UpsilonWitness& w) {
  return Json{{"t", rational_json(w.t)},
              {"upsilon_targets", rational_json(w.upsilon0)},
              {"upsilon_central", rational_json(w.upsilon1)},
              {"failed_bound", w.lower_bound_failed ? "lower" : "upper"}};
}

Json witness_json(const SpectrumWitness& w) {
  return Json{{"x", rational_json(w.x)}, {"central_count", w.central_count}, {"target_count", w.target_count}};
}

Json witness_json(const MbarWitness& w) { return Json{{"central", w.central}, {"target", w.target}}; }

Json witness_json(const MultiplicityWitness& w) { return Json{{"central", w.central}, {"targets", w.targets}}; }

std::string partition_text(const std::vector<std::int64_t>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::string witness_text(const SemigroupWitness& w) {
  return "m=" + std::to_string(w.m) + " partition=" + partition_text(w.partition) +
         " central count " + std::to_string(w.central_count) + " > target count " + std::to_string(w.target_count);
}

std::string witness_text(const GapWitness& w) {
  return "m=" + std::to_string(w.m) + " I_central(m+g+p)=" + std::to_string(w.lhs) +
         " > I_targets(m+g)=" + std::to_string(w.rhs);
}

std::string witness_text(const UpsilonWitness& w) {
  return "t=" + to_string(w.t) + " Upsilon_targets=" + to_string(w.upsilon0) +
         " Upsilon_central=" + to_string(w.upsilon1) + (w.lower_bound_failed ? " (lower bound)" : " (upper bound)");
}

std::string witness_text(const SpectrumWitness& w) {
  return "interval (" + to_string(w.x) + ", " + to_string(w.x + 1) + ") central " +
         std::to_string(w.central_count) + " < targets " + std::to_string(w.target_count);
}

std::string witness_text(const MbarWitness& w) {
  return "M(central)=" + std::to_string(w.central) + " <= M(target)=" + std::to_string(w.target);
}

std::string witness_text(const MultiplicityWitness& w) {
  return "mult-1: central " + std::to_string(w.central) + " < targets " + std::to_string(w.targets);
}

}  // namespace

Json probe_json(const SemigroupWitness& w) {
  return Json{{"m", w.m},
              {"partition", w.partition},
              {"central_count", w.central_count},
              {"target_count", w.target_count}};
}

Json outcome_json(const CriterionResult& result) {
  Json out{{"criterion", std::string(criterion_name(result.criterion))},
           {"verdict", std::string(verdict_name(result.verdict()))}};
  std::visit(
      [&](const auto& o) {
        if (o.witness) out["witness"] = witness_json(*o.witness);
        if (!o.reason.empty()) out["reason"] = o.reason;
      },
      result.outcome);
  const auto labels = result.labels();
  if (!labels.empty()) out["labels"] = labels;
  return out;
}

Json report_json(const ObstructionReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(outcome_json(r));
  return Json{{"name", report.name}, {"p", report.double_points}, {"results", std::move(results)}};
}

std::string report_text(const ObstructionReport& report) {
  std::ostringstream out;
  out << report.name << "\n";
  out << "  double points p = " << report.double_points << "\n";
  for (const auto& r : report.results) {
    std::string line = "  " + std::string(criterion_name(r.criterion));
    line.resize(16, ' ');
    std::string verdict(verdict_name(r.verdict()));
    verdict.resize(16, ' ');
    line += verdict;
    std::visit(
        [&](const auto& o) {
          if (o.witness) line += witness_text(*o.witness);
          if (!o.reason.empty()) line += o.reason;
        },
        r.outcome);
    for (const auto& label : r.labels()) line += " [" + label + "]";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

Json semigroup_json(const CharSeq& c) {
  const Semigroup s = semigroup_of(c);
  return Json{{"char_seq", c.to_string()},
              {"generators", s.generators()},
              {"delta", s.delta()},
              {"mu", s.mu()},
              {"conductor", s.conductor()},
              {"symmetric", s.is_symmetric()},
              {"gaps", s.gaps()}};
}

Json pl_function_json(const PLFunction& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces()) {
    pieces.push_back(Json{{"from", rational_json(piece.from)},
                          {"to", rational_json(piece.to)},
                          {"slope", rational_json(piece.line.slope)},
                          {"intercept", rational_json(piece.line.intercept)}});
  }
  return Json{{"breakpoints", rationals_json(f.breakpoints())},
              {"values", rationals_json(f.values())},
              {"pieces", std::move(pieces)}};
}

Json upsilon_json(const CharSeq& c) {
  Json out{{"char_seq", c.to_string()}};
  out["upsilon"] = pl_function_json(upsilon(KnotSpec({c})));
  return out;
}

Json dinv_json(const KnotSpec& knot, std::int64_t s, std::int64_t m) {
  const Rational d = d_invariant_large_surgery({knot, s, m});
  return Json{{"knot", knot.to_string()}, {"genus", knot.genus()}, {"s", s}, {"m", m}, {"d", rational_json(d)}};
}

Json spectrum_json(std::int64_t p, std::int64_t q) {
  const auto values = spectrum_of(p, q);
  return Json{{"p", p}, {"q", q}, {"count", values.size()}, {"values", rationals_json(values)}};
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json cobordism_json(std::int64_t p, std::int64_t q, std::optional<std::int64_t> r) {
  const CobordismParams params{q, p, r.value_or(1)};
  const IntMatrix a = build_matrix(params);
  Json out{{"p", p},
           {"q", q},
           {"convention", std::string(convention_name(MatrixConvention::kPairing))},
           {"matrix", matrix_json(a)},
           {"determinant", matrix_determinant(a).get_str()},
           {"expected_determinant", expected_determinant(p, q).get_str()},
           {"negative_definite", is_negative_definite(a)}};
  if (matrix_determinant(a) != 0) out["beta0_squared"] = rational_json(beta0_squared(params));
  if (r) {
    const SpincRestriction s = spinc_restriction(params);
    out["r"] = *r;
    out["spinc_restriction"] = Json{{"m1", s.m1}, {"m0", s.m0}};
  }
  return out;
}

Json unknot_json(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const auto result = unknotting_sequence_check(a, b, c, d);
  Json out{{"candidate", "T(" + std::to_string(a) + "," + std::to_string(b) + ")"},
           {"knot", "T(" + std::to_string(c) + "," + std::to_string(d) + ")"},
           {"verdict", std::string(verdict_name(result.verdict))}};
  if (result.witness) {
    const auto& w = *result.witness;
    out["witness"] = Json{{"m", w.m},
                          {"count_knot", w.count_cd},
                          {"count_candidate", w.count_ab},
                          {"double_points", w.double_points}};
  }
  return out;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !is_scalar_array(value)) {
        out << pad << key << ":\n";
        emit(out, value, indent + 2);
      } else if (value.is_array()) {
        out << pad << key << ":";
        for (const auto& e : value) out << " " << scalar_text(e);
        out << "\n";
      } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        emit(out, e, indent + 2);
      } else if (is_scalar_array(e)) {
        out << pad << "-";
        for (const auto& x : e) out << " " << scalar_text(x);
        out << "\n";
      } else {
        emit(out, e, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string json_text(const Json& doc) {
  std::ostringstream out;
  emit(out, doc, 0);
  return out.str();
}

}  // namespace cusp::app
