#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cusp/obstructions.hpp"
#include "cusp/pl_function.hpp"
#include "cusp/surgery_homology.hpp"

namespace cusp::app {

using Json = nlohmann::ordered_json;

/// Rationals are always serialized as "num/den" strings.
Json rational_json(const Rational& q);
Json rationals_json(const std::vector<Rational>& qs);

Json outcome_json(const CriterionResult& result);
/// {name, p, results: [{criterion, verdict, witness?, reason?, labels?}]}
Json report_json(const ObstructionReport& report);
std::string report_text(const ObstructionReport& report);

Json semigroup_json(const CharSeq& c);
Json pl_function_json(const PLFunction& f);
Json upsilon_json(const CharSeq& c);
Json dinv_json(const KnotSpec& knot, std::int64_t s, std::int64_t m);
Json spectrum_json(std::int64_t p, std::int64_t q);
Json matrix_json(const IntMatrix& m);
/// r is optional; the Spin^c restriction is only reported when it is given.
Json cobordism_json(std::int64_t p, std::int64_t q, std::optional<std::int64_t> r);
Json unknot_json(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
Json probe_json(const SemigroupWitness& w);

/// Indented "key: value" rendering of a JSON document for terminals.
std::string json_text(const Json& doc);

}  // namespace cusp::app
