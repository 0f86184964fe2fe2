#include "cusp/app/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cusp/error.hpp"

namespace cusp::app {

using nlohmann::json;

std::int64_t max_delta_from_env() {
  const char* raw = std::getenv(kMaxDeltaEnv);
  if (raw == nullptr || *raw == '\0') return kDefaultMaxDelta;
  const std::string_view text(raw);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw Error(ErrorCode::kValidation,
                std::string(kMaxDeltaEnv) + " must be a positive integer, got '" + std::string(text) + "'");
  }
  return value;
}

CharSeq parse_capped(std::string_view text, std::int64_t max_delta) {
  CharSeq c = parse_char_seq(text);
  const std::int64_t delta = delta_from_char_seq(c);
  if (delta > max_delta) {
    throw Error(ErrorCode::kTooLarge, "delta(" + c.to_string() + ") = " + std::to_string(delta) + " exceeds " +
                                          kMaxDeltaEnv + " = " + std::to_string(max_delta));
  }
  return c;
}

KnotSpec parse_knot_capped(std::string_view text, std::int64_t max_delta) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (body == "U" || body == "u") return KnotSpec::unknot();
  std::vector<CharSeq> summands;
  while (true) {
    const auto hash = body.find('#');
    summands.push_back(parse_capped(body.substr(0, hash), max_delta));
    if (hash == std::string_view::npos) break;
    body.remove_prefix(hash + 1);
  }
  return KnotSpec(std::move(summands));
}

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::kSchema, pointer + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& pointer) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(pointer + "/" + key, "missing required field");
  return *it;
}

std::string require_string(const json& value, const std::string& pointer) {
  if (!value.is_string()) schema_error(pointer, "expected a string");
  return value.get<std::string>();
}

CharSeq char_seq_at(const json& value, const std::string& pointer, std::int64_t max_delta) {
  const std::string text = require_string(value, pointer);
  try {
    return parse_capped(text, max_delta);
  } catch (const Error& e) {
    // The size cap keeps its own code so callers can tell it from bad input.
    const ErrorCode code = e.code() == ErrorCode::kTooLarge ? ErrorCode::kTooLarge : ErrorCode::kValidation;
    throw Error(code, pointer + ": " + e.what());
  }
}

CatalogEntry parse_entry(const json& item, const std::string& pointer, std::int64_t max_delta) {
  if (!item.is_object()) schema_error(pointer, "expected an object");
  for (const auto& [key, _] : item.items()) {
    if (key != "name" && key != "central" && key != "targets" && key != "criteria") {
      schema_error(pointer + "/" + key, "unknown field");
    }
  }
  std::string name = require_string(require(item, "name", pointer), pointer + "/name");
  if (name.empty()) schema_error(pointer + "/name", "name must not be empty");
  CharSeq central = char_seq_at(require(item, "central", pointer), pointer + "/central", max_delta);

  const json& targets_json = require(item, "targets", pointer);
  if (!targets_json.is_array()) schema_error(pointer + "/targets", "expected an array");
  if (targets_json.empty()) schema_error(pointer + "/targets", "expected at least one target");
  std::vector<CharSeq> targets;
  for (std::size_t i = 0; i < targets_json.size(); ++i) {
    targets.push_back(char_seq_at(targets_json[i], pointer + "/targets/" + std::to_string(i), max_delta));
  }

  std::vector<Criterion> criteria(all_criteria().begin(), all_criteria().end());
  if (const auto it = item.find("criteria"); it != item.end()) {
    if (!it->is_array()) schema_error(pointer + "/criteria", "expected an array");
    criteria.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = pointer + "/criteria/" + std::to_string(i);
      const std::string cname = require_string((*it)[i], where);
      try {
        criteria.push_back(parse_criterion(cname));
      } catch (const Error& e) {
        schema_error(where, e.what());
      }
    }
  }

  try {
    return {std::move(name), DeformationProblem::make(std::move(central), std::move(targets)),
            std::move(criteria)};
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidation, pointer + ": " + e.what());
  }
}

}  // namespace

ProblemCatalog parse_catalog(std::string_view json_text, std::int64_t max_delta) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchema, std::string("(document): malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("", "expected an object with a 'problems' array");
  const json& problems = require(doc, "problems", "");
  if (!problems.is_array()) schema_error("/problems", "expected an array");

  ProblemCatalog catalog;
  std::set<std::string> names;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const std::string pointer = "/problems/" + std::to_string(i);
    CatalogEntry entry = parse_entry(problems[i], pointer, max_delta);
    if (!names.insert(entry.name).second) {
      throw Error(ErrorCode::kValidation, pointer + "/name: duplicate problem name '" + entry.name + "'");
    }
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

ProblemCatalog load_catalog(const std::filesystem::path& path, std::int64_t max_delta) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open catalog '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "error while reading catalog '" + path.string() + "'");
  return parse_catalog(buffer.str(), max_delta);
}

std::vector<ObstructionReport> run_catalog(const ProblemCatalog& catalog) {
  const std::size_t n = catalog.entries.size();
  std::vector<std::optional<ObstructionReport>> slots(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& entry = catalog.entries[i];
      slots[i] = evaluate_problem(entry.problem, entry.criteria, entry.name);
    }
  };
  const std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) pending.push_back(std::async(std::launch::async, worker));
  // Join every worker before rethrowing a failure.
  for (auto& f : pending) f.wait();
  for (auto& f : pending) f.get();

  std::vector<ObstructionReport> reports;
  reports.reserve(n);
  for (auto& r : slots) reports.push_back(std::move(*r));
  return reports;
}

}  // namespace cusp::app
