#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cusp/obstructions.hpp"

namespace cusp::app {

inline constexpr std::int64_t kDefaultMaxDelta = 10000;
inline constexpr const char* kMaxDeltaEnv = "CUSP_OBSTRUCT_MAX_DELTA";

/// Value of CUSP_OBSTRUCT_MAX_DELTA, or the default when unset.
/// Throws Error{kValidation} for a malformed or non-positive value.
std::int64_t max_delta_from_env();

/// parse_char_seq plus the delta cap, checked before any table is built.
CharSeq parse_capped(std::string_view text, std::int64_t max_delta);

/// Knot grammar (char-seqs joined by '#', or U) with the same cap per summand.
KnotSpec parse_knot_capped(std::string_view text, std::int64_t max_delta);

struct CatalogEntry {
  std::string name;
  DeformationProblem problem;
  std::vector<Criterion> criteria;
};

struct ProblemCatalog {
  std::vector<CatalogEntry> entries;
};

/// Schema: {"problems": [{"name", "central", "targets": [...], "criteria": [...]?}]}.
/// Errors: kSchema (message starts with a JSON pointer), kValidation for
/// entries that are well formed but mathematically invalid or duplicated,
/// kTooLarge when a delta exceeds max_delta.
ProblemCatalog parse_catalog(std::string_view json_text, std::int64_t max_delta);

/// Reads and parses a catalog file. Throws Error{kIo} if it cannot be read.
ProblemCatalog load_catalog(const std::filesystem::path& path, std::int64_t max_delta);

/// Evaluates every entry; entries run concurrently, results come back in
/// catalog order.
std::vector<ObstructionReport> run_catalog(const ProblemCatalog& catalog);

}  // namespace cusp::app
