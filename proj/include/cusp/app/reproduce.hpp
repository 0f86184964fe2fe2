#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cusp/app/render.hpp"

namespace cusp::app {

/// Representative (a, b) for targets (4;a), (5;b) under central (6;8,2r+7):
/// a in {5,7,9}, b in {6,7,8,9}, keeping only pairs whose deltas fit.
std::vector<std::pair<std::int64_t, std::int64_t>> family_pairs(std::int64_t r);

/// Every worked example as one deterministic document.
Json reproduce_examples();

}  // namespace cusp::app
