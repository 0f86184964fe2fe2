#include "cusp/knot.hpp"

#include <algorithm>
#include <limits>

#include "cusp/error.hpp"

namespace cusp {

GapFunction::GapFunction(std::int64_t genus, std::vector<std::int64_t> values)
    : genus_(genus), values_(std::move(values)) {
  if (genus_ < 0 || values_.size() != static_cast<std::size_t>(2 * genus_ + 1) ||
      values_.front() != genus_ || values_.back() != 0) {
    throw Error(ErrorCode::kValidation, "gap function table does not match its genus");
  }
}

GapFunction GapFunction::of(const Semigroup& s) {
  std::vector<std::int64_t> values(static_cast<std::size_t>(2 * s.delta() + 1));
  for (std::int64_t m = 0; m <= 2 * s.delta(); ++m) {
    values[static_cast<std::size_t>(m)] = gap_function_eval(s, m);
  }
  return GapFunction(s.delta(), std::move(values));
}

std::int64_t GapFunction::operator()(std::int64_t m) const noexcept {
  if (m <= 0) return genus_ - m;
  if (m >= 2 * genus_) return 0;
  return values_[static_cast<std::size_t>(m)];
}

GapFunction infimum_convolution(const GapFunction& f, const GapFunction& h) {
  const std::int64_t gf = f.genus();
  const std::int64_t gh = h.genus();
  const std::int64_t g = gf + gh;
  std::vector<std::int64_t> values(static_cast<std::size_t>(2 * g + 1));
  for (std::int64_t k = 0; k <= 2 * g; ++k) {
    const std::int64_t lo = std::max<std::int64_t>(0, k - 2 * gf);
    const std::int64_t hi = std::min(2 * gh, k);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t l = lo; l <= hi; ++l) {
      best = std::min(best, f.values()[static_cast<std::size_t>(k - l)] +
                                h.values()[static_cast<std::size_t>(l)]);
    }
    values[static_cast<std::size_t>(k)] = best;
  }
  return GapFunction(g, std::move(values));
}

KnotSpec::KnotSpec(std::vector<CharSeq> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
  semigroups_.reserve(summands_.size());
  for (const auto& c : summands_) {
    semigroups_.push_back(semigroup_of(c));
    gap_ = infimum_convolution(gap_, GapFunction::of(semigroups_.back()));
  }
}

std::string KnotSpec::to_string() const {
  if (summands_.empty()) return "U";
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i != 0) out += '#';
    out += summands_[i].to_string();
  }
  return out;
}

KnotSpec parse_knot(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  if (body == "U" || body == "u") return KnotSpec::unknot();
  if (body.empty()) throw Error(ErrorCode::kParse, "empty knot description");
  std::vector<CharSeq> summands;
  while (true) {
    const auto hash = body.find('#');
    summands.push_back(parse_char_seq(body.substr(0, hash)));
    if (hash == std::string_view::npos) break;
    body.remove_prefix(hash + 1);
  }
  return KnotSpec(std::move(summands));
}

std::int64_t knot_gap_function(const KnotSpec& k, std::int64_t m) { return k.gap_function()(m); }

std::int64_t knot_genus(const KnotSpec& k) { return k.genus(); }

}  // namespace cusp
