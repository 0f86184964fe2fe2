#include "cusp/pl_function.hpp"

#include <algorithm>

#include "cusp/error.hpp"

namespace cusp {

namespace {

std::vector<Rational> merged_breakpoints(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> out;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.size() < 2 || breakpoints.size() != values.size() || breakpoints.front() != 0 ||
      breakpoints.back() != 1) {
    throw Error(ErrorCode::kValidation, "PL function needs matching breakpoints spanning [0,1]");
  }
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i - 1] < breakpoints[i])) {
      throw Error(ErrorCode::kValidation, "PL breakpoints must strictly increase");
    }
  }
  breakpoints_.push_back(breakpoints.front());
  values_.push_back(values.front());
  for (std::size_t i = 1; i + 1 < breakpoints.size(); ++i) {
    const Rational left = (values[i] - values_.back()) / (breakpoints[i] - breakpoints_.back());
    const Rational right = (values[i + 1] - values[i]) / (breakpoints[i + 1] - breakpoints[i]);
    if (left == right) continue;
    breakpoints_.push_back(breakpoints[i]);
    values_.push_back(values[i]);
  }
  breakpoints_.push_back(breakpoints.back());
  values_.push_back(values.back());
}

PLFunction PLFunction::from_line(const Line& line) {
  return PLFunction({Rational(0), Rational(1)}, {line.at(0), line.at(1)});
}

std::vector<Piece> PLFunction::pieces() const {
  std::vector<Piece> out;
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    const Rational slope = (values_[i + 1] - values_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
    out.push_back({breakpoints_[i], breakpoints_[i + 1], Line{values_[i] - slope * breakpoints_[i], slope}});
  }
  return out;
}

Rational PLFunction::operator()(const Rational& t) const {
  if (t < 0 || t > 1) throw Error(ErrorCode::kRangeViolated, "PL function evaluated outside [0,1]");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
  if (breakpoints_[i] == t) return values_[i];
  const Rational& t0 = breakpoints_[i - 1];
  const Rational& t1 = breakpoints_[i];
  return values_[i - 1] + (values_[i] - values_[i - 1]) * (t - t0) / (t1 - t0);
}

bool PLFunction::is_convex() const {
  const auto ps = pieces();
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (ps[i].line.slope < ps[i - 1].line.slope) return false;
  }
  return true;
}

PLFunction pl_upper_envelope(std::span<const Line> lines) {
  if (lines.empty()) throw Error(ErrorCode::kValidation, "upper envelope of an empty set of lines");

  // Sort by slope; for equal slopes only the largest intercept matters.
  std::vector<Line> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
    return a.slope != b.slope ? a.slope < b.slope : a.intercept < b.intercept;
  });
  std::vector<Line> distinct;
  for (const auto& l : sorted) {
    if (!distinct.empty() && distinct.back().slope == l.slope) distinct.pop_back();
    distinct.push_back(l);
  }

  auto cross = [](const Line& a, const Line& b) -> Rational {
    return (a.intercept - b.intercept) / (b.slope - a.slope);
  };

  // Upper hull over R. hull[i] is maximal on [start[i], start[i+1]].
  std::vector<Line> hull;
  for (const auto& l : distinct) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], l) <= cross(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(l);
  }

  // Clip to [0, 1].
  std::vector<Rational> breakpoints{Rational(0)};
  std::size_t active = 0;
  while (active + 1 < hull.size() && cross(hull[active], hull[active + 1]) <= 0) ++active;
  std::vector<Rational> values{hull[active].at(0)};
  while (active + 1 < hull.size()) {
    const Rational t = cross(hull[active], hull[active + 1]);
    if (t >= 1) break;
    breakpoints.push_back(t);
    values.push_back(hull[active].at(t));
    ++active;
  }
  breakpoints.push_back(Rational(1));
  values.push_back(hull[active].at(1));
  return PLFunction(std::move(breakpoints), std::move(values));
}

PLFunction pl_subtract(const PLFunction& f, const PLFunction& g) {
  auto ts = merged_breakpoints(f, g);
  std::vector<Rational> values;
  values.reserve(ts.size());
  for (const auto& t : ts) values.push_back(f(t) - g(t));
  return PLFunction(std::move(ts), std::move(values));
}

PLFunction pl_add(const PLFunction& f, const PLFunction& g) {
  auto ts = merged_breakpoints(f, g);
  std::vector<Rational> values;
  values.reserve(ts.size());
  for (const auto& t : ts) values.push_back(f(t) + g(t));
  return PLFunction(std::move(ts), std::move(values));
}

std::optional<Rational> pl_compare(const PLFunction& f, const PLFunction& g) {
  for (const auto& t : merged_breakpoints(f, g)) {
    if (f(t) > g(t)) return t;
  }
  return std::nullopt;
}

}  // namespace cusp
