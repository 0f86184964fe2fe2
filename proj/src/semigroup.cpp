#include "cusp/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cusp/error.hpp"

namespace cusp {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kTooLarge, "characteristic sequence too large: integer overflow");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kTooLarge, "characteristic sequence too large: integer overflow");
  }
  return out;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  if (!text.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || begin == end) {
    throw Error(ErrorCode::kParse,
                "cannot parse " + std::string(what) + " '" + std::string(text) + "' as an integer");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string CharSeq::to_string() const {
  std::ostringstream out;
  out << p_ << ';';
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (i != 0) out << ',';
    out << q_[i];
  }
  return out.str();
}

CharSeq validate_char_seq(std::int64_t p, std::span<const std::int64_t> q) {
  if (p <= 0) {
    throw Error(ErrorCode::kNotIncreasing, "multiplicity p must be positive, got " + std::to_string(p));
  }
  if (q.empty()) {
    throw Error(ErrorCode::kNotIncreasing, "characteristic sequence needs at least one exponent q1");
  }
  std::int64_t prev = p;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] <= prev) {
      std::ostringstream msg;
      msg << "sequence must be strictly increasing: q" << k + 1 << " = " << q[k]
          << " is not greater than " << (k == 0 ? "p" : "q" + std::to_string(k)) << " = " << prev;
      throw Error(ErrorCode::kNotIncreasing, msg.str());
    }
    prev = q[k];
  }
  std::int64_t total = p;
  for (const auto x : q) total = std::gcd(total, x);
  if (total != 1) {
    throw Error(ErrorCode::kGcdNotOne, "gcd(p,q1,...,qn) = " + std::to_string(total) + ", must be 1");
  }
  std::int64_t e = p;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] % e == 0) {
      std::ostringstream msg;
      msg << "gcd chain violated: gcd(p";
      for (std::size_t j = 0; j < k; ++j) msg << ",q" << j + 1;
      msg << ") = " << e << " divides q" << k + 1 << " = " << q[k];
      throw Error(ErrorCode::kGcdChainViolated, msg.str());
    }
    e = std::gcd(e, q[k]);
  }
  return CharSeq(p, std::vector<std::int64_t>(q.begin(), q.end()));
}

CharSeq parse_char_seq(std::string_view text) {
  const auto body = trim(text);
  const auto semi = body.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorCode::kParse,
                "characteristic sequence '" + std::string(text) + "' must have the form p;q1,q2,...");
  }
  const std::int64_t p = parse_int(trim(body.substr(0, semi)), "multiplicity");
  std::vector<std::int64_t> q;
  auto rest = body.substr(semi + 1);
  while (true) {
    const auto comma = rest.find(',');
    q.push_back(parse_int(trim(rest.substr(0, comma)), "exponent"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return validate_char_seq(p, q);
}

std::vector<std::int64_t> generators_from_char_seq(const CharSeq& c) {
  const auto& q = c.exponents();
  std::vector<std::int64_t> gens{c.multiplicity(), q[0]};
  std::int64_t e_prev = c.multiplicity();
  std::int64_t e = std::gcd(e_prev, q[0]);
  for (std::size_t k = 1; k < q.size(); ++k) {
    const std::int64_t next = checked_add(checked_mul(e_prev / e, gens.back()), q[k] - q[k - 1]);
    gens.push_back(next);
    e_prev = e;
    e = std::gcd(e, q[k]);
  }
  return gens;
}

std::int64_t delta_from_char_seq(const CharSeq& c) {
  const auto gens = generators_from_char_seq(c);
  const auto& q = c.exponents();
  std::int64_t conductor = 1 - c.multiplicity();
  std::int64_t e_prev = c.multiplicity();
  for (std::size_t k = 0; k < q.size(); ++k) {
    const std::int64_t e = std::gcd(e_prev, q[k]);
    conductor = checked_add(conductor, checked_mul(e_prev / e - 1, gens[k + 1]));
    e_prev = e;
  }
  return conductor / 2;
}

bool Semigroup::contains(std::int64_t x) const noexcept {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return member_[static_cast<std::size_t>(x)];
}

std::int64_t Semigroup::count_below(std::int64_t m) const noexcept {
  if (m <= 0) return 0;
  if (m >= conductor_) return m - delta_;
  return prefix_[static_cast<std::size_t>(m)];
}

std::vector<std::int64_t> Semigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(delta_));
  for (std::int64_t x = 0; x < conductor_; ++x) {
    if (!member_[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

Semigroup semigroup_from_generators(std::span<const std::int64_t> gens) {
  std::vector<std::int64_t> sorted;
  for (auto g : gens) {
    if (g <= 0) {
      throw Error(ErrorCode::kGcdNotOne, "generators must be positive, got " + std::to_string(g));
    }
    sorted.push_back(g);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::int64_t g = std::accumulate(sorted.begin(), sorted.end(), std::int64_t{0},
                                         [](std::int64_t a, std::int64_t b) { return std::gcd(a, b); });
  if (g != 1) {
    throw Error(ErrorCode::kGcdNotOne, "gcd of generators is " + std::to_string(g) + ", must be 1");
  }

  // Forward sieve until a run of `smallest` consecutive members appears; after
  // that every integer is a member.
  const std::int64_t smallest = sorted.front();
  std::vector<bool> member{true};
  std::int64_t run = 1;
  std::int64_t x = 0;
  while (run < smallest) {
    ++x;
    bool in = false;
    for (auto gen : sorted) {
      if (gen > x) break;
      if (member[static_cast<std::size_t>(x - gen)]) {
        in = true;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  const std::int64_t conductor = x - smallest + 1;
  member.resize(static_cast<std::size_t>(conductor) + 1);

  Semigroup s;
  s.conductor_ = conductor;
  s.member_ = std::move(member);
  s.prefix_.assign(static_cast<std::size_t>(conductor) + 1, 0);
  for (std::int64_t m = 1; m <= conductor; ++m) {
    s.prefix_[static_cast<std::size_t>(m)] =
        s.prefix_[static_cast<std::size_t>(m - 1)] + (s.member_[static_cast<std::size_t>(m - 1)] ? 1 : 0);
  }
  s.delta_ = conductor - s.prefix_[static_cast<std::size_t>(conductor)];

  // Minimal generating set: drop any generator that is a sum of two nonzero
  // elements of S.
  for (auto gen : sorted) {
    bool reducible = false;
    for (std::int64_t a = 1; a <= gen / 2 && !reducible; ++a) {
      reducible = s.contains(a) && s.contains(gen - a);
    }
    if (!reducible) s.generators_.push_back(gen);
  }
  return s;
}

Semigroup semigroup_of(const CharSeq& c) {
  const auto gens = generators_from_char_seq(c);
  return semigroup_from_generators(gens);
}

std::int64_t gap_function_eval(const Semigroup& s, std::int64_t m) {
  if (m <= 0) return s.delta() - m;
  if (m >= s.conductor()) return 0;
  // gaps in [m, conductor) = (conductor - m) - members in [m, conductor)
  const std::int64_t members = s.count_below(s.conductor()) - s.count_below(m);
  return (s.conductor() - m) - members;
}

std::vector<bool> brute_force_semigroup(std::span<const std::int64_t> gens, std::int64_t bound) {
  std::vector<bool> table(static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)) + 1, false);
  table[0] = true;
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (auto x : frontier) {
      for (auto g : gens) {
        const std::int64_t y = x + g;
        if (g <= 0 || y > bound || table[static_cast<std::size_t>(y)]) continue;
        table[static_cast<std::size_t>(y)] = true;
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return table;
}

}  // namespace cusp
