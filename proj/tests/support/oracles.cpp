#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::vector<bool> closure(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
  in[0] = true;
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (auto g : gens) {
      if (g <= x && in[static_cast<std::size_t>(x - g)]) {
        in[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return in;
}

namespace {

using Series = std::vector<mpq_class>;

Series multiply(const Series& a, const Series& b, std::size_t n) {
  Series out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

std::size_t order(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) return i;
  }
  return s.size();
}

}  // namespace

std::vector<bool> parametrization_orders(std::int64_t p, const std::vector<std::int64_t>& q, std::int64_t n) {
  const auto size = static_cast<std::size_t>(n);
  Series x(size, 0);
  Series y(size, 0);
  if (static_cast<std::size_t>(p) < size) x[static_cast<std::size_t>(p)] = 1;
  for (auto e : q) {
    if (static_cast<std::size_t>(e) < size) y[static_cast<std::size_t>(e)] = 1;
  }

  // Every monomial x^i y^j of order i p + j q1 < n.
  std::vector<Series> rows;
  Series xi(size, 0);
  xi[0] = 1;
  for (std::int64_t i = 0; i * p < n; ++i) {
    Series m = xi;
    for (std::int64_t j = 0; i * p + j * q.front() < n; ++j) {
      rows.push_back(m);
      m = multiply(m, y, size);
    }
    xi = multiply(xi, x, size);
  }

  // Reduce to distinct leading orders.
  std::vector<Series> basis(size);
  std::vector<bool> has(size, false);
  for (auto row : rows) {
    while (true) {
      const std::size_t o = order(row);
      if (o == size) break;
      if (!has[o]) {
        basis[o] = row;
        has[o] = true;
        break;
      }
      const mpq_class factor = row[o] / basis[o][o];
      for (std::size_t k = o; k < size; ++k) row[k] -= factor * basis[o][k];
    }
  }
  return has;
}

std::int64_t count(const std::vector<bool>& table, std::int64_t m) {
  std::int64_t c = 0;
  for (std::int64_t x = 0; x < m; ++x) c += table[static_cast<std::size_t>(x)] ? 1 : 0;
  return c;
}

std::int64_t gaps_at_least(const std::vector<bool>& table, std::int64_t m) {
  std::int64_t c = 0;
  const auto end = static_cast<std::int64_t>(table.size());
  for (std::int64_t x = m; x < end; ++x) {
    if (x < 0 || !table[static_cast<std::size_t>(x)]) ++c;
  }
  return c;
}

cusp::CharSeq random_char_seq(std::mt19937_64& rng, std::int64_t max_delta, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
  std::uniform_int_distribution<std::int64_t> factor_dist(2, 5);
  std::uniform_int_distribution<std::int64_t> step_dist(1, 6);
  while (true) {
    const std::size_t n = len_dist(rng);
    std::vector<std::int64_t> d(n);
    std::int64_t p = 1;
    for (auto& f : d) {
      f = factor_dist(rng);
      p *= f;
    }
    // e_k = p / (d_1 ... d_k); q_k = e_k t with gcd(t, d_k) = 1.
    std::vector<std::int64_t> q;
    std::int64_t e = p;
    std::int64_t prev = p;
    for (std::size_t k = 0; k < n; ++k) {
      const std::int64_t ek = e / d[k];
      std::int64_t t = prev / ek + step_dist(rng);
      while (std::gcd(t, d[k]) != 1) ++t;
      q.push_back(ek * t);
      prev = q.back();
      e = ek;
    }
    const auto c = cusp::validate_char_seq(p, q);
    if (cusp::delta_from_char_seq(c) <= max_delta) return c;
  }
}

cusp::CharSeq random_torus(std::mt19937_64& rng, std::int64_t max_delta) {
  std::uniform_int_distribution<std::int64_t> pd(2, 12);
  while (true) {
    const std::int64_t p = pd(rng);
    std::uniform_int_distribution<std::int64_t> qd(p + 1, 4 * p + 10);
    const std::int64_t q = qd(rng);
    if (std::gcd(p, q) != 1 || (p - 1) * (q - 1) / 2 > max_delta) continue;
    const std::vector<std::int64_t> qs{q};
    return cusp::validate_char_seq(p, qs);
  }
}

cusp::Rational random_rational(std::mt19937_64& rng, std::int64_t num_range, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> num(-num_range, num_range);
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  cusp::Rational r(mpz_class(static_cast<long>(num(rng))), mpz_class(static_cast<long>(den(rng))));
  r.canonicalize();
  return r;
}

}  // namespace oracle
