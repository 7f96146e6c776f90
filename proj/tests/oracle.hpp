#pragma once

// Reference values computed without the library: Pascal's rule (additions
// only) for binomials, the convolution recurrence for Catalan numbers and
// plain rational sums for everything else. Works on raw GMP types so it
// shares no code with catri's wrappers.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "catri/exact.hpp"

namespace oracle {

inline mpz_class binom(std::int64_t u, std::int64_t v) {
  static std::vector<std::vector<mpz_class>> rows{{1}};
  if (u < 0 || v < 0 || v > u) return 0;
  while (static_cast<std::int64_t>(rows.size()) <= u) {
    const auto& prev = rows.back();
    std::vector<mpz_class> next(prev.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(next));
  }
  return rows[u][v];
}

inline mpz_class catalan(std::int64_t n) {
  static std::vector<mpz_class> c{1};
  while (static_cast<std::int64_t>(c.size()) <= n) {
    mpz_class s = 0;
    const auto k = c.size();
    for (std::size_t i = 0; i < k; ++i) s += c[i] * c[k - 1 - i];
    c.push_back(s);
  }
  return c[n];
}

// (m-2k)/m binom(m,k) as a rational; integrality is asserted by callers.
inline mpq_class c_entry(std::int64_t m, std::int64_t k) {
  mpq_class q(mpz_class(m - 2 * k) * binom(m, k), mpz_class(m));
  q.canonicalize();
  return q;
}

inline mpz_class as_integer(const mpq_class& q) { return q.get_num(); }

inline mpz_class b_entry(std::int64_t n, std::int64_t k) {
  mpq_class q(mpz_class(k) * binom(2 * n, n - k), mpz_class(n));
  q.canonicalize();
  return as_integer(q);
}

inline mpz_class a_entry(std::int64_t n, std::int64_t k) {
  mpq_class q(mpz_class(2 * k - 1) * binom(2 * n + 1, n + 1 - k), mpz_class(2 * n + 1));
  q.canonicalize();
  return as_integer(q);
}

inline mpz_class seq_a(std::int64_t n) {
  mpz_class s = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    mpz_class b = binom(n + k, n);
    s += b * b;
  }
  return s;
}

inline mpq_class seq_b(std::int64_t n) {
  mpq_class s = 0;
  for (std::int64_t k = 0; k <= n; ++k) {
    mpz_class b = binom(2 * n - k - 1, n - 1);
    s += mpq_class(mpz_class(k) * b * b, mpz_class(n));
  }
  s.canonicalize();
  return s;
}

inline mpq_class harmonic(std::int64_t n) {
  mpq_class h = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    h += mpq_class(1, static_cast<unsigned long>(k));
    h.canonicalize();
  }
  return h;
}

inline catri::BigInt big(const mpz_class& z) { return catri::BigInt(z); }

inline catri::Rational rat(const mpq_class& q) {
  return catri::Rational(big(q.get_num()), big(q.get_den()));
}

// Deterministic generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
