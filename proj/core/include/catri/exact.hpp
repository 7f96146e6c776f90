#pragma once

// Exact integer and rational arithmetic plus binomial coefficients.
//
// BigInt and Rational are immutable-by-convention value types over GMP.
// Rational is always stored in lowest terms with a positive denominator,
// so operator== is canonical-form equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "catri/errors.hpp"

namespace catri {

class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)
  explicit BigInt(mpz_class value) : value_(std::move(value)) {}

  // Parses an optionally signed decimal string. Throws DomainError.
  static BigInt parse(std::string_view text);

  const mpz_class& mpz() const { return value_; }

  std::string to_string() const { return value_.get_str(10); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_int64() const;
  std::int64_t to_int64() const;  // Throws DomainError when out of range.

  // Approximate heap + object footprint, used for cache budgeting.
  std::size_t byte_size() const;

  BigInt& operator+=(const BigInt& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigInt& operator-=(const BigInt& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  BigInt& operator*=(const BigInt& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
  friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
  friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
  friend BigInt operator-(const BigInt& x) { return BigInt(mpz_class(-x.value_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

 private:
  mpz_class value_;
};

BigInt pow(const BigInt& base, unsigned exponent);
BigInt abs(const BigInt& x);

// a / b when b divides a. Throws IntegrityError otherwise (including b == 0).
BigInt exact_div(const BigInt& a, const BigInt& b);

// Truncated remainder a - b*trunc(a/b); sign follows a. Throws DomainError
// when b == 0.
BigInt remainder(const BigInt& a, const BigInt& b);

class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  // Throws DomainError on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p" or "p/q".
  static Rational parse(std::string_view text);

  BigInt numerator() const { return BigInt(mpz_class(value_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(value_.get_den())); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  mpq_class value_;
};

// ---------------------------------------------------------------------------
// Binomial coefficients.
//
// binomial(u, v) is zero for v < 0 and for v > u; u < 0 is a DomainError.
// Rows u <= binomial_cache_limit() are built once and shared between
// threads; larger u falls back to the multiplicative formula.

BigInt binomial(std::int64_t u, std::int64_t v);

using BinomialRow = std::vector<BigInt>;

// Row u of Pascal's triangle, entries v = 0..u.
std::shared_ptr<const BinomialRow> binomial_row(std::int64_t u);

std::int64_t binomial_cache_limit();
// Drops cached rows above the new limit. 0 disables the cache.
void set_binomial_cache_limit(std::int64_t rows);

// H_n = 1 + 1/2 + ... + 1/n. Throws DomainError for n <= 0.
Rational harmonic(std::int64_t n);

}  // namespace catri
