#include "catri/exact.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <string>

namespace catri {

BigInt::BigInt(std::int64_t value) {
  static_assert(sizeof(long) == sizeof(std::int64_t),
                "mpz_class is constructed from long");
  value_ = static_cast<long>(value);
}

BigInt BigInt::parse(std::string_view text) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits_from ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(digits_from),
                   s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("not a decimal integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(mpz_class(s, 10));
}

bool BigInt::fits_int64() const { return value_.fits_slong_p(); }

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw DomainError("integer does not fit in 64 bits");
  return value_.get_si();
}

std::size_t BigInt::byte_size() const {
  return sizeof(BigInt) +
         mpz_size(value_.get_mpz_t()) * sizeof(mp_limb_t);
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) {
  return os << x.to_string();
}

BigInt pow(const BigInt& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt abs(const BigInt& x) { return BigInt(mpz_class(::abs(x.mpz()))); }

BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw IntegrityError("exact_div: division by zero");
  if (!mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t())) {
    throw IntegrityError("exact_div: " + b.to_string() + " does not divide " +
                         a.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(q));
}

BigInt remainder(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("remainder: division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return BigInt(std::move(r));
}

// --- Rational --------------------------------------------------------------

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& value) : value_(value.mpz()) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator.is_zero()) throw DomainError("zero denominator");
  value_ = mpq_class(numerator.mpz(), denominator.mpz());
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::parse(text));
  return Rational(BigInt::parse(text.substr(0, slash)),
                  BigInt::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str(10);
  return value_.get_str(10);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) {
  Rational r;
  r.value_ = -x.value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}

// --- Binomials -------------------------------------------------------------

namespace {

// Builds row u by the multiplicative recurrence
//   C(u, v+1) = C(u, v) * (u - v) / (v + 1),
// each step an exact division. Only the first half is multiplied out; the
// second half mirrors it.
BinomialRow build_binomial_row(std::int64_t u) {
  BinomialRow row(static_cast<std::size_t>(u + 1));
  mpz_class current = 1;
  std::int64_t half = u / 2;
  for (std::int64_t v = 0; v <= half; ++v) {
    row[static_cast<std::size_t>(v)] = BigInt(current);
    row[static_cast<std::size_t>(u - v)] = BigInt(current);
    current *= static_cast<unsigned long>(u - v);
    mpz_divexact_ui(current.get_mpz_t(), current.get_mpz_t(),
                    static_cast<unsigned long>(v + 1));
  }
  return row;
}

BigInt multiplicative_binomial(std::int64_t u, std::int64_t v) {
  std::int64_t w = std::min(v, u - v);
  mpz_class current = 1;
  for (std::int64_t i = 1; i <= w; ++i) {
    current *= static_cast<unsigned long>(u - w + i);
    mpz_divexact_ui(current.get_mpz_t(), current.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return BigInt(std::move(current));
}

class PascalCache {
 public:
  static PascalCache& instance() {
    static PascalCache cache;
    return cache;
  }

  std::int64_t limit() const {
    std::shared_lock lock(mutex_);
    return static_cast<std::int64_t>(rows_.size()) - 1;
  }

  void set_limit(std::int64_t limit) {
    std::unique_lock lock(mutex_);
    rows_.resize(static_cast<std::size_t>(std::max<std::int64_t>(limit, -1) + 1));
  }

  // Null when u is beyond the limit.
  std::shared_ptr<const BinomialRow> find_or_build(std::int64_t u) {
    {
      std::shared_lock lock(mutex_);
      if (u >= static_cast<std::int64_t>(rows_.size())) return nullptr;
      if (auto row = rows_[static_cast<std::size_t>(u)]) return row;
    }
    auto built = std::make_shared<const BinomialRow>(build_binomial_row(u));
    std::unique_lock lock(mutex_);
    if (u >= static_cast<std::int64_t>(rows_.size())) return built;
    auto& slot = rows_[static_cast<std::size_t>(u)];
    if (!slot) slot = std::move(built);
    return slot;
  }

 private:
  PascalCache() : rows_(513) {}

  mutable std::shared_mutex mutex_;
  std::vector<std::shared_ptr<const BinomialRow>> rows_;
};

void require_row_index(std::int64_t u) {
  if (u < 0) {
    throw DomainError("binomial: negative upper index " + std::to_string(u));
  }
}

}  // namespace

BigInt binomial(std::int64_t u, std::int64_t v) {
  require_row_index(u);
  if (v < 0 || v > u) return BigInt(0);
  if (auto row = PascalCache::instance().find_or_build(u)) {
    return (*row)[static_cast<std::size_t>(v)];
  }
  return multiplicative_binomial(u, v);
}

std::shared_ptr<const BinomialRow> binomial_row(std::int64_t u) {
  require_row_index(u);
  if (auto row = PascalCache::instance().find_or_build(u)) return row;
  return std::make_shared<const BinomialRow>(build_binomial_row(u));
}

std::int64_t binomial_cache_limit() { return PascalCache::instance().limit(); }

void set_binomial_cache_limit(std::int64_t rows) {
  PascalCache::instance().set_limit(rows);
}

// --- Harmonic numbers ------------------------------------------------------

namespace {

constexpr std::int64_t kHarmonicMemoLimit = 1 << 14;

class HarmonicTable {
 public:
  static HarmonicTable& instance() {
    static HarmonicTable table;
    return table;
  }

  Rational get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<std::int64_t>(values_.size())) {
        return values_[static_cast<std::size_t>(n)];
      }
    }
    std::unique_lock lock(mutex_);
    std::int64_t target = std::min(n, kHarmonicMemoLimit);
    while (static_cast<std::int64_t>(values_.size()) <= target) {
      auto k = static_cast<std::int64_t>(values_.size());
      values_.push_back(values_.back() + Rational(BigInt(1), BigInt(k)));
    }
    if (n < static_cast<std::int64_t>(values_.size())) {
      return values_[static_cast<std::size_t>(n)];
    }
    Rational h = values_.back();
    for (auto k = static_cast<std::int64_t>(values_.size()); k <= n; ++k) {
      h += Rational(BigInt(1), BigInt(k));
    }
    return h;
  }

 private:
  HarmonicTable() : values_{Rational(0)} {}

  std::shared_mutex mutex_;
  std::vector<Rational> values_;  // values_[k] == H_k, H_0 = 0.
};

}  // namespace

Rational harmonic(std::int64_t n) {
  if (n <= 0) {
    throw DomainError("harmonic: n must be >= 1, got " + std::to_string(n));
  }
  return HarmonicTable::instance().get(n);
}

}  // namespace catri
