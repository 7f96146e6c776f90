#include "catri/exact.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "catri/errors.hpp"
#include "oracle.hpp"

namespace catri {
namespace {

TEST(BigIntTest, ParseRoundTrip) {
  for (const char* text : {"0", "1", "-1", "123456789012345678901234567890",
                           "-98765432109876543210"}) {
    EXPECT_EQ(BigInt::parse(text).to_string(), text);
  }
  EXPECT_THROW(BigInt::parse(""), DomainError);
  EXPECT_THROW(BigInt::parse("12x"), DomainError);
  EXPECT_THROW(BigInt::parse("1/2"), DomainError);
}

TEST(BigIntTest, ArithmeticAgreesWithInt64) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t a = gen.uniform(-1'000'000'000, 1'000'000'000);
    const std::int64_t b = gen.uniform(-1'000'000'000, 1'000'000'000);
    EXPECT_EQ(BigInt(a) + BigInt(b), BigInt(a + b));
    EXPECT_EQ(BigInt(a) - BigInt(b), BigInt(a - b));
    EXPECT_EQ(BigInt(a) * BigInt(b), BigInt(a * b));
    EXPECT_EQ(BigInt(a) < BigInt(b), a < b);
    if (b != 0) {
      EXPECT_EQ(remainder(BigInt(a), BigInt(b)), BigInt(a % b));
      EXPECT_EQ(exact_div(BigInt(a * b), BigInt(b)), BigInt(a));
    }
  }
}

TEST(BigIntTest, ExactDivisionRejectsInexact) {
  EXPECT_EQ(exact_div(BigInt(42), BigInt(-6)), BigInt(-7));
  EXPECT_THROW(exact_div(BigInt(7), BigInt(2)), IntegrityError);
  EXPECT_THROW(exact_div(BigInt(7), BigInt(0)), IntegrityError);
  EXPECT_THROW(remainder(BigInt(7), BigInt(0)), DomainError);
}

TEST(BigIntTest, PowAndInt64Fit) {
  EXPECT_EQ(pow(BigInt(2), 100).to_string(), "1267650600228229401496703205376");
  EXPECT_EQ(pow(BigInt(-3), 3), BigInt(-27));
  EXPECT_TRUE(BigInt(INT64_MIN).fits_int64());
  EXPECT_FALSE((BigInt(INT64_MAX) + BigInt(1)).fits_int64());
  EXPECT_EQ(BigInt(-5).to_int64(), -5);
}

TEST(RationalTest, CanonicalForm) {
  Rational half(BigInt(2), BigInt(4));
  EXPECT_EQ(half, Rational(BigInt(1), BigInt(2)));
  EXPECT_EQ(half.to_string(), "1/2");
  Rational neg(BigInt(3), BigInt(-6));
  EXPECT_EQ(neg.denominator(), BigInt(2));
  EXPECT_EQ(neg.numerator(), BigInt(-1));
  EXPECT_EQ(Rational(BigInt(6), BigInt(3)).to_string(), "2");
  EXPECT_TRUE(Rational(BigInt(6), BigInt(3)).is_integer());
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(RationalTest, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("-10/4").to_string(), "-5/2");
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), DomainError);
  EXPECT_THROW(Rational::parse("a/b"), DomainError);
}

TEST(RationalTest, FieldLawsOnRandomValues) {
  oracle::Gen gen(5);
  auto draw = [&] {
    std::int64_t den = 0;
    while (den == 0) den = gen.uniform(-50, 50);
    return Rational(BigInt(gen.uniform(-200, 200)), BigInt(den));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    Rational x = draw(), y = draw(), z = draw();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x - x, Rational(0));
    if (y.sign() != 0) {
      EXPECT_EQ((x / y) * y, x);
    }
  }
}

TEST(BinomialTest, MatchesPascalRule) {
  for (std::int64_t u = 0; u <= 80; ++u) {
    for (std::int64_t v = -2; v <= u + 2; ++v) {
      EXPECT_EQ(binomial(u, v), oracle::big(oracle::binom(u, v))) << u << "," << v;
    }
  }
}

TEST(BinomialTest, Domain) {
  EXPECT_EQ(binomial(5, -1), BigInt(0));
  EXPECT_EQ(binomial(5, 6), BigInt(0));
  EXPECT_THROW(binomial(-1, 0), DomainError);
}

TEST(BinomialTest, BeyondCacheLimit) {
  const auto saved = binomial_cache_limit();
  set_binomial_cache_limit(8);
  EXPECT_EQ(binomial(200, 100), oracle::big(oracle::binom(200, 100)));
  auto row = binomial_row(30);
  ASSERT_EQ(row->size(), 31u);
  EXPECT_EQ((*row)[15], oracle::big(oracle::binom(30, 15)));
  set_binomial_cache_limit(saved);
  EXPECT_EQ(binomial(300, 150), oracle::big(oracle::binom(300, 150)));
}

TEST(BinomialTest, ConcurrentCallsAgree) {
  std::vector<std::vector<BigInt>> seen(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([t, &seen] {
        for (std::int64_t u = 0; u < 120; ++u) seen[t].push_back(binomial(u, u / 3));
      });
    }
  }
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
}

TEST(HarmonicTest, Values) {
  EXPECT_EQ(harmonic(1), Rational(1));
  EXPECT_EQ(harmonic(4), Rational(BigInt(25), BigInt(12)));
  for (std::int64_t n = 1; n <= 200; ++n) EXPECT_EQ(harmonic(n), oracle::rat(oracle::harmonic(n)));
  EXPECT_THROW(harmonic(0), DomainError);
}

}  // namespace
}  // namespace catri
