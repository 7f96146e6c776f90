#include "catri/numbers.hpp"

#include <gtest/gtest.h>

#include <thread>

#include "catri/errors.hpp"
#include "oracle.hpp"

namespace catri {
namespace {

TEST(CatalanTest, MatchesRecurrence) {
  for (std::int64_t n = 0; n <= 80; ++n) EXPECT_EQ(catalan(n), oracle::big(oracle::catalan(n)));
  EXPECT_THROW(catalan(-1), DomainError);
}

TEST(CTriangleTest, MatchesDefinitionAndIsIntegral) {
  for (std::int64_t m = 1; m <= 70; ++m) {
    auto row = c_row(m);
    ASSERT_EQ(row->first_column, 0);
    ASSERT_EQ(row->last_column(), m);
    for (std::int64_t k = 0; k <= m; ++k) {
      mpq_class q = oracle::c_entry(m, k);
      ASSERT_EQ(q.get_den(), 1) << m << "," << k;
      EXPECT_EQ(row->at(k), oracle::big(q.get_num()));
      EXPECT_EQ(c_number(m, k), row->at(k));
    }
  }
}

TEST(CTriangleTest, AntisymmetricInColumns) {
  for (std::int64_t m = 1; m <= 60; ++m) {
    for (std::int64_t k = 0; k <= m; ++k) EXPECT_EQ(c_number(m, k), -c_number(m, m - k));
  }
}

TEST(CTriangleTest, DomainErrors) {
  EXPECT_THROW(c_number(0, 0), DomainError);
  EXPECT_THROW(c_number(5, 6), DomainError);
  EXPECT_THROW(c_number(5, -1), DomainError);
  EXPECT_THROW(c_row(0), DomainError);
}

TEST(CTriangleTest, LargeRowEntryComputedDirectly) {
  const std::int64_t m = kMaxMemoizedCRow + 10;
  EXPECT_EQ(c_number(m, 3), oracle::big(oracle::as_integer(oracle::c_entry(m, 3))));
}

TEST(BTriangleTest, MatchesDefinitionAndSpecialisation) {
  for (std::int64_t n = 1; n <= 50; ++n) {
    EXPECT_EQ(b_number(n, 0), BigInt(0));
    for (std::int64_t k = 1; k <= n; ++k) {
      EXPECT_EQ(b_number(n, k), oracle::big(oracle::b_entry(n, k)));
      EXPECT_EQ(b_number(n, k), c_number(2 * n, n - k));
    }
    EXPECT_EQ(b_number(n, 1), catalan(n));
  }
  EXPECT_THROW(b_number(0, 0), DomainError);
  EXPECT_THROW(b_number(3, 4), DomainError);
}

TEST(ATriangleTest, MatchesDefinitionAndSpecialisation) {
  for (std::int64_t n = 1; n <= 50; ++n) {
    auto row = a_row(n);
    ASSERT_EQ(row->first_column, 1);
    ASSERT_EQ(row->last_column(), n + 1);
    for (std::int64_t k = 1; k <= n + 1; ++k) {
      EXPECT_EQ(a_number(n, k), oracle::big(oracle::a_entry(n, k)));
      EXPECT_EQ(a_number(n, k), c_number(2 * n + 1, n + 1 - k));
    }
    EXPECT_EQ(a_number(n, 1), catalan(n));
  }
  EXPECT_THROW(a_number(0, 1), DomainError);
  EXPECT_THROW(a_number(2, 0), DomainError);
}

TEST(IntegrityWitnessTest, RowsAgreeWithWitnessEnabledOrNot) {
  const bool saved = integrity_witness_enabled();
  RowCache::global().clear();
  set_integrity_witness(false);
  auto plain = *c_row(33);
  RowCache::global().clear();
  set_integrity_witness(true);
  auto checked = *c_row(33);
  set_integrity_witness(saved);
  EXPECT_EQ(plain.values, checked.values);
}

TEST(GenCatalanTest, Values) {
  for (std::int64_t n = 1; n <= 30; ++n) EXPECT_EQ(gen_catalan(2, n), catalan(n));
  const std::int64_t ternary[] = {1, 3, 12, 55, 273};
  for (std::int64_t n = 1; n <= 5; ++n) EXPECT_EQ(gen_catalan(3, n), BigInt(ternary[n - 1]));
  for (std::int64_t n = 1; n <= 10; ++n) EXPECT_EQ(gen_catalan(1, n), BigInt(1));
  EXPECT_THROW(gen_catalan(0, 3), DomainError);
  EXPECT_THROW(gen_catalan(2, 0), DomainError);
}

TEST(AuxSequenceTest, FirstTerms) {
  const char* a[] = {"1", "5", "46", "517", "6376", "82994", "1119210", "15475205",
                     "217994860", "3115374880"};
  const char* b[] = {"1", "3", "19", "163", "1626", "17769", "206487", "2508195",
                     "31504240", "406214878"};
  for (std::int64_t i = 0; i < 10; ++i) {
    EXPECT_EQ(seq_a(i).to_string(), a[i]);
    EXPECT_EQ(seq_b(i + 1).to_string(), b[i]);
  }
}

TEST(AuxSequenceTest, MatchOracleAndReflectedForm) {
  for (std::int64_t n = 0; n <= 60; ++n) EXPECT_EQ(seq_a(n), oracle::big(oracle::seq_a(n)));
  for (std::int64_t n = 1; n <= 60; ++n) {
    mpq_class b = oracle::seq_b(n);
    ASSERT_EQ(b.get_den(), 1);
    EXPECT_EQ(seq_b(n), oracle::big(b.get_num()));
    EXPECT_EQ(seq_b_reflected(n), seq_b(n));
  }
  EXPECT_THROW(seq_a(-1), DomainError);
  EXPECT_THROW(seq_b(0), DomainError);
}

TEST(RowCacheTest, EvictionKeepsValuesCorrect) {
  RowCache cache(4096);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::int64_t m = 1; m <= 40; ++m) {
      auto row = cache.get(Triangle::kC, m);
      EXPECT_EQ(row->at(1), BigInt(m - 2));
    }
  }
  EXPECT_LE(cache.bytes_in_use(), std::max<std::size_t>(4096, cache.get(Triangle::kC, 40)->byte_size()));
  cache.set_byte_budget(0);
  EXPECT_EQ(cache.size(), 0u);
  auto kept = cache.get(Triangle::kB, 5);
  cache.clear();
  EXPECT_EQ(kept->at(3), BigInt(27));
}

TEST(RowCacheTest, ConcurrentReadersSeeIdenticalRows) {
  RowCache cache(1 << 16);
  std::vector<std::vector<BigInt>> seen(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([t, &cache, &seen] {
        for (std::int64_t n = 1; n <= 60; ++n) {
          seen[t].push_back(cache.get(Triangle::kA, 1 + (n * (t + 1)) % 60)->at(1));
        }
      });
    }
  }
  for (int t = 0; t < 4; ++t) {
    for (std::int64_t n = 1; n <= 60; ++n) {
      EXPECT_EQ(seen[t][n - 1], catalan(1 + (n * (t + 1)) % 60));
    }
  }
}

TEST(GenerateTest, SlicesAndNames) {
  EXPECT_EQ(parse_sequence_name("seq-a"), SequenceName::kSeqA);
  EXPECT_EQ(parse_sequence_name("b_row"), SequenceName::kBRow);
  EXPECT_THROW(parse_sequence_name("fibonacci"), DomainError);

  auto cat = generate({SequenceName::kCatalan, 0, 0, 7});
  std::vector<BigInt> expect{1, 1, 2, 5, 14, 42, 132};
  EXPECT_EQ(cat, expect);

  auto row = generate({SequenceName::kBRow, 6, 1, 6});
  std::vector<BigInt> b6{132, 165, 110, 44, 10, 1};
  EXPECT_EQ(row, b6);

  auto a = generate({SequenceName::kARow, 3, 2, 3});
  std::vector<BigInt> a3{9, 5, 1};
  EXPECT_EQ(a, a3);

  EXPECT_THROW(generate({SequenceName::kSeqA, 0, 3, 0}), DomainError);
  EXPECT_THROW(generate({SequenceName::kSeqB, 0, 0, 2}), DomainError);
  EXPECT_THROW(generate({SequenceName::kCRow, 4, 3, 3}), DomainError);
  EXPECT_THROW(generate({SequenceName::kCatalan, 0, 0, -1}), DomainError);
}

}  // namespace
}  // namespace catri
