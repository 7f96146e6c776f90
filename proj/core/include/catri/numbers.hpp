#pragma once

// Catalan numbers, the unified triangle C(m,k) = (m-2k)/m * binom(m,k), the
// Catalan triangles B(n,k) and A(n,k), generalized Catalan numbers and the
// auxiliary sequences a(n), b(n) that appear in the cube sums.
//
// Whole triangle rows are memoized in a shared LRU cache (RowCache); single
// entries of very large rows are computed directly.

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catri/exact.hpp"

namespace catri {

enum class Triangle { kC, kB, kA };

std::string_view triangle_name(Triangle t);

// One row of a triangle: values[i] holds column first_column + i.
struct TriangleRow {
  std::int64_t first_column = 0;
  std::vector<BigInt> values;

  std::int64_t last_column() const {
    return first_column + static_cast<std::int64_t>(values.size()) - 1;
  }
  bool has(std::int64_t k) const {
    return k >= first_column && k <= last_column();
  }
  // Throws DomainError outside the row.
  const BigInt& at(std::int64_t k) const;
  std::size_t byte_size() const;
};

// Thread-safe LRU memo of triangle rows under a byte budget. Rows are
// built outside the lock and published whole, so a reader either misses
// or sees a complete row. Rows handed out stay alive after eviction.
class RowCache {
 public:
  static constexpr std::size_t kDefaultByteBudget = std::size_t{256} << 20;

  explicit RowCache(std::size_t byte_budget = kDefaultByteBudget)
      : budget_(byte_budget) {}

  static RowCache& global();

  std::shared_ptr<const TriangleRow> get(Triangle t, std::int64_t index);

  void set_byte_budget(std::size_t bytes);
  std::size_t byte_budget() const;
  std::size_t bytes_in_use() const;
  std::size_t size() const;
  void clear();

 private:
  struct Key {
    Triangle triangle;
    std::int64_t index;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::int64_t>{}(k.index * 3 + static_cast<int>(k.triangle));
    }
  };
  struct Entry {
    Key key;
    std::shared_ptr<const TriangleRow> row;
    std::size_t bytes;
  };

  void evict_locked();

  mutable std::mutex mutex_;
  std::size_t budget_;
  std::size_t in_use_ = 0;
  std::list<Entry> lru_;  // front = most recent
  std::unordered_map<Key, std::list<Entry>::iterator, KeyHash> index_;
};

// When enabled (the default in builds without NDEBUG), every freshly built
// row is cross-checked against the integrality witness
//   C(m,k) == binom(m,k) - 2 binom(m-1,k-1)
// and an IntegrityError is raised on disagreement.
void set_integrity_witness(bool enabled);
bool integrity_witness_enabled();

// Largest row index memoized by c_row(); entries of larger rows are
// computed one at a time.
inline constexpr std::int64_t kMaxMemoizedCRow = 4096;

// Rows are built on first use (memoized); all throw DomainError on invalid
// indices. c_row(m): k = 0..m. b_row(n): k = 0..n. a_row(n): k = 1..n+1.
std::shared_ptr<const TriangleRow> c_row(std::int64_t m);
std::shared_ptr<const TriangleRow> b_row(std::int64_t n);
std::shared_ptr<const TriangleRow> a_row(std::int64_t n);

BigInt catalan(std::int64_t n);
BigInt c_number(std::int64_t m, std::int64_t k);
// B(n,0) is defined and equals 0.
BigInt b_number(std::int64_t n, std::int64_t k);
BigInt a_number(std::int64_t n, std::int64_t k);
// kC_n = binom(nk, n-1) / n, k >= 1, n >= 1.
BigInt gen_catalan(std::int64_t k, std::int64_t n);
// a(n) = sum_{k=0}^{n} binom(n+k, n)^2.
BigInt seq_a(std::int64_t n);
// b(n) = sum_{k=0}^{n} k/n * binom(2n-k-1, n-1)^2.
BigInt seq_b(std::int64_t n);
// b(n) by its reflected form sum_{k=0}^{n} (n-k)/n * binom(n-1+k, n-1)^2.
BigInt seq_b_reflected(std::int64_t n);

enum class SequenceName { kCatalan, kGenCatalan, kSeqA, kSeqB, kCRow, kBRow, kARow };

struct SequenceSpec {
  SequenceName name = SequenceName::kCatalan;
  // gen_catalan: the k of kC_n. c_row/b_row/a_row: the row index.
  std::int64_t parameter = 0;
  std::int64_t start = 0;
  std::int64_t count = 1;
};

// Maps "catalan", "gen-catalan", "a", "b", "c-row", "b-row", "a-row" (and
// the underscore spellings) to a SequenceName. Throws DomainError.
SequenceName parse_sequence_name(std::string_view text);

// Contiguous slice [start, start+count) of the requested sequence or row.
// Throws DomainError when the slice leaves the sequence's domain.
std::vector<BigInt> generate(const SequenceSpec& spec);

}  // namespace catri
