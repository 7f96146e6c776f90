#include "catri/numbers.hpp"

#include <atomic>
#include <string>

namespace catri {

namespace {

#ifdef NDEBUG
std::atomic<bool> g_witness{false};
#else
std::atomic<bool> g_witness{true};
#endif

std::string idx(std::int64_t a, std::int64_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Entry (m - 2k)/m * binom(m, k) with binom(m, k) already at hand.
BigInt c_from_binomial(std::int64_t m, std::int64_t k, const BigInt& binom) {
  return exact_div(BigInt(m - 2 * k) * binom, BigInt(m));
}

void check_witness(std::string_view what, std::int64_t m, std::int64_t k,
                   const BigInt& value) {
  BigInt witness = binomial(m, k) - BigInt(2) * binomial(m - 1, k - 1);
  if (witness != value) {
    throw IntegrityError(std::string(what) + " entry for C" + idx(m, k) +
                         " = " + value.to_string() +
                         " disagrees with witness " + witness.to_string());
  }
}

TriangleRow build_c(std::int64_t m) {
  auto binoms = binomial_row(m);
  TriangleRow row{0, {}};
  row.values.reserve(static_cast<std::size_t>(m + 1));
  for (std::int64_t k = 0; k <= m; ++k) {
    row.values.push_back(c_from_binomial(m, k, (*binoms)[static_cast<std::size_t>(k)]));
  }
  if (integrity_witness_enabled()) {
    for (std::int64_t k = 0; k <= m; ++k) check_witness("C", m, k, row.at(k));
  }
  return row;
}

// B(n,k) = k/n * binom(2n, n-k), computed from its own closed form rather
// than through C so that the B/C bridge stays a meaningful check.
TriangleRow build_b(std::int64_t n) {
  auto binoms = binomial_row(2 * n);
  TriangleRow row{0, {}};
  row.values.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) {
    row.values.push_back(exact_div(
        BigInt(k) * (*binoms)[static_cast<std::size_t>(n - k)], BigInt(n)));
  }
  if (integrity_witness_enabled()) {
    for (std::int64_t k = 0; k <= n; ++k) check_witness("B", 2 * n, n - k, row.at(k));
  }
  return row;
}

// A(n,k) = (2k-1)/(2n+1) * binom(2n+1, n+1-k), k = 1..n+1.
TriangleRow build_a(std::int64_t n) {
  auto binoms = binomial_row(2 * n + 1);
  TriangleRow row{1, {}};
  row.values.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 1; k <= n + 1; ++k) {
    row.values.push_back(exact_div(
        BigInt(2 * k - 1) * (*binoms)[static_cast<std::size_t>(n + 1 - k)],
        BigInt(2 * n + 1)));
  }
  if (integrity_witness_enabled()) {
    for (std::int64_t k = 1; k <= n + 1; ++k) {
      check_witness("A", 2 * n + 1, n + 1 - k, row.at(k));
    }
  }
  return row;
}

void require_c_index(std::int64_t m, std::int64_t k) {
  if (m < 1 || k < 0 || k > m) {
    throw DomainError("C" + idx(m, k) + " requires m >= 1 and 0 <= k <= m");
  }
}

void require_b_index(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0 || k > n) {
    throw DomainError("B" + idx(n, k) + " requires n >= 1 and 0 <= k <= n");
  }
}

void require_a_index(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n + 1) {
    throw DomainError("A" + idx(n, k) + " requires n >= 1 and 1 <= k <= n+1");
  }
}

}  // namespace

std::string_view triangle_name(Triangle t) {
  switch (t) {
    case Triangle::kC: return "C";
    case Triangle::kB: return "B";
    case Triangle::kA: return "A";
  }
  return "?";
}

const BigInt& TriangleRow::at(std::int64_t k) const {
  if (!has(k)) {
    throw DomainError("column " + std::to_string(k) + " outside row [" +
                      std::to_string(first_column) + ", " +
                      std::to_string(last_column()) + "]");
  }
  return values[static_cast<std::size_t>(k - first_column)];
}

std::size_t TriangleRow::byte_size() const {
  std::size_t total = sizeof(TriangleRow);
  for (const auto& v : values) total += v.byte_size();
  return total;
}

void set_integrity_witness(bool enabled) { g_witness = enabled; }
bool integrity_witness_enabled() { return g_witness; }

std::shared_ptr<const TriangleRow> build_triangle_row(Triangle t,
                                                      std::int64_t index) {
  switch (t) {
    case Triangle::kC: return std::make_shared<const TriangleRow>(build_c(index));
    case Triangle::kB: return std::make_shared<const TriangleRow>(build_b(index));
    case Triangle::kA: return std::make_shared<const TriangleRow>(build_a(index));
  }
  throw DomainError("unknown triangle");
}

std::shared_ptr<const TriangleRow> c_row(std::int64_t m) {
  if (m < 1) throw DomainError("C row requires m >= 1, got " + std::to_string(m));
  if (m > kMaxMemoizedCRow) return build_triangle_row(Triangle::kC, m);
  return RowCache::global().get(Triangle::kC, m);
}

std::shared_ptr<const TriangleRow> b_row(std::int64_t n) {
  if (n < 1) throw DomainError("B row requires n >= 1, got " + std::to_string(n));
  if (2 * n > kMaxMemoizedCRow) return build_triangle_row(Triangle::kB, n);
  return RowCache::global().get(Triangle::kB, n);
}

std::shared_ptr<const TriangleRow> a_row(std::int64_t n) {
  if (n < 1) throw DomainError("A row requires n >= 1, got " + std::to_string(n));
  if (2 * n + 1 > kMaxMemoizedCRow) return build_triangle_row(Triangle::kA, n);
  return RowCache::global().get(Triangle::kA, n);
}

BigInt catalan(std::int64_t n) {
  if (n < 0) throw DomainError("catalan requires n >= 0, got " + std::to_string(n));
  return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

BigInt c_number(std::int64_t m, std::int64_t k) {
  require_c_index(m, k);
  if (m > kMaxMemoizedCRow) {
    BigInt value = c_from_binomial(m, k, binomial(m, k));
    if (integrity_witness_enabled()) check_witness("C", m, k, value);
    return value;
  }
  return c_row(m)->at(k);
}

BigInt b_number(std::int64_t n, std::int64_t k) {
  require_b_index(n, k);
  if (2 * n > kMaxMemoizedCRow) {
    return exact_div(BigInt(k) * binomial(2 * n, n - k), BigInt(n));
  }
  return b_row(n)->at(k);
}

BigInt a_number(std::int64_t n, std::int64_t k) {
  require_a_index(n, k);
  if (2 * n + 1 > kMaxMemoizedCRow) {
    return exact_div(BigInt(2 * k - 1) * binomial(2 * n + 1, n + 1 - k),
                     BigInt(2 * n + 1));
  }
  return a_row(n)->at(k);
}

BigInt gen_catalan(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) {
    throw DomainError("gen_catalan requires k >= 1 and n >= 1, got k=" +
                      std::to_string(k) + ", n=" + std::to_string(n));
  }
  return exact_div(binomial(n * k, n - 1), BigInt(n));
}

BigInt seq_a(std::int64_t n) {
  if (n < 0) throw DomainError("a(n) requires n >= 0, got " + std::to_string(n));
  BigInt sum(0);
  for (std::int64_t k = 0; k <= n; ++k) sum += pow(binomial(n + k, n), 2);
  return sum;
}

BigInt seq_b(std::int64_t n) {
  if (n < 1) throw DomainError("b(n) requires n >= 1, got " + std::to_string(n));
  BigInt weighted(0);
  for (std::int64_t k = 1; k <= n; ++k) {
    weighted += BigInt(k) * pow(binomial(2 * n - k - 1, n - 1), 2);
  }
  return exact_div(weighted, BigInt(n));
}

BigInt seq_b_reflected(std::int64_t n) {
  if (n < 1) throw DomainError("b(n) requires n >= 1, got " + std::to_string(n));
  BigInt weighted(0);
  for (std::int64_t k = 0; k < n; ++k) {
    weighted += BigInt(n - k) * pow(binomial(n - 1 + k, n - 1), 2);
  }
  return exact_div(weighted, BigInt(n));
}

SequenceName parse_sequence_name(std::string_view text) {
  if (text == "catalan") return SequenceName::kCatalan;
  if (text == "gen-catalan" || text == "gen_catalan") return SequenceName::kGenCatalan;
  if (text == "a" || text == "seq-a" || text == "seq_a") return SequenceName::kSeqA;
  if (text == "b" || text == "seq-b" || text == "seq_b") return SequenceName::kSeqB;
  if (text == "c-row" || text == "c_row") return SequenceName::kCRow;
  if (text == "b-row" || text == "b_row") return SequenceName::kBRow;
  if (text == "a-row" || text == "a_row") return SequenceName::kARow;
  throw DomainError("unknown sequence '" + std::string(text) +
                    "' (expected catalan, gen-catalan, a, b, c-row, b-row, a-row)");
}

std::vector<BigInt> generate(const SequenceSpec& spec) {
  if (spec.count < 1) throw DomainError("sequence count must be >= 1");
  const std::int64_t first = spec.start;
  const std::int64_t last = spec.start + spec.count - 1;

  auto require = [&](bool ok, std::string_view what) {
    if (!ok) {
      throw DomainError("slice [" + std::to_string(first) + ", " +
                        std::to_string(last) + "] outside " + std::string(what));
    }
  };

  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  switch (spec.name) {
    case SequenceName::kCatalan:
      require(first >= 0, "catalan domain n >= 0");
      for (auto n = first; n <= last; ++n) out.push_back(catalan(n));
      break;
    case SequenceName::kGenCatalan:
      if (spec.parameter < 1) throw DomainError("gen-catalan requires k >= 1");
      require(first >= 1, "gen-catalan domain n >= 1");
      for (auto n = first; n <= last; ++n) out.push_back(gen_catalan(spec.parameter, n));
      break;
    case SequenceName::kSeqA:
      require(first >= 0, "a(n) domain n >= 0");
      for (auto n = first; n <= last; ++n) out.push_back(seq_a(n));
      break;
    case SequenceName::kSeqB:
      require(first >= 1, "b(n) domain n >= 1");
      for (auto n = first; n <= last; ++n) out.push_back(seq_b(n));
      break;
    case SequenceName::kCRow:
    case SequenceName::kBRow:
    case SequenceName::kARow: {
      std::shared_ptr<const TriangleRow> row;
      if (spec.name == SequenceName::kCRow) row = c_row(spec.parameter);
      if (spec.name == SequenceName::kBRow) row = b_row(spec.parameter);
      if (spec.name == SequenceName::kARow) row = a_row(spec.parameter);
      require(row->has(first) && row->has(last),
              "row columns [" + std::to_string(row->first_column) + ", " +
                  std::to_string(row->last_column()) + "]");
      for (auto k = first; k <= last; ++k) out.push_back(row->at(k));
      break;
    }
  }
  return out;
}

}  // namespace catri
