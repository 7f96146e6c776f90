#pragma once

// Counterexample searches for two open conjectures on Catalan triangles:
//
//  * divisibility: for m > n >= 1 and odd p, binom(m-1,n) divides
//    sum_{k=0}^{n} C(m,k)^p, with the B and A specialisations
//    ((n+1)/2 C_n | sum B(n,k)^p and (n+1) C_n | sum A(n,k)^p);
//  * mixed cube: a closed form for sum_{k=1}^{min(n,m)} B(n,k)^2 B(m,k).
//
// A scan walks its cells in a fixed total order (lexicographic in the
// parameter names listed by ScanState::parameter_names, exponent fixed per
// scan) and can be stopped, checkpointed and resumed. Results are evidence
// over a finite domain, never a proof.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catri/exact.hpp"
#include "catri/range.hpp"

namespace catri {

enum class Conjecture { kDivisibilityC, kDivisibilityB, kDivisibilityA, kMixedCube };

std::string_view conjecture_id(Conjecture c);
// Throws IntegrityError on an unknown id (ids come from checkpoints).
Conjecture parse_conjecture_id(std::string_view id);
bool is_divisibility(Conjecture c);

using ScanCell = std::vector<std::int64_t>;

struct DivisibilityClaim {
  BigInt dividend;
  BigInt divisor;
  // Zero divisors are never claims; callers count them separately.
  bool holds() const { return !divisor.is_zero() && remainder(dividend, divisor).is_zero(); }
};

// The power sum and claimed factor at one cell ((m, n) for C, (n) for B
// and A). `divisor_offset` is added to the factor; non-zero offsets exist
// only to demonstrate that a scan can fail.
DivisibilityClaim divisibility_claim(Conjecture variant, std::int64_t p,
                                     const ScanCell& cell,
                                     const BigInt& divisor_offset = BigInt(0));

struct MixedCubeResult {
  Rational lhs;
  Rational rhs;
  bool equal = false;
};

// Both sides of the mixed-cube conjecture at (n, m), n, m >= 1.
MixedCubeResult check_mixed_cube(std::int64_t n, std::int64_t m);

struct Counterexample {
  ScanCell cell;
  // Divisibility scans.
  BigInt dividend;
  BigInt divisor;
  BigInt remainder;
  // Mixed-cube scans.
  Rational lhs;
  Rational rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ScanState {
  Conjecture conjecture = Conjecture::kDivisibilityC;
  std::optional<std::int64_t> p;
  RangeMap domain;
  BigInt divisor_offset;
  // Next unprocessed cell; empty once the scan is complete.
  std::optional<ScanCell> frontier;
  std::uint64_t processed = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<ScanCell> zero_divisor_cells;
  double elapsed_ms = 0.0;

  bool complete() const { return !frontier.has_value(); }
  std::vector<std::string> parameter_names() const;
};

// Equality of everything except elapsed time.
bool same_outcome(const ScanState& a, const ScanState& b);

struct ScanOptions {
  unsigned jobs = 1;
  // Stop (leaving a frontier) after this many cells in this run.
  std::optional<std::uint64_t> stop_after;
  std::optional<std::filesystem::path> checkpoint_path;
  // Save every this many processed cells; 0 saves only when the run ends.
  std::uint64_t checkpoint_every = 0;
  BigInt divisor_offset;
};

// Throws UsageError for an even or non-positive p, a non-divisibility
// variant, or an empty domain.
ScanState scan_divisibility(Conjecture variant, std::int64_t p,
                            const RangeMap& domain, const ScanOptions& options = {});
ScanState scan_mixed_cube(const RangeMap& domain, const ScanOptions& options = {});

// Continues a saved scan. Throws IntegrityError when the frontier is not a
// cell of the state's own domain.
ScanState resume_scan(const ScanState& state, const ScanOptions& options = {});

// Recomputes a recorded counterexample; true when it is still one.
bool reverify(const ScanState& state, const Counterexample& counterexample);

inline constexpr int kCheckpointVersion = 1;

std::string scan_state_to_json(const ScanState& state, bool include_timing = true);
// Throws IntegrityError on malformed JSON, missing fields or a version tag
// other than kCheckpointVersion.
ScanState scan_state_from_json(std::string_view text);

// Atomic: writes `<path>.tmp` then renames over `path`. Throws IoError.
void save_checkpoint(const ScanState& state, const std::filesystem::path& path);
// Throws IoError when unreadable, IntegrityError when corrupt.
ScanState load_checkpoint(const std::filesystem::path& path);

}  // namespace catri
