#pragma once

// Registry of exact identities over the Catalan triangles and the sweep
// engine that checks them cell by cell.
//
// Every identity is a pair of evaluators (LHS, RHS) returning Rationals,
// a parameter list and the hypotheses under which it is claimed. A sweep
// enumerates the cartesian product of the requested ranges in row-major
// order (first parameter outermost), keeps the admissible cells and
// compares both sides by canonical Rational equality.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catri/exact.hpp"
#include "catri/range.hpp"

namespace catri {

struct Parameter {
  std::string name;
  // Below this the evaluators are not defined (division by m, row 0...).
  std::int64_t hard_min = 0;
  // Lower bound stated by the identity's hypotheses (>= hard_min).
  std::int64_t hypothesis_min = 0;
  // Default upper bound used by `verify all`.
  std::int64_t default_cap = 100;
};

// Parameter values in declaration order.
using Cell = std::span<const std::int64_t>;
using Evaluator = std::function<Rational(Cell)>;

struct IdentityDescriptor {
  std::string id;
  std::string statement;
  std::vector<Parameter> parameters;
  // Relational part of the hypotheses (e.g. i <= n); empty means none.
  std::function<bool(Cell)> relation;
  std::string hypothesis_text;
  Evaluator lhs;
  Evaluator rhs;
  std::string anchor;

  std::size_t parameter_index(std::string_view name) const;  // npos if absent
  bool evaluable(Cell cell) const;
  bool satisfies_hypotheses(Cell cell) const;
  bool admissible(Cell cell, bool allow_outside_domain) const {
    return allow_outside_domain ? evaluable(cell) : satisfies_hypotheses(cell);
  }
};

const std::vector<IdentityDescriptor>& list_identities();

// Throws UnknownIdentityError.
const IdentityDescriptor& find_identity(std::string_view id);

using Assignment = std::map<std::string, std::int64_t, std::less<>>;

// Both sides at one assignment. Throws UnknownIdentityError for an unknown
// id and ConstraintViolation when the assignment misses a parameter, names
// an unknown one, or violates the hypotheses.
std::pair<Rational, Rational> evaluate_sides(std::string_view id,
                                             const Assignment& assignment,
                                             bool allow_outside_domain = false);

struct Mismatch {
  std::vector<std::int64_t> cell;
  Rational lhs;
  Rational rhs;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::string> parameter_names;
  RangeMap ranges;
  std::string constraint;
  bool outside_hypotheses = false;
  std::uint64_t cells = 0;
  // Sorted lexicographically by cell.
  std::vector<Mismatch> mismatches;
  double elapsed_ms = 0.0;

  bool passed() const { return mismatches.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 1;
  bool fail_fast = false;
  bool allow_outside_domain = false;
};

// Sweeps every admissible cell in `ranges` (one range per parameter).
// Throws UsageError when a range is missing or the admissible domain is
// empty.
VerificationReport verify_identity(const IdentityDescriptor& identity,
                                   const RangeMap& ranges,
                                   const VerifyOptions& options = {});
VerificationReport verify_identity(std::string_view id, const RangeMap& ranges,
                                   const VerifyOptions& options = {});

// Ranges [hypothesis_min, cap] for every parameter; cap <= 0 uses each
// parameter's default_cap (40 for the cubic-cost sweeps, else 100).
RangeMap default_ranges(const IdentityDescriptor& identity, std::int64_t cap = 0);

// A copy whose RHS is shifted by `offset`; used to prove a sweep can fail.
IdentityDescriptor with_rhs_offset(IdentityDescriptor identity, Rational offset);

// {identity, domain, cells, status, mismatches[], elapsed_ms}; big values
// are decimal strings. elapsed_ms is null when include_timing is false.
std::string report_to_json(const VerificationReport& report, bool include_timing);

}  // namespace catri
