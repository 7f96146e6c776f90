#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace catri {

// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  std::uint64_t size() const {
    return empty() ? 0 : static_cast<std::uint64_t>(hi - lo) + 1;
  }

  // Parses "a..b" (inclusive on both ends) or a single integer "a".
  // Throws UsageError on malformed text.
  static IntRange parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// Parameter name -> swept interval.
using RangeMap = std::map<std::string, IntRange, std::less<>>;

}  // namespace catri
