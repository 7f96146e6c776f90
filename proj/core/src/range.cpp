#include "catri/range.hpp"

#include <charconv>

#include "catri/errors.hpp"

namespace catri {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw UsageError("malformed range '" + std::string(whole) +
                     "' (expected a..b)");
  }
  return value;
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    std::int64_t v = parse_int(text, text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots), text),
          parse_int(text.substr(dots + 2), text)};
}

std::string IntRange::to_string() const {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

}  // namespace catri
