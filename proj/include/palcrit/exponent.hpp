#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <charconv>

#include "errors.hpp"

namespace palcrit {

namespace detail {
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

/// Exact positive rational p/q, always stored reduced.
///
/// Comparison cross-multiplies in 128-bit arithmetic, so any pair of
/// 64-bit numerators/denominators orders exactly.
class Exponent {
 public:
  constexpr Exponent() = default;

  constexpr Exponent(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (num == 0 || den == 0) {
      throw UsageError("exponent requires positive numerator and denominator");
    }
    const auto g = std::gcd(num, den);
    num_ /= g;
    den_ /= g;
  }

  constexpr std::uint64_t num() const { return num_; }
  constexpr std::uint64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend constexpr bool operator==(const Exponent&, const Exponent&) = default;

  friend constexpr std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
    using wide = detail::uint128;
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.to_string(); }

 private:
  std::uint64_t num_ = 1;
  std::uint64_t den_ = 1;
};

/// Threshold for power-freeness tests: `value` alone means "avoid value-powers",
/// with `plus` set it means "avoid powers strictly above value".
struct ExponentBound {
  Exponent value;
  bool plus = false;

  std::string to_string() const { return value.to_string() + (plus ? "+" : ""); }
  friend bool operator==(const ExponentBound&, const ExponentBound&) = default;
};

namespace detail {

inline std::uint64_t parse_positive(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
    throw UsageError("malformed exponent '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace detail

/// Parses "p/q", "p" or either with a trailing '+'.
inline ExponentBound parse_exponent_bound(std::string_view text) {
  ExponentBound out;
  std::string_view body = text;
  if (!body.empty() && body.back() == '+') {
    out.plus = true;
    body.remove_suffix(1);
  }
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    out.value = Exponent(detail::parse_positive(body, text), 1);
  } else {
    out.value = Exponent(detail::parse_positive(body.substr(0, slash), text),
                         detail::parse_positive(body.substr(slash + 1), text));
  }
  return out;
}

inline Exponent parse_exponent(std::string_view text) {
  auto b = parse_exponent_bound(text);
  if (b.plus) throw UsageError("unexpected '+' in exponent '" + std::string(text) + "'");
  return b.value;
}

}  // namespace palcrit
