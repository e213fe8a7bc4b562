#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "word.hpp"

namespace palcrit {

/// A factor w[start, start+length) with period `period`.
struct PowerOccurrence {
  std::size_t start = 0;
  std::size_t length = 1;
  std::size_t period = 1;

  Exponent exponent() const { return Exponent(length, period); }

  friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

struct CexpReport {
  Exponent value;
  PowerOccurrence witness;
};

enum class ScanMode { at_least, exactly };

namespace detail {

inline void require_nonempty(std::span<const Letter> w, const char* op) {
  if (w.empty()) throw UsageError(std::string(op) + " of the empty word is undefined");
}

/// border[L] = length of the longest proper border of w[0, L), for L in [0, |w|].
inline void border_array(std::span<const Letter> w, std::vector<std::uint32_t>& border) {
  border.assign(w.size() + 1, 0);
  std::uint32_t b = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (b > 0 && w[i] != w[b]) b = border[b];
    if (w[i] == w[b]) ++b;
    border[i + 1] = b;
  }
}

// Strict rational comparison length/period > num/den without building Exponents.
inline bool ratio_greater(std::uint64_t length, std::uint64_t period, std::uint64_t num, std::uint64_t den) {
  using wide = uint128;
  return static_cast<wide>(length) * den > static_cast<wide>(num) * period;
}

}  // namespace detail

inline std::size_t smallest_period(std::span<const Letter> w) {
  detail::require_nonempty(w, "smallest period");
  std::vector<std::uint32_t> border;
  detail::border_array(w, border);
  return w.size() - border[w.size()];
}

inline std::size_t smallest_period(const Word& w) { return smallest_period(w.letters()); }

inline Exponent exponent(std::span<const Letter> w) { return Exponent(w.size(), smallest_period(w)); }

inline Exponent exponent(const Word& w) { return exponent(w.letters()); }

/// Maximum exponent over all nonempty factors, with a witness.
///
/// For each suffix the border array gives the smallest period of every
/// prefix of that suffix, so the whole scan is O(n^2). Ties resolve to the
/// smallest start, then the smallest period.
inline CexpReport critical_exponent(std::span<const Letter> w) {
  detail::require_nonempty(w, "critical exponent");
  const std::size_t n = w.size();
  PowerOccurrence best{0, 1, 1};
  std::vector<std::uint32_t> border;
  border.reserve(n + 1);
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t remaining = n - start;
    // No factor starting here can exceed remaining/1.
    if (!detail::ratio_greater(remaining, 1, best.length, best.period)) break;
    const auto suffix = w.subspan(start);
    border.assign(remaining + 1, 0);
    std::uint32_t b = 0;
    for (std::size_t i = 1; i < remaining; ++i) {
      while (b > 0 && suffix[i] != suffix[b]) b = border[b];
      if (suffix[i] == suffix[b]) ++b;
      border[i + 1] = b;
      const std::size_t len = i + 1;
      const std::size_t period = len - b;
      if (detail::ratio_greater(len, period, best.length, best.period)) best = {start, len, period};
    }
  }
  return {best.exponent(), best};
}

inline CexpReport critical_exponent(const Word& w) { return critical_exponent(w.letters()); }

namespace detail {

/// Minimum number of consecutive period-q matches (w[j] == w[j+q]) that makes
/// a factor violate the bound; 0 means every single letter already violates.
inline std::uint64_t violation_run(const ExponentBound& bound, std::uint64_t q) {
  const std::uint64_t a = bound.value.num();
  const std::uint64_t b = bound.value.den();
  if (a < b) return 0;
  using wide = uint128;
  const wide excess = static_cast<wide>(a - b) * q;
  // factor length q+R violates iff b(q+R) > aq (plus) or >= aq (plain)
  const wide r = bound.plus ? excess / b + 1 : (excess + b - 1) / b;
  return static_cast<std::uint64_t>(r);
}

/// Visits every maximal run of period-q matches with at least `min_run`
/// matches. Samples every min_run-th position, so a period costs
/// O(n / min_run) plus the length of the runs it touches. `visit(start, run)`
/// returns false to stop; the function then returns false.
template <class Visit>
bool for_each_long_run(std::span<const Letter> w, std::size_t q, std::size_t min_run, Visit&& visit) {
  const std::size_t n = w.size();
  if (q >= n || min_run == 0 || n - q < min_run) return true;
  const std::size_t limit = n - q;  // match positions are [0, limit)
  std::size_t scanned_to = 0;       // matches in [.., scanned_to) already attributed
  for (std::size_t j = min_run - 1; j < limit; j += min_run) {
    if (j < scanned_to || w[j] != w[j + q]) continue;
    std::size_t lo = j;
    while (lo > scanned_to && w[lo - 1] == w[lo - 1 + q]) --lo;
    std::size_t hi = j + 1;
    while (hi < limit && w[hi] == w[hi + q]) ++hi;
    scanned_to = hi;
    if (hi - lo >= min_run && !visit(lo, hi - lo)) return false;
  }
  return true;
}

}  // namespace detail

/// First factor violating the bound, found by sweeping periods in increasing
/// order; the reported period is the factor's smallest period.
inline std::optional<PowerOccurrence> find_violation(std::span<const Letter> w, const ExponentBound& bound) {
  detail::require_nonempty(w, "power-freeness test");
  const std::size_t n = w.size();
  if (detail::violation_run(bound, 1) == 0) return PowerOccurrence{0, 1, 1};
  std::optional<PowerOccurrence> hit;
  for (std::size_t q = 1; q < n && !hit; ++q) {
    const auto need = detail::violation_run(bound, q);
    if (need > n - q) {
      // need grows with q whenever the bound exceeds 1, and n - q shrinks.
      if (bound.value.num() > bound.value.den()) break;
      continue;
    }
    detail::for_each_long_run(w, q, need, [&](std::size_t lo, std::size_t run) {
      const std::size_t len = run + q;
      hit = PowerOccurrence{lo, len, smallest_period(w.subspan(lo, len))};
      return false;
    });
  }
  return hit;
}

inline std::optional<PowerOccurrence> find_violation(const Word& w, const ExponentBound& bound) {
  return find_violation(w.letters(), bound);
}

/// True iff w has no factor of exponent >= alpha, i.e. cexp(w) < alpha.
inline bool is_alpha_free(std::span<const Letter> w, const Exponent& alpha) {
  return !find_violation(w, {alpha, false});
}

/// True iff w has no factor of exponent > alpha, i.e. cexp(w) <= alpha.
inline bool is_alpha_plus_free(std::span<const Letter> w, const Exponent& alpha) {
  return !find_violation(w, {alpha, true});
}

inline bool is_alpha_free(const Word& w, const Exponent& alpha) { return is_alpha_free(w.letters(), alpha); }
inline bool is_alpha_plus_free(const Word& w, const Exponent& alpha) {
  return is_alpha_plus_free(w.letters(), alpha);
}

/// Every maximal repetition whose reduced exponent is >= alpha (at_least) or
/// == alpha (exactly).
///
/// An occurrence (start, length, period) qualifies when `period` is the
/// smallest period of the factor, length > period, and neither neighbouring
/// letter continues the period. Results are sorted by start, then length.
inline std::vector<PowerOccurrence> scan_powers(std::span<const Letter> w, const Exponent& alpha, ScanMode mode) {
  detail::require_nonempty(w, "power scan");
  const std::size_t n = w.size();
  std::vector<PowerOccurrence> out;
  for (std::size_t q = 1; q < n; ++q) {
    const auto need = std::max<std::uint64_t>(1, detail::violation_run({alpha, false}, q));
    if (need > n - q) {
      if (alpha.num() > alpha.den()) break;
      continue;
    }
    detail::for_each_long_run(w, q, need, [&](std::size_t lo, std::size_t run) {
      const std::size_t len = run + q;
      if (smallest_period(w.subspan(lo, len)) != q) return true;
      const Exponent e(len, q);
      if (mode == ScanMode::at_least || e == alpha) out.push_back({lo, len, q});
      return true;
    });
  }
  std::sort(out.begin(), out.end(), [](const PowerOccurrence& a, const PowerOccurrence& b) {
    return std::tie(a.start, a.length, a.period) < std::tie(b.start, b.length, b.period);
  });
  return out;
}

inline std::vector<PowerOccurrence> scan_powers(const Word& w, const Exponent& alpha, ScanMode mode) {
  return scan_powers(w.letters(), alpha, mode);
}

}  // namespace palcrit
