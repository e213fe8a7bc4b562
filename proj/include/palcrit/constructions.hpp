#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "exponent.hpp"
#include "morphism.hpp"
#include "repetitions.hpp"
#include "search.hpp"
#include "word.hpp"

namespace palcrit {

struct Provenance {
  enum class Kind { trimmed_morphic, exhaustive_search };

  Kind kind = Kind::trimmed_morphic;
  std::string morphism;      // trimmed_morphic only
  std::size_t depth = 0;     // iterate depth
  std::size_t trimmed = 0;   // letters removed from each end

  std::string to_string() const {
    if (kind == Kind::exhaustive_search) return "exhaustive-search";
    return "trimmed-morphic(" + morphism + "^" + std::to_string(depth) + "(0), trim " + std::to_string(trimmed) +
           ")";
  }
};

struct MinimalPalindromeResult {
  Word word;
  Exponent critical_exponent;
  Provenance provenance;
  bool verified = false;
  // Every minimizer, for exhaustive-search results.
  std::vector<Word> witnesses;
};

struct ConstructOptions {
  bool verify = true;
  std::uint64_t search_budget = kDefaultSearchBudget;
};

/// Removes t letters from both ends of a palindrome, leaving a nonempty word.
inline Word trim(const Word& w, std::size_t t) {
  if (2 * t >= w.size()) {
    throw UsageError("cannot trim " + std::to_string(t) + " letters from each end of a word of length " +
                     std::to_string(w.size()));
  }
  if (!is_palindrome(w)) throw UsageError("trim expects a palindrome");
  return factor(w, t, w.size() - 2 * t);
}

namespace detail {

// Smallest n >= 1 with base^n >= length, and base^n.
inline std::pair<std::size_t, std::size_t> depth_for(std::size_t base, std::size_t length) {
  std::size_t n = 1, size = base;
  while (size < length) {
    if (size > kDefaultIterateCap / base) throw ResourceError("requested length exceeds the iterate cap");
    size *= base;
    ++n;
  }
  return {n, size};
}

// cexp(w) == value, via the two freeness sweeps: nothing above value, something at it.
inline bool has_critical_exponent(const Word& w, const Exponent& value) {
  return !find_violation(w, {value, true}) && find_violation(w, {value, false}).has_value();
}

inline MinimalPalindromeResult trimmed_morphic(const std::string& name, const Morphism& h, std::size_t length,
                                               unsigned alphabet, const Exponent& claimed, bool verify) {
  const auto uniform = is_uniform(h);
  const auto [depth, size] = depth_for(*uniform, length);
  const Word full = iterate(h, Word({0}, h.source_alphabet()), depth);
  MinimalPalindromeResult out{widen(trim(full, (size - length) / 2), alphabet), claimed,
                              {Provenance::Kind::trimmed_morphic, name, depth, (size - length) / 2}, false, {}};
  if (verify) {
    if (!is_palindrome(out.word) || out.word.size() != length || !has_critical_exponent(out.word, claimed)) {
      throw VerificationFailure("constructed word from " + name + " does not have critical exponent " +
                                claimed.to_string());
    }
    out.verified = true;
  }
  return out;
}

}  // namespace detail

/// Odd-length palindrome of least possible critical exponent.
///
/// Above the alphabet's threshold length (7 for binary, 17 for ternary, 3 for
/// four or more letters) the word is the middle of an iterate of a
/// palindromic morphism; shorter lengths fall back to exhaustive search.
inline MinimalPalindromeResult minimal_palindrome(unsigned alphabet, std::size_t length,
                                                  const ConstructOptions& opts = {}) {
  if (alphabet < 2 || alphabet > kMaxAlphabet) throw UsageError("alphabet size must be in [2, 36]");
  if (length % 2 == 0) throw UsageError("minimal_palindrome needs an odd length; use even_palindrome");
  if (alphabet == 2 && length >= 7) {
    return detail::trimmed_morphic("f", catalog::f(), length, alphabet, Exponent(7, 3), opts.verify);
  }
  if (alphabet == 3 && length >= 17) {
    return detail::trimmed_morphic("g", catalog::g(), length, alphabet, Exponent(7, 4), opts.verify);
  }
  if (alphabet >= 4 && length >= 3) {
    return detail::trimmed_morphic("h", catalog::h(), length, alphabet, Exponent(3, 2), opts.verify);
  }
  auto cert = min_cexp_over_palindromes(alphabet, length, opts.search_budget);
  MinimalPalindromeResult out{cert.witnesses.front(), *cert.exponent, {Provenance::Kind::exhaustive_search, "", 0, 0},
                              true, std::move(cert.witnesses)};
  return out;
}

/// Even-length palindrome with critical exponent 2: the middle of mu^{2n}(0).
inline MinimalPalindromeResult even_palindrome(unsigned alphabet, std::size_t length, const ConstructOptions& opts = {}) {
  if (alphabet < 2 || alphabet > kMaxAlphabet) throw UsageError("alphabet size must be in [2, 36]");
  if (length == 0 || length % 2 != 0) throw UsageError("even_palindrome needs an even length >= 2");
  const auto [n, size] = detail::depth_for(4, length);
  const Word full = iterate(catalog::mu(), Word({0}, 2), 2 * n);
  MinimalPalindromeResult out{widen(trim(full, (size - length) / 2), alphabet), Exponent(2, 1),
                              {Provenance::Kind::trimmed_morphic, "mu", 2 * n, (size - length) / 2}, false, {}};
  if (opts.verify) {
    if (!is_palindrome(out.word) || !detail::has_critical_exponent(out.word, Exponent(2, 1))) {
      throw VerificationFailure("Thue-Morse middle does not have critical exponent 2");
    }
    out.verified = true;
  }
  return out;
}

/// mu^{2n}(0) 010 mu^{2n}(0).
inline Word thue_morse_sandwich(std::size_t n) {
  if (n == 0) throw UsageError("sandwich index must be >= 1");
  if (n > 13) throw ResourceError("sandwich of index " + std::to_string(n) + " exceeds the iterate cap");
  const Word half = iterate(catalog::mu(), Word({0}, 2), 2 * n);
  return concat({half, Word({0, 1, 0}, 2), half});
}

/// The 2r+1 letters around the fixed center of h^m(a) for large m.
///
/// For uniform h the letter at offset d from the center is found by walking
/// the base-|h(a)| digits of its position, so only the window is built.
inline Word central_window(const Morphism& h, Letter a, std::size_t radius,
                           std::size_t cap = kDefaultIterateCap) {
  if (!h.is_endomorphism() || !is_palindromic(h) || !center_decomposition(h, a)) {
    throw UsageError("morphism is not center-preserving on letter " + std::string(1, render_letter(a)));
  }
  const std::size_t width = 2 * radius + 1;
  if (radius > cap / 2) throw ResourceError("window wider than the iterate cap");
  const auto uniform = is_uniform(h);
  if (!uniform) {
    Word cur({a}, h.source_alphabet());
    while (cur.size() < width) {
      Word next = iterate(h, cur, 1, cap);
      if (next.size() == cur.size()) throw UsageError("iterates around the center never grow");
      cur = std::move(next);
    }
    return factor(cur, (cur.size() - width) / 2, width);
  }
  const std::uint64_t base = *uniform;
  if (base == 1 && width > 1) throw UsageError("iterates around the center never grow");
  std::size_t depth = 0;
  std::uint64_t size = 1;
  while (size < width) {
    size *= base;
    ++depth;
  }
  const std::uint64_t center = (size - 1) / 2;
  std::vector<std::uint64_t> digits(depth);
  std::vector<Letter> out;
  out.reserve(width);
  for (std::uint64_t pos = center - radius; pos <= center + radius; ++pos) {
    std::uint64_t p = pos;
    for (std::size_t i = depth; i-- > 0;) {
      digits[i] = p % base;
      p /= base;
    }
    Letter c = a;
    for (std::size_t i = 0; i < depth; ++i) c = h.image(c)[digits[i]];
    out.push_back(c);
  }
  return Word(std::move(out), h.source_alphabet());
}

}  // namespace palcrit
