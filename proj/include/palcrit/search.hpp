#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "repetitions.hpp"
#include "word.hpp"

namespace palcrit {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Outcome of a finite check.
///
/// `exponent` is the minimum critical exponent over the search space for
/// enumerations and the observed critical exponent for single-word checks.
struct Certificate {
  std::string name;
  bool passed = false;
  std::uint64_t space_size = 0;
  std::optional<Exponent> exponent;
  std::vector<Word> witnesses;
  double elapsed_ms = 0.0;
  std::vector<std::string> notes;
};

/// Palindromes of a fixed length in lexicographic order, generated by
/// counting through the left half and mirroring it.
class PalindromeEnumerator {
 public:
  PalindromeEnumerator(unsigned alphabet, std::size_t length)
      : alphabet_(alphabet), length_(length), half_((length + 1) / 2, 0) {
    if (alphabet == 0 || alphabet > kMaxAlphabet) throw UsageError("alphabet size must be in [1, 36]");
  }

  std::optional<Word> next() {
    if (done_) return std::nullopt;
    std::vector<Letter> w(length_);
    for (std::size_t i = 0; i < half_.size(); ++i) w[i] = w[length_ - 1 - i] = half_[i];
    advance();
    return Word(std::move(w), alphabet_);
  }

 private:
  void advance() {
    for (std::size_t i = half_.size(); i-- > 0;) {
      if (++half_[i] < alphabet_) return;
      half_[i] = 0;
    }
    done_ = true;
  }

  unsigned alphabet_;
  std::size_t length_;
  std::vector<Letter> half_;
  bool done_ = false;
};

/// k^ceil(len/2), saturating at uint64 max.
inline std::uint64_t palindrome_count(unsigned alphabet, std::size_t length) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < (length + 1) / 2; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / alphabet) return std::numeric_limits<std::uint64_t>::max();
    n *= alphabet;
  }
  return n;
}

inline std::vector<Word> enumerate_palindromes(unsigned alphabet, std::size_t length) {
  std::vector<Word> out;
  PalindromeEnumerator gen(alphabet, length);
  while (auto w = gen.next()) out.push_back(std::move(*w));
  return out;
}

/// Critical exponent by definition: every factor, every candidate period,
/// letter by letter. Shares no code with the border-array kernel.
inline Exponent naive_cexp(const Word& w) {
  if (w.empty()) throw UsageError("critical exponent of the empty word is undefined");
  if (w.size() > 2000) throw UsageError("naive_cexp is limited to words of length <= 2000");
  std::uint64_t best_len = 1, best_per = 1;
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; start + len <= n; ++len) {
      std::size_t per = 1;
      for (; per < len; ++per) {
        bool ok = true;
        for (std::size_t i = start; i + per < start + len; ++i) {
          if (w[i] != w[i + per]) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
      if (len * best_per > best_len * per) {
        best_len = len;
        best_per = per;
      }
    }
  }
  return Exponent(best_len, best_per);
}

/// Minimum critical exponent over all palindromes of the given length, with
/// every palindrome attaining it (sorted).
inline Certificate min_cexp_over_palindromes(unsigned alphabet, std::size_t length,
                                             std::uint64_t budget = kDefaultSearchBudget) {
  if (length == 0) throw UsageError("palindrome length must be positive");
  const auto space = palindrome_count(alphabet, length);
  if (space > budget) {
    throw ResourceError("search space of " + std::to_string(space) + " palindromes exceeds the budget of " +
                        std::to_string(budget) + " (no palindromes examined)");
  }
  Certificate cert;
  cert.name = "min-cexp(k=" + std::to_string(alphabet) + ",len=" + std::to_string(length) + ")";
  cert.space_size = space;
  PalindromeEnumerator gen(alphabet, length);
  while (auto w = gen.next()) {
    const auto value = critical_exponent(*w).value;
    if (!cert.exponent || value < *cert.exponent) {
      cert.exponent = value;
      cert.witnesses.clear();
    }
    if (value == *cert.exponent) cert.witnesses.push_back(std::move(*w));
  }
  std::sort(cert.witnesses.begin(), cert.witnesses.end());
  cert.passed = true;
  return cert;
}

}  // namespace palcrit
