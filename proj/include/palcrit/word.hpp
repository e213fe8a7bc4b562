#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace palcrit {

using Letter = std::uint8_t;

/// Largest alphabet the digit/lowercase rendering can express.
inline constexpr unsigned kMaxAlphabet = 36;

/// Finite word over the alphabet {0, ..., alphabet()-1}.
///
/// The alphabet size is an upper bound carried along for validation; two
/// words are equal when their letter sequences are equal.
class Word {
 public:
  Word() = default;

  Word(std::vector<Letter> letters, unsigned alphabet) : letters_(std::move(letters)), alphabet_(alphabet) {
    if (alphabet_ == 0 || alphabet_ > kMaxAlphabet) {
      throw UsageError("alphabet size must be in [1, 36], got " + std::to_string(alphabet_));
    }
    for (Letter c : letters_) {
      if (c >= alphabet_) {
        throw UsageError("letter " + std::to_string(c) + " outside alphabet of size " + std::to_string(alphabet_));
      }
    }
  }

  Word(std::initializer_list<Letter> letters, unsigned alphabet)
      : Word(std::vector<Letter>(letters), alphabet) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  unsigned alphabet() const { return alphabet_; }

  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  auto begin() const { return letters_.cbegin(); }
  auto end() const { return letters_.cend(); }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  std::vector<Letter> letters_;
  unsigned alphabet_ = 2;
};

inline Word reverse(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out), w.alphabet());
}

inline bool is_palindrome(std::span<const Letter> w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

inline bool is_palindrome(const Word& w) { return is_palindrome(w.letters()); }

/// Contiguous subword [start, start+len), 0-based.
inline Word factor(const Word& w, std::size_t start, std::size_t len) {
  if (start > w.size() || len > w.size() - start) {
    throw UsageError("factor [" + std::to_string(start) + ", +" + std::to_string(len) + ") out of range for length " +
                     std::to_string(w.size()));
  }
  auto first = w.begin() + static_cast<std::ptrdiff_t>(start);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(len)), w.alphabet());
}

/// Concatenation; the result alphabet is the largest input alphabet.
inline Word concat(std::span<const Word> words) {
  std::vector<Letter> out;
  std::size_t total = 0;
  unsigned alphabet = 1;
  for (const auto& w : words) {
    total += w.size();
    alphabet = std::max(alphabet, w.alphabet());
  }
  out.reserve(total);
  for (const auto& w : words) out.insert(out.end(), w.begin(), w.end());
  return Word(std::move(out), alphabet);
}

inline Word concat(std::initializer_list<Word> words) {
  return concat(std::span<const Word>(words.begin(), words.size()));
}

/// Renames letters: letter c becomes coding[c]. Used for alphabet permutations.
inline Word recode(const Word& w, std::span<const Letter> coding, unsigned alphabet) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter c : w) {
    if (c >= coding.size()) throw UsageError("coding does not cover letter " + std::to_string(c));
    out.push_back(coding[c]);
  }
  return Word(std::move(out), alphabet);
}

/// Same letters over a (larger) alphabet.
inline Word widen(const Word& w, unsigned alphabet) {
  return Word(std::vector<Letter>(w.begin(), w.end()), alphabet);
}

inline char render_letter(Letter c) {
  if (c < 10) return static_cast<char>('0' + c);
  if (c < kMaxAlphabet) return static_cast<char>('a' + (c - 10));
  throw UsageError("letter " + std::to_string(c) + " cannot be rendered");
}

/// Digits for 0-9, lowercase a-z for 10-35. The empty word renders as "".
inline std::string render(std::span<const Letter> w) {
  std::string out;
  out.reserve(w.size());
  for (Letter c : w) out.push_back(render_letter(c));
  return out;
}

inline std::string render(const Word& w) { return render(w.letters()); }

/// Value of a rendered symbol, or -1 for characters outside the symbol set.
inline int letter_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  return -1;
}

inline Word parse(std::string_view text, unsigned alphabet) {
  if (alphabet == 0 || alphabet > kMaxAlphabet) {
    throw UsageError("alphabet size must be in [1, 36], got " + std::to_string(alphabet));
  }
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int v = letter_value(text[i]);
    if (v < 0 || static_cast<unsigned>(v) >= alphabet) {
      throw UsageError("character '" + std::string(1, text[i]) + "' at position " + std::to_string(i) +
                       " is not a letter of the size-" + std::to_string(alphabet) + " alphabet");
    }
    out.push_back(static_cast<Letter>(v));
  }
  return Word(std::move(out), alphabet);
}

/// Smallest alphabet that can hold every symbol of `text` (at least 2).
inline unsigned infer_alphabet(std::string_view text) {
  int top = 1;
  for (char ch : text) {
    const int v = letter_value(ch);
    if (v < 0) throw UsageError("character '" + std::string(1, ch) + "' is not a word symbol");
    top = std::max(top, v);
  }
  return static_cast<unsigned>(top) + 1;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << render(w) << '"'; }

}  // namespace palcrit
