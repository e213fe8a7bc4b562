#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace palcrit {

inline constexpr std::size_t kDefaultIterateCap = 100'000'000;

/// Map from each letter of a source alphabet to a nonempty image word.
class Morphism {
 public:
  Morphism() = default;

  /// images[c] is the image of letter c; every image must be nonempty and
  /// over `target_alphabet`.
  Morphism(std::vector<Word> images, unsigned target_alphabet)
      : images_(std::move(images)), target_alphabet_(target_alphabet) {
    if (images_.empty() || images_.size() > kMaxAlphabet) {
      throw UsageError("morphism needs between 1 and 36 letters");
    }
    if (target_alphabet_ == 0 || target_alphabet_ > kMaxAlphabet) {
      throw UsageError("target alphabet size must be in [1, 36]");
    }
    for (std::size_t c = 0; c < images_.size(); ++c) {
      if (images_[c].empty()) throw UsageError("image of letter " + std::to_string(c) + " is empty");
      for (Letter x : images_[c]) {
        if (x >= target_alphabet_) {
          throw UsageError("image of letter " + std::to_string(c) + " leaves the target alphabet");
        }
      }
      images_[c] = widen(images_[c], target_alphabet_);
    }
  }

  /// Endomorphism built from rendered images, e.g. {"01", "10"}.
  static Morphism from_strings(const std::vector<std::string_view>& images) {
    const unsigned k = static_cast<unsigned>(images.size());
    std::vector<Word> words;
    words.reserve(images.size());
    for (auto s : images) words.push_back(parse(s, k));
    return Morphism(std::move(words), k);
  }

  static Morphism identity(unsigned k) {
    std::vector<Word> images;
    for (unsigned c = 0; c < k; ++c) images.push_back(Word({static_cast<Letter>(c)}, k));
    return Morphism(std::move(images), k);
  }

  unsigned source_alphabet() const { return static_cast<unsigned>(images_.size()); }
  unsigned target_alphabet() const { return target_alphabet_; }
  bool is_endomorphism() const { return target_alphabet_ <= images_.size(); }

  const Word& image(Letter c) const {
    if (c >= images_.size()) throw UsageError("letter " + std::to_string(c) + " outside the morphism's alphabet");
    return images_[c];
  }
  const std::vector<Word>& images() const { return images_; }

  std::size_t max_image_length() const {
    std::size_t m = 0;
    for (const auto& w : images_) m = std::max(m, w.size());
    return m;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::vector<Word> images_;
  unsigned target_alphabet_ = 1;
};

inline Word apply(const Morphism& h, const Word& w) {
  std::size_t total = 0;
  for (Letter c : w) total += h.image(c).size();
  std::vector<Letter> out;
  out.reserve(total);
  for (Letter c : w) {
    const auto& img = h.image(c);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out), h.target_alphabet());
}

/// h^n(seed). Refuses to build a word longer than `cap`.
inline Word iterate(const Morphism& h, const Word& seed, std::size_t n, std::size_t cap = kDefaultIterateCap) {
  if (!h.is_endomorphism()) throw UsageError("only endomorphisms can be iterated");
  Word cur = widen(seed, h.source_alphabet());
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t next = 0;
    for (Letter c : cur) {
      next += h.image(c).size();
      if (next > cap) {
        throw ResourceError("iterate would exceed " + std::to_string(cap) + " letters at step " +
                            std::to_string(step + 1));
      }
    }
    cur = widen(apply(h, cur), h.source_alphabet());
  }
  return cur;
}

/// Common image length, or nullopt when images differ in length.
inline std::optional<std::size_t> is_uniform(const Morphism& h) {
  const std::size_t len = h.images().front().size();
  for (const auto& img : h.images()) {
    if (img.size() != len) return std::nullopt;
  }
  return len;
}

inline bool is_palindromic(const Morphism& h) {
  for (const auto& img : h.images()) {
    if (!is_palindrome(img)) return false;
  }
  return true;
}

/// h(a) = a x with h(x) nonempty.
inline bool is_prolongable(const Morphism& h, Letter a) {
  const auto& img = h.image(a);
  if (!h.is_endomorphism() || img.size() < 2 || img[0] != a) return false;
  std::size_t tail_image = 0;
  for (std::size_t i = 1; i < img.size(); ++i) tail_image += h.image(img[i]).size();
  return tail_image > 0;
}

/// Lazily produces h^omega(a).
///
/// The generated prefix doubles as the queue of letters still to expand:
/// since the fixed point w satisfies w = h(w), letter i of the output is
/// expanded once the output is shorter than requested.
class FixedPointStream {
 public:
  FixedPointStream(const Morphism& h, Letter a) : h_(h) {
    if (!is_prolongable(h_, a)) {
      throw UsageError("morphism is not prolongable on letter " + std::string(1, render_letter(a)));
    }
    const auto& img = h_.image(a);
    out_.assign(img.begin(), img.end());
    expand_next_ = 1;
  }

  /// Grows the buffer to at least n letters.
  void ensure(std::size_t n) {
    while (out_.size() < n) {
      const auto& img = h_.image(out_[expand_next_++]);
      out_.insert(out_.end(), img.begin(), img.end());
    }
  }

  Letter at(std::size_t i) {
    ensure(i + 1);
    return out_[i];
  }

  Letter next() { return at(pos_++); }

  Word prefix(std::size_t n) {
    ensure(n);
    return Word(std::vector<Letter>(out_.begin(), out_.begin() + static_cast<std::ptrdiff_t>(n)),
                h_.source_alphabet());
  }

 private:
  Morphism h_;
  std::vector<Letter> out_;
  std::size_t expand_next_ = 1;
  std::size_t pos_ = 0;
};

inline Word fixed_point_prefix(const Morphism& h, Letter a, std::size_t n) {
  FixedPointStream stream(h, a);
  return stream.prefix(n);
}

/// x such that h(a) = reverse(x) a x, if h(a) has that shape.
inline std::optional<Word> center_decomposition(const Morphism& h, Letter a) {
  const auto& img = h.image(a);
  if (img.size() % 2 == 0) return std::nullopt;
  const std::size_t mid = img.size() / 2;
  if (img[mid] != a || !is_palindrome(img)) return std::nullopt;
  return factor(img, mid + 1, mid);
}

/// outer o inner: each letter c maps to outer(inner(c)).
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target_alphabet() > outer.source_alphabet()) {
    throw UsageError("cannot compose: inner target alphabet exceeds outer source alphabet");
  }
  std::vector<Word> images;
  images.reserve(inner.source_alphabet());
  for (const auto& img : inner.images()) images.push_back(apply(outer, img));
  return Morphism(std::move(images), outer.target_alphabet());
}

// Rule files: one "a -> image" per line, '#' starts a comment, whitespace is
// ignored. The alphabet is one more than the largest letter mentioned.

inline Morphism parse_morphism(std::string_view text) {
  std::vector<std::optional<std::string>> rules;
  std::size_t line_no = 0;
  unsigned alphabet = 1;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line;
    for (char ch : raw) {
      if (!std::isspace(static_cast<unsigned char>(ch))) line.push_back(ch);
    }
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw UsageError(where() + "expected 'letter -> image'");
    const std::string lhs = line.substr(0, arrow);
    const std::string rhs = line.substr(arrow + 2);
    if (lhs.size() != 1 || letter_value(lhs[0]) < 0) throw UsageError(where() + "left side must be one letter");
    if (rhs.empty()) throw UsageError(where() + "empty image");
    const auto c = static_cast<unsigned>(letter_value(lhs[0]));
    alphabet = std::max(alphabet, c + 1);
    for (char ch : rhs) {
      const int v = letter_value(ch);
      if (v < 0) throw UsageError(where() + "'" + std::string(1, ch) + "' is not a letter");
      alphabet = std::max(alphabet, static_cast<unsigned>(v) + 1);
    }
    if (rules.size() <= c) rules.resize(c + 1);
    if (rules[c]) throw UsageError(where() + "duplicate rule for letter " + lhs);
    rules[c] = rhs;
  }
  if (rules.empty()) throw UsageError("morphism file has no rules");
  rules.resize(alphabet);
  std::vector<Word> images;
  for (unsigned c = 0; c < alphabet; ++c) {
    if (!rules[c]) {
      throw UsageError("letter " + std::string(1, render_letter(static_cast<Letter>(c))) +
                       " is used but has no rule");
    }
    images.push_back(parse(*rules[c], alphabet));
  }
  return Morphism(std::move(images), alphabet);
}

inline std::string render_morphism(const Morphism& h) {
  std::string out;
  for (unsigned c = 0; c < h.source_alphabet(); ++c) {
    out += render_letter(static_cast<Letter>(c));
    out += " -> ";
    out += render(h.image(static_cast<Letter>(c)));
    out += '\n';
  }
  return out;
}

}  // namespace palcrit
