#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "palcrit/word.hpp"

namespace palcrit::testing {

inline Word random_word(std::mt19937_64& rng, unsigned k, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, static_cast<int>(k) - 1);
  std::vector<Letter> out(len);
  for (auto& c : out) c = static_cast<Letter>(letter(rng));
  return Word(std::move(out), k);
}

inline Word random_palindrome(std::mt19937_64& rng, unsigned k, std::size_t len) {
  Word half = random_word(rng, k, (len + 1) / 2);
  std::vector<Letter> out(len);
  for (std::size_t i = 0; i < half.size(); ++i) out[i] = out[len - 1 - i] = half[i];
  return Word(std::move(out), k);
}

inline Word w(const char* text, unsigned k = 0) {
  std::string_view s(text);
  return parse(s, k ? k : infer_alphabet(s));
}

}  // namespace palcrit::testing
