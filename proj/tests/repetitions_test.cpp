#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "palcrit/catalog.hpp"
#include "palcrit/morphism.hpp"
#include "palcrit/repetitions.hpp"
#include "palcrit/search.hpp"
#include "test_support.hpp"

namespace palcrit {
namespace {

using testing::w;

// Independent oracles: definitions applied literally.

std::size_t period_by_definition(const Word& x, std::size_t start, std::size_t len) {
  for (std::size_t p = 1; p <= len; ++p) {
    bool ok = true;
    for (std::size_t i = start; i + p < start + len && ok; ++i) ok = x[i] == x[i + p];
    if (ok) return p;
  }
  return len;
}

Exponent brute_cexp(const Word& x) {
  Exponent best(1, 1);
  for (std::size_t s = 0; s < x.size(); ++s) {
    for (std::size_t len = 1; s + len <= x.size(); ++len) {
      best = std::max(best, Exponent(len, period_by_definition(x, s, len)));
    }
  }
  return best;
}

std::vector<PowerOccurrence> brute_scan(const Word& x, const Exponent& alpha, ScanMode mode) {
  std::vector<PowerOccurrence> out;
  const std::size_t n = x.size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t len = 2; s + len <= n; ++len) {
      const auto q = period_by_definition(x, s, len);
      if (q >= len) continue;
      const bool left_extends = s > 0 && x[s - 1] == x[s - 1 + q];
      const bool right_extends = s + len < n && x[s + len] == x[s + len - q];
      if (left_extends || right_extends) continue;
      const Exponent e(len, q);
      if (mode == ScanMode::exactly ? e == alpha : e >= alpha) out.push_back({s, len, q});
    }
  }
  return out;
}

Word coded(const char* text) {
  // letters numbered by first appearance
  std::vector<int> code(256, -1);
  int next = 0;
  std::vector<Letter> out;
  for (const char* p = text; *p; ++p) {
    auto& c = code[static_cast<unsigned char>(*p)];
    if (c < 0) c = next++;
    out.push_back(static_cast<Letter>(c));
  }
  return Word(std::move(out), static_cast<unsigned>(std::max(next, 1)));
}

Word thue_morse(std::size_t n) {
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Letter>(std::popcount(i) & 1);
  return Word(std::move(out), 2);
}

TEST(SmallestPeriod, Examples) {
  EXPECT_EQ(smallest_period(coded("tretretretre")), 3u);
  EXPECT_EQ(smallest_period(w("0")), 1u);
  EXPECT_EQ(smallest_period(w("0110110")), 3u);
  EXPECT_THROW(smallest_period(Word()), UsageError);
}

TEST(WordExponent, Examples) {
  EXPECT_EQ(exponent(coded("ionization")), Exponent(10, 7));
  EXPECT_EQ(exponent(coded("tretretretre")), Exponent(4, 1));
  EXPECT_EQ(exponent(w("01")), Exponent(1, 1));
  EXPECT_EQ(exponent(w("0")), Exponent(1, 1));
  EXPECT_THROW(exponent(Word()), UsageError);
}

TEST(WordExponent, MatchesAllPeriodsScan) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(trial % 4);
    // low-entropy words so long periods actually occur
    Word base = testing::random_word(rng, k, 1 + rng() % 12);
    std::vector<Letter> letters;
    const std::size_t len = 1 + rng() % 200;
    for (std::size_t i = 0; i < len; ++i) letters.push_back(base[i % base.size()]);
    if (rng() % 3 == 0) letters[rng() % len] = static_cast<Letter>(rng() % k);
    const Word x(std::move(letters), k);
    EXPECT_EQ(smallest_period(x), period_by_definition(x, 0, x.size()));
    EXPECT_EQ(exponent(x), Exponent(x.size(), period_by_definition(x, 0, x.size())));
  }
}

TEST(CriticalExponent, Examples) {
  auto r = critical_exponent(w("0110110"));
  EXPECT_EQ(r.value, Exponent(7, 3));
  EXPECT_EQ(r.witness, (PowerOccurrence{0, 7, 3}));
  EXPECT_EQ(critical_exponent(w("01210120102101210")).value, Exponent(7, 4));
  r = critical_exponent(w("01"));
  EXPECT_EQ(r.value, Exponent(1, 1));
  EXPECT_EQ(r.witness, (PowerOccurrence{0, 1, 1}));
  EXPECT_EQ(critical_exponent(w("0")).value, Exponent(1, 1));
  EXPECT_THROW(critical_exponent(Word()), UsageError);
}

TEST(CriticalExponent, WitnessTieBreak) {
  // 00 at 0 and 11 at 2 both reach 2; the earlier start wins
  auto r = critical_exponent(w("0011"));
  EXPECT_EQ(r.witness, (PowerOccurrence{0, 2, 1}));
  // the sandwich's only 7/3-power starts at 2
  r = critical_exponent(w("01100100110"));
  EXPECT_EQ(r.value, Exponent(7, 3));
  EXPECT_EQ(r.witness, (PowerOccurrence{2, 7, 3}));
}

TEST(CriticalExponent, WitnessAttainsValue) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Word x = testing::random_word(rng, 2 + trial % 3, 1 + rng() % 60);
    const auto r = critical_exponent(x);
    EXPECT_EQ(r.witness.exponent(), r.value);
    EXPECT_EQ(smallest_period(factor(x, r.witness.start, r.witness.length)), r.witness.period);
  }
}

TEST(CriticalExponent, AgreesWithBruteForce) {
  std::mt19937_64 rng(20240601);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(trial % 3);
    const Word x = testing::random_word(rng, k, 1 + rng() % 100);
    if (critical_exponent(x).value != brute_cexp(x)) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(CriticalExponent, ReverseAndPermutationInvariant) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned k = 2 + static_cast<unsigned>(trial % 3);
    const Word x = testing::random_word(rng, k, 1 + rng() % 80);
    const auto value = critical_exponent(x).value;
    EXPECT_EQ(critical_exponent(reverse(x)).value, value);
    std::vector<Letter> perm(k);
    std::iota(perm.begin(), perm.end(), Letter{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(critical_exponent(recode(x, perm, k)).value, value);
  }
}

TEST(CriticalExponent, EvenPalindromesReachTwo) {
  for (unsigned k = 1; k <= 3; ++k) {
    for (std::size_t len = 2; len <= 12; len += 2) {
      for (const auto& p : enumerate_palindromes(k, len)) {
        ASSERT_GE(critical_exponent(p).value, Exponent(2, 1)) << p;
      }
    }
  }
}

TEST(CriticalExponent, OddPalindromesReachThreeHalves) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (std::size_t len = 3; len <= (k == 4 ? 9u : 11u); len += 2) {
      for (const auto& p : enumerate_palindromes(k, len)) {
        ASSERT_GE(critical_exponent(p).value, Exponent(3, 2)) << p;
      }
    }
  }
}

TEST(Freeness, Examples) {
  EXPECT_TRUE(is_alpha_plus_free(w("0110110"), Exponent(7, 3)));
  EXPECT_FALSE(is_alpha_free(w("0110110"), Exponent(7, 3)));
  EXPECT_TRUE(is_alpha_plus_free(thue_morse(1000), Exponent(2, 1)));
  EXPECT_FALSE(is_alpha_free(thue_morse(1000), Exponent(2, 1)));
  const auto v = find_violation(w("0110110"), {Exponent(7, 3), false});
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (PowerOccurrence{0, 7, 3}));
}

TEST(Freeness, ThresholdsAtOrBelowOne) {
  EXPECT_FALSE(is_alpha_free(w("01"), Exponent(1, 1)));
  EXPECT_TRUE(is_alpha_plus_free(w("012"), Exponent(1, 1)));
  EXPECT_FALSE(is_alpha_plus_free(w("0120"), Exponent(1, 1)));
  EXPECT_FALSE(is_alpha_plus_free(w("0"), Exponent(1, 2)));
  EXPECT_THROW(is_alpha_free(Word(), Exponent(2, 1)), UsageError);
}

TEST(Freeness, AgreesWithCriticalExponent) {
  std::mt19937_64 rng(17);
  const std::vector<Exponent> bounds = {Exponent(1, 2), Exponent(1, 1), Exponent(5, 4), Exponent(4, 3),
                                        Exponent(3, 2), Exponent(5, 3), Exponent(7, 4), Exponent(2, 1),
                                        Exponent(7, 3), Exponent(5, 2), Exponent(3, 1), Exponent(4, 1)};
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(trial % 4);
    const Word x = testing::random_word(rng, k, 1 + rng() % 70);
    const auto c = critical_exponent(x).value;
    for (const auto& a : bounds) {
      ASSERT_EQ(is_alpha_free(x, a), c < a) << x << " " << a;
      ASSERT_EQ(is_alpha_plus_free(x, a), c <= a) << x << " " << a;
      if (auto v = find_violation(x, {a, false})) {
        EXPECT_GE(v->exponent(), a);
        EXPECT_EQ(smallest_period(factor(x, v->start, v->length)), v->period);
      }
    }
  }
}

TEST(ScanPowers, Examples) {
  auto hits = scan_powers(w("01100100110"), Exponent(7, 3), ScanMode::exactly);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(render(factor(w("01100100110"), hits[0].start, hits[0].length)), "1001001");
  EXPECT_EQ(hits[0].start, 2u);

  EXPECT_TRUE(scan_powers(w("01"), Exponent(3, 2), ScanMode::at_least).empty());

  // "110110" has period 3 but extends left to the maximal run "0110110".
  hits = scan_powers(w("0110110"), Exponent(2, 1), ScanMode::at_least);
  const std::vector<PowerOccurrence> expected = {{0, 7, 3}, {1, 2, 1}, {4, 2, 1}};
  EXPECT_EQ(hits, expected);
}

TEST(ScanPowers, AgreesWithBruteForce) {
  std::mt19937_64 rng(23);
  const std::vector<Exponent> bounds = {Exponent(1, 1), Exponent(4, 3), Exponent(3, 2), Exponent(7, 4),
                                        Exponent(2, 1), Exponent(7, 3), Exponent(3, 1)};
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned k = 1 + static_cast<unsigned>(trial % 4);
    const Word x = testing::random_word(rng, k, 1 + rng() % 50);
    for (const auto& a : bounds) {
      for (auto mode : {ScanMode::at_least, ScanMode::exactly}) {
        ASSERT_EQ(scan_powers(x, a, mode), brute_scan(x, a, mode)) << x << " " << a;
      }
    }
  }
}

TEST(Freeness, MorphicPrefixesAgreeWithBorderKernel) {
  for (const auto& e : catalog::entries()) {
    const Word x = fixed_point_prefix(e.morphism, e.seed, 3000);
    EXPECT_EQ(critical_exponent(x).value, e.avoids.value) << e.name;
    EXPECT_TRUE(is_alpha_plus_free(x, e.avoids.value)) << e.name;
    EXPECT_FALSE(is_alpha_free(x, e.avoids.value)) << e.name;
  }
}

TEST(Freeness, MutatedMorphicPrefixes) {
  std::mt19937_64 rng(77);
  for (const auto& e : catalog::entries()) {
    const Word base = fixed_point_prefix(e.morphism, e.seed, 2500);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Letter> letters(base.begin(), base.end());
      const auto pos = rng() % letters.size();
      letters[pos] = static_cast<Letter>((letters[pos] + 1 + rng() % (base.alphabet() - 1)) % base.alphabet());
      const Word x(std::move(letters), base.alphabet());
      const auto c = critical_exponent(x).value;
      ASSERT_EQ(is_alpha_plus_free(x, e.avoids.value), c <= e.avoids.value) << e.name << " @" << pos;
      ASSERT_EQ(is_alpha_free(x, c), false);
      ASSERT_TRUE(is_alpha_plus_free(x, c));
    }
  }
}

TEST(ScanPowers, MorphicPrefixAgreesWithBruteForce) {
  const Word x = fixed_point_prefix(catalog::h(), 0, 300);
  EXPECT_EQ(scan_powers(x, Exponent(3, 2), ScanMode::exactly), brute_scan(x, Exponent(3, 2), ScanMode::exactly));
  EXPECT_EQ(scan_powers(x, Exponent(5, 4), ScanMode::at_least), brute_scan(x, Exponent(5, 4), ScanMode::at_least));
}

}  // namespace
}  // namespace palcrit
