#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "morphism.hpp"
#include "repetitions.hpp"
#include "search.hpp"
#include "word.hpp"

namespace palcrit {

struct VerifyOptions {
  /// Letters of each fixed point examined by the *-prefix-free checks.
  std::size_t prefix = 100'000;
  /// Letters of h^omega(0) scanned by h-power-lengths (11^4).
  std::size_t power_length_prefix = 14'641;
  std::uint64_t search_budget = kDefaultSearchBudget;
};

inline const std::vector<std::string_view>& proposition_names() {
  static const std::vector<std::string_view> names = {
      "binary-7",      "ternary-17",      "center-3",        "even-2",           "tm-sandwich",
      "h-prefix-free", "h-power-lengths", "f-prefix-free",   "g-prefix-free",    "alpha-prefix-free",
      "mu-prefix-free", "lemma-palindromic", "centers"};
  return names;
}

/// Every image of w under a permutation of its alphabet, sorted and deduplicated.
inline std::vector<Word> permutation_images(const Word& w) {
  std::vector<Letter> perm(w.alphabet());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Letter>(i);
  std::vector<Word> out;
  do {
    out.push_back(recode(w, perm, w.alphabet()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::string words_to_string(const std::vector<Word>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + render(ws[i]);
  return s + "}";
}

inline Certificate check_min_cexp(std::string name, unsigned k, std::size_t len, const Exponent& expected,
                                  const std::vector<Word>& expected_witnesses, std::uint64_t budget) {
  auto cert = min_cexp_over_palindromes(k, len, budget);
  cert.name = std::move(name);
  cert.passed = cert.exponent == expected && cert.witnesses == expected_witnesses;
  cert.notes.push_back("expected minimum " + expected.to_string() + " with witnesses " +
                       words_to_string(expected_witnesses));
  return cert;
}

// Every palindrome of the listed lengths over alphabets 1..max_k has cexp >= bound.
inline Certificate check_lower_bound(std::string name, unsigned max_k, const std::vector<std::size_t>& lengths,
                                     const Exponent& bound) {
  Certificate cert;
  cert.name = std::move(name);
  cert.passed = true;
  for (unsigned k = 1; k <= max_k; ++k) {
    for (auto len : lengths) {
      PalindromeEnumerator gen(k, len);
      while (auto w = gen.next()) {
        ++cert.space_size;
        const auto value = critical_exponent(*w).value;
        if (!cert.exponent || value < *cert.exponent) cert.exponent = value;
        if (value < bound) {
          cert.passed = false;
          cert.witnesses.push_back(*w);
        }
      }
    }
  }
  cert.notes.push_back("required lower bound " + bound.to_string() + "; witnesses list counterexamples");
  return cert;
}

inline Certificate check_prefix_free(std::string name, const Morphism& h, const ExponentBound& bound,
                                     std::size_t prefix) {
  Certificate cert;
  cert.name = std::move(name);
  cert.space_size = prefix;
  const Word w = fixed_point_prefix(h, 0, prefix);
  if (auto bad = find_violation(w, bound)) {
    cert.passed = false;
    cert.exponent = bad->exponent();
    cert.witnesses.push_back(factor(w, bad->start, bad->length));
    cert.notes.push_back("violation at " + std::to_string(bad->start) + " len " + std::to_string(bad->length) +
                         " per " + std::to_string(bad->period));
    return cert;
  }
  cert.passed = true;
  if (auto at = find_violation(w, {bound.value, false})) {
    cert.exponent = bound.value;
    cert.witnesses.push_back(factor(w, at->start, at->length));
  }
  cert.notes.push_back("verified " + bound.to_string() + "-power-free up to " + std::to_string(prefix) +
                       " letters; the full claim rests on the published proofs");
  return cert;
}

inline Certificate check_sandwich() {
  Certificate cert;
  cert.name = "tm-sandwich";
  cert.passed = true;
  const Exponent seven_thirds(7, 3);
  const Word core = parse("1001001", 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Word w = thue_morse_sandwich(n);
    cert.space_size += w.size();
    const auto report = critical_exponent(w);
    const auto hits = scan_powers(w, seven_thirds, ScanMode::at_least);
    const bool unique_center = hits.size() == 1 && hits[0].exponent() == seven_thirds &&
                               factor(w, hits[0].start, hits[0].length) == core &&
                               2 * hits[0].start + hits[0].length == w.size();
    const bool ok = is_palindrome(w) && report.value == seven_thirds && unique_center;
    cert.notes.push_back("n=" + std::to_string(n) + " len " + std::to_string(w.size()) + " cexp " +
                         report.value.to_string() + " maximal 7/3+ occurrences " + std::to_string(hits.size()) +
                         (ok ? " ok" : " FAIL"));
    cert.passed = cert.passed && ok;
  }
  cert.exponent = seven_thirds;
  cert.witnesses.push_back(core);
  return cert;
}

inline bool is_a_times_power_of_11(std::size_t len) {
  while (len > 12 && len % 11 == 0) len /= 11;
  return len == 3 || len == 6 || len == 9 || len == 12;
}

inline Certificate check_h_power_lengths(std::size_t prefix) {
  Certificate cert;
  cert.name = "h-power-lengths";
  cert.space_size = prefix;
  const Word w = fixed_point_prefix(catalog::h(), 0, prefix);
  const auto hits = scan_powers(w, Exponent(3, 2), ScanMode::exactly);
  std::set<std::size_t> lengths;
  std::set<std::size_t> stray;
  for (const auto& occ : hits) {
    lengths.insert(occ.length);
    if (!is_a_times_power_of_11(occ.length)) stray.insert(occ.length);
  }
  cert.passed = stray.empty() && !hits.empty();
  cert.exponent = Exponent(3, 2);
  std::string seen;
  for (auto l : lengths) seen += (seen.empty() ? "" : ",") + std::to_string(l);
  cert.notes.push_back(std::to_string(hits.size()) + " maximal 3/2-powers; observed lengths {" + seen + "}");
  if (!stray.empty()) {
    std::string s;
    for (auto l : stray) s += (s.empty() ? "" : ",") + std::to_string(l);
    cert.notes.push_back("lengths outside {3,6,9,12}*11^i: {" + s + "}");
  }
  return cert;
}

inline Certificate check_lemma_palindromic() {
  Certificate cert;
  cert.name = "lemma-palindromic";
  cert.passed = true;
  for (const auto& entry : catalog::entries()) {
    if (!is_palindromic(entry.morphism)) continue;
    std::size_t checked = 0;
    for (std::size_t len = 0; len <= 9; ++len) {
      PalindromeEnumerator gen(entry.morphism.source_alphabet(), len);
      while (auto w = gen.next()) {
        ++checked;
        if (!is_palindrome(apply(entry.morphism, *w))) {
          cert.passed = false;
          cert.witnesses.push_back(*w);
        }
      }
    }
    cert.space_size += checked;
    cert.notes.push_back(entry.name + ": " + std::to_string(checked) + " palindromes up to length 9");
  }
  return cert;
}

inline Certificate check_centers() {
  Certificate cert;
  cert.name = "centers";
  cert.passed = true;
  const std::array<std::pair<const char*, const char*>, 3> expected = {
      {{"f", "110010110"}, {"h", "21310"}, {"alpha", "210201021201210"}}};
  for (const auto& [name, x] : expected) {
    const auto& m = catalog::find(name)->morphism;
    const auto got = center_decomposition(m, 0);
    const bool ok = got && render(*got) == x;
    cert.passed = cert.passed && ok;
    cert.notes.push_back(std::string(name) + "(0) = x^R 0 x with x = " + (got ? render(*got) : "(none)") +
                         (ok ? " ok" : " FAIL"));
    if (got) cert.witnesses.push_back(*got);
  }
  const bool g_none = !center_decomposition(catalog::g(), 0);
  const auto g3_len = is_uniform(catalog::g3());
  const bool g3_ok = g3_len == 6859u && is_palindromic(catalog::g3()) && center_decomposition(catalog::g3(), 0);
  cert.notes.push_back(std::string("g has no center decomposition: ") + (g_none ? "ok" : "FAIL"));
  cert.notes.push_back("g3 is " + (g3_len ? std::to_string(*g3_len) : std::string("non")) +
                       "-uniform, palindromic, center-preserving: " + (g3_ok ? "ok" : "FAIL"));
  cert.passed = cert.passed && g_none && g3_ok;
  cert.space_size = 5;
  return cert;
}

}  // namespace detail

/// Runs the named finite check and reports the outcome.
inline Certificate verify_proposition(std::string_view name, const VerifyOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  Certificate cert;
  if (name == "binary-7") {
    cert = detail::check_min_cexp("binary-7", 2, 7, Exponent(7, 3),
                                  {parse("0110110", 2), parse("1001001", 2)}, opts.search_budget);
  } else if (name == "ternary-17") {
    cert = detail::check_min_cexp("ternary-17", 3, 17, Exponent(7, 4),
                                  permutation_images(parse("01210120102101210", 3)), opts.search_budget);
  } else if (name == "center-3") {
    cert = detail::check_lower_bound("center-3", 4, {3, 5, 7}, Exponent(3, 2));
  } else if (name == "even-2") {
    cert = detail::check_lower_bound("even-2", 3, {2, 4, 6, 8, 10}, Exponent(2, 1));
  } else if (name == "tm-sandwich") {
    cert = detail::check_sandwich();
  } else if (name == "h-prefix-free") {
    cert = detail::check_prefix_free("h-prefix-free", catalog::h(), {Exponent(3, 2), true}, opts.prefix);
  } else if (name == "h-power-lengths") {
    cert = detail::check_h_power_lengths(opts.power_length_prefix);
  } else if (name == "f-prefix-free") {
    cert = detail::check_prefix_free("f-prefix-free", catalog::f(), {Exponent(7, 3), true}, opts.prefix);
  } else if (name == "g-prefix-free") {
    cert = detail::check_prefix_free("g-prefix-free", catalog::g(), {Exponent(7, 4), true}, opts.prefix);
  } else if (name == "alpha-prefix-free") {
    cert = detail::check_prefix_free("alpha-prefix-free", catalog::alpha(), {Exponent(7, 4), true}, opts.prefix);
  } else if (name == "mu-prefix-free") {
    cert = detail::check_prefix_free("mu-prefix-free", catalog::mu(), {Exponent(2, 1), true}, opts.prefix);
  } else if (name == "lemma-palindromic") {
    cert = detail::check_lemma_palindromic();
  } else if (name == "centers") {
    cert = detail::check_centers();
  } else {
    throw UsageError("unknown proposition '" + std::string(name) + "'");
  }
  cert.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return cert;
}

}  // namespace palcrit
