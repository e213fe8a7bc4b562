#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exponent.hpp"
#include "morphism.hpp"

namespace palcrit {

/// A named morphism together with the repetition threshold its fixed point
/// is documented to respect. The threshold is trusted metadata from the
/// literature; this library only checks it on finite prefixes.
struct CatalogEntry {
  std::string name;
  Morphism morphism;
  ExponentBound avoids;
  Letter seed = 0;
  std::string provenance;
};

namespace catalog {

/// Thue-Morse: 0 -> 01, 1 -> 10.
inline const Morphism& mu() {
  static const Morphism m = Morphism::from_strings({"01", "10"});
  return m;
}

/// Rampersad's 19-uniform binary morphism.
inline const Morphism& f() {
  static const Morphism m = Morphism::from_strings({"0110100110110010110", "1001011001001101001"});
  return m;
}

/// Dejean's ternary morphism, letters renamed so that every image is a palindrome.
inline const Morphism& g() {
  static const Morphism m =
      Morphism::from_strings({"0120212012102120210", "1201020120210201021", "2012101201021012102"});
  return m;
}

/// g o g o g, 6859-uniform and center-preserving on every letter.
inline const Morphism& g3() {
  static const Morphism m = compose(g(), compose(g(), g()));
  return m;
}

/// 11-uniform quaternary palindromic morphism.
inline const Morphism& h() {
  static const Morphism m = Morphism::from_strings({"01312021310", "12023132021", "23130203132", "30201310203"});
  return m;
}

/// 31-uniform ternary palindromic morphism, center-preserving on 0.
inline const Morphism& alpha() {
  static const Morphism m = Morphism::from_strings({"0121021201020120210201021201210",
                                                    "1202102012101201021012102012021",
                                                    "2010210120212012102120210120102"});
  return m;
}

inline const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = {
      {"mu", mu(), {Exponent(2, 1), true}, 0, "Thue-Morse word is 2+-power-free (Thue)"},
      {"f", f(), {Exponent(7, 3), true}, 0, "fixed point avoids 7/3+-powers (Rampersad 2004)"},
      {"g", g(), {Exponent(7, 4), true}, 0, "iterates avoid 7/4+-powers (Dejean 1972)"},
      {"g3", g3(), {Exponent(7, 4), true}, 0, "same fixed point as g"},
      {"h", h(), {Exponent(3, 2), true}, 0, "fixed point 3/2+-power-free (Walnut machine proof)"},
      {"alpha", alpha(), {Exponent(7, 4), true}, 0, "fixed point avoids 7/4+-powers (claimed, unproved here)"},
  };
  return all;
}

inline const CatalogEntry* find(std::string_view name) {
  for (const auto& e : entries()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace catalog
}  // namespace palcrit
