// palcrit: command-line front end for critical exponents, morphic words and
// minimal-exponent palindromes.
//
// Exit codes: 0 success/pass, 1 property false/fail, 2 usage error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "palcrit/certificate_io.hpp"
#include "palcrit/palcrit.hpp"

namespace {

using namespace palcrit;
using nlohmann::json;

enum class Format { text, json };

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string strip(std::string s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

std::string slurp(std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

// "-" reads standard input, "@path" reads a file, anything else is the word itself.
std::string read_word_text(const std::string& arg) {
  if (arg == "-") return strip(slurp(std::cin));
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open " + arg.substr(1));
    return strip(slurp(in));
  }
  return strip(arg);
}

Word read_word(const std::string& arg, unsigned k) {
  const auto text = read_word_text(arg);
  return parse(text, k ? k : infer_alphabet(text));
}

struct NamedMorphism {
  std::string name;
  Morphism morphism;
};

NamedMorphism resolve_morphism(const std::string& name) {
  if (const auto* entry = catalog::find(name)) return {entry->name, entry->morphism};
  std::ifstream in(name);
  if (!in) throw UsageError("'" + name + "' is neither a catalog morphism (mu, f, g, g3, h, alpha) nor a readable file");
  return {name, parse_morphism(slurp(in))};
}

Letter parse_seed(const std::string& s) {
  if (s.size() != 1 || letter_value(s[0]) < 0) throw UsageError("seed must be a single letter");
  return static_cast<Letter>(letter_value(s[0]));
}

std::string shown(const Word& w) { return w.empty() ? "ε" : render(w); }

json occurrence_json(const PowerOccurrence& o) {
  return {{"start", o.start}, {"length", o.length}, {"period", o.period}, {"exponent", o.exponent().to_string()}};
}

std::string occurrence_text(const PowerOccurrence& o) {
  return "at " + std::to_string(o.start) + " len " + std::to_string(o.length) + " per " + std::to_string(o.period);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical exponents, morphic words and minimal-exponent palindromes"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

  // cexp
  std::string word_arg;
  unsigned k = 0;
  auto* cexp_cmd = app.add_subcommand("cexp", "Critical exponent of a word, with a witness");
  cexp_cmd->add_option("word", word_arg, "Word, '-' for stdin, or @file")->required();
  cexp_cmd->add_option("-k,--alphabet", k, "Alphabet size (inferred if omitted)");

  // free
  std::string alpha_arg;
  auto* free_cmd = app.add_subcommand("free", "Test alpha-power-freeness (p/q) or alpha+-freeness (p/q+)");
  free_cmd->add_option("--alpha", alpha_arg, "Exponent p/q or p/q+")->required();
  free_cmd->add_option("word", word_arg, "Word, '-' for stdin, or @file")->required();
  free_cmd->add_option("-k,--alphabet", k, "Alphabet size (inferred if omitted)");

  // generate
  std::string morphism_arg;
  std::string seed_arg = "0";
  std::size_t letters = 0;
  auto* gen_cmd = app.add_subcommand("generate", "Prefix of a morphism's fixed point");
  gen_cmd->add_option("--morphism", morphism_arg, "Catalog name or rule file")->required();
  gen_cmd->add_option("--seed", seed_arg, "Letter the fixed point starts with");
  gen_cmd->add_option("--letters", letters, "Number of letters")->required();

  // construct
  std::size_t length = 0;
  bool no_verify = false;
  auto* con_cmd = app.add_subcommand("construct", "Palindrome of given length with least critical exponent");
  con_cmd->add_option("-k,--alphabet", k, "Alphabet size (>= 2)")->required();
  con_cmd->add_option("--length", length, "Length of the palindrome (>= 1)")->required();
  con_cmd->add_flag("--no-verify", no_verify, "Skip recomputing the critical exponent of the result");

  // window
  std::size_t radius = 0;
  auto* win_cmd = app.add_subcommand("window", "Central window of a center-preserving morphism's iterates");
  win_cmd->add_option("--morphism", morphism_arg, "Catalog name or rule file")->required();
  win_cmd->add_option("--seed", seed_arg, "Center letter");
  win_cmd->add_option("--radius", radius, "Letters on each side of the center")->required();

  // verify
  std::string prop;
  std::size_t prefix = 0;
  auto* ver_cmd = app.add_subcommand("verify", "Re-check a named proposition ('all' runs every one)");
  ver_cmd->add_option("proposition", prop, "Proposition name")->required();
  ver_cmd->add_option("--prefix", prefix, "Fixed-point prefix length for prefix-based checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  const Format format = format_name == "json" ? Format::json : Format::text;

  try {
    if (*cexp_cmd) {
      const Word w = read_word(word_arg, k);
      const auto r = critical_exponent(w);
      if (format == Format::json) {
        std::cout << json{{"cexp", r.value.to_string()}, {"witness", occurrence_json(r.witness)}}.dump() << '\n';
      } else {
        std::cout << r.value << ' ' << occurrence_text(r.witness) << '\n';
      }
      return 0;
    }

    if (*free_cmd) {
      const auto bound = parse_exponent_bound(alpha_arg);
      const Word w = read_word(word_arg, k);
      const auto bad = find_violation(w, bound);
      if (format == Format::json) {
        json j{{"alpha", bound.to_string()}, {"free", !bad}};
        if (bad) {
          j["violation"] = occurrence_json(*bad);
          j["violation"]["factor"] = render(factor(w, bad->start, bad->length));
        }
        std::cout << j.dump() << '\n';
      } else if (bad) {
        std::cout << "violation " << render(factor(w, bad->start, bad->length)) << ' ' << occurrence_text(*bad)
                  << " exp " << bad->exponent() << '\n';
      } else {
        std::cout << "free\n";
      }
      return bad ? kExitFail : 0;
    }

    if (*gen_cmd) {
      if (letters > kDefaultIterateCap) throw ResourceError("requested prefix exceeds the iterate cap");
      const auto m = resolve_morphism(morphism_arg);
      const Word w = fixed_point_prefix(m.morphism, parse_seed(seed_arg), letters);
      if (format == Format::json) {
        std::cout << json{{"morphism", m.name}, {"letters", letters}, {"word", render(w)}}.dump() << '\n';
      } else {
        std::cout << shown(w) << '\n';
      }
      return 0;
    }

    if (*con_cmd) {
      ConstructOptions opts;
      opts.verify = !no_verify;
      if (length == 0) throw UsageError("length must be >= 1");
      const auto r = length % 2 ? minimal_palindrome(k, length, opts) : even_palindrome(k, length, opts);
      if (format == Format::json) {
        json j{{"alphabet", k},
               {"length", length},
               {"word", render(r.word)},
               {"cexp", r.critical_exponent.to_string()},
               {"verified", r.verified},
               {"provenance", r.provenance.to_string()}};
        if (!r.witnesses.empty()) {
          auto& ws = j["witnesses"] = json::array();
          for (const auto& w : r.witnesses) ws.push_back(render(w));
        }
        std::cout << j.dump() << '\n';
      } else {
        std::cout << render(r.word) << '\n'
                  << "cexp " << r.critical_exponent << (r.verified ? " (verified)" : " (unverified)") << '\n'
                  << "provenance " << r.provenance.to_string() << '\n';
        if (r.provenance.kind == Provenance::Kind::exhaustive_search) {
          std::cout << "minimizers " << r.witnesses.size() << '\n';
        }
      }
      return 0;
    }

    if (*win_cmd) {
      const auto m = resolve_morphism(morphism_arg);
      const Letter seed = parse_seed(seed_arg);
      if (!is_palindromic(m.morphism) || !center_decomposition(m.morphism, seed)) {
        std::cerr << m.name << " is not center-preserving on " << seed_arg
                  << ": its image of the seed is not x^R " << seed_arg << " x for a palindromic morphism\n";
        return kExitFail;
      }
      const Word w = central_window(m.morphism, seed, radius);
      if (format == Format::json) {
        std::cout << json{{"morphism", m.name}, {"radius", radius}, {"word", render(w)}}.dump() << '\n';
      } else {
        std::cout << render(w) << '\n';
      }
      return 0;
    }

    if (*ver_cmd) {
      VerifyOptions opts;
      if (prefix) opts.prefix = opts.power_length_prefix = prefix;
      std::vector<std::string> names;
      if (prop == "all") {
        for (auto n : proposition_names()) names.emplace_back(n);
      } else {
        names.push_back(prop);
      }
      bool all_passed = true;
      json arr = json::array();
      for (const auto& n : names) {
        const auto cert = verify_proposition(n, opts);
        all_passed = all_passed && cert.passed;
        if (format == Format::json) {
          arr.push_back(to_json(cert));
        } else {
          std::cout << to_text(cert);
        }
      }
      if (format == Format::json) std::cout << (names.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      return all_passed ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
