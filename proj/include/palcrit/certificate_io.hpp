#pragma once

#include <sstream>
#include <string>

#include "json.hpp"
#include "search.hpp"

namespace palcrit {

/// Line-oriented human report.
inline std::string to_text(const Certificate& c) {
  std::ostringstream os;
  os << c.name << ": " << (c.passed ? "PASS" : "FAIL") << '\n';
  os << "  space: " << c.space_size << '\n';
  os << "  exponent: " << (c.exponent ? c.exponent->to_string() : "-") << '\n';
  os << "  witnesses:";
  if (c.witnesses.empty()) os << " (none)";
  for (const auto& w : c.witnesses) os << ' ' << (w.empty() ? "ε" : render(w));
  os << '\n';
  for (const auto& n : c.notes) os << "  note: " << n << '\n';
  os << "  elapsed_ms: " << static_cast<long long>(c.elapsed_ms) << '\n';
  return os.str();
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["space_size"] = c.space_size;
  j["minimum"] = c.exponent ? nlohmann::json(c.exponent->to_string()) : nlohmann::json(nullptr);
  auto& ws = j["witnesses"] = nlohmann::json::array();
  for (const auto& w : c.witnesses) ws.push_back(render(w));
  j["notes"] = c.notes;
  j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

inline Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.space_size = j.at("space_size").get<std::uint64_t>();
  if (!j.at("minimum").is_null()) c.exponent = parse_exponent(j.at("minimum").get<std::string>());
  for (const auto& w : j.at("witnesses")) {
    const auto s = w.get<std::string>();
    c.witnesses.push_back(parse(s, infer_alphabet(s)));
  }
  c.notes = j.value("notes", std::vector<std::string>{});
  c.elapsed_ms = j.value("elapsed_ms", 0.0);
  return c;
}

}  // namespace palcrit
