#pragma once

// Text and json-like rendering of groups and check results.

#include "relk/verify.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

namespace relk {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json-like" || s == "json") return Format::Json;
  throw InputError(0, "unknown format '" + s + "' (expected text or json-like)");
}

/// Invariant factors as strings (0 for a free summand), so big moduli survive.
inline Json group_json(const AbGroup& g) {
  Json inv = Json::array();
  for (const auto& d : g.invariants()) inv.push_back(d.str());
  return Json{{"group", g.to_string()}, {"invariants", inv}};
}

inline AbGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("invariants")) throw InputError(0, "group object needs an 'invariants' array");
  std::vector<Integer> d;
  for (const auto& v : j.at("invariants")) d.emplace_back(v.is_string() ? v.get<std::string>() : v.dump());
  return AbGroup(std::move(d));
}

/// Every group object found anywhere in a report, in document order.
inline std::vector<AbGroup> groups_in(const Json& j) {
  std::vector<AbGroup> out;
  std::function<void(const Json&)> walk = [&](const Json& x) {
    if (x.is_object() && x.contains("group") && x.contains("invariants")) {
      out.push_back(group_from_json(x));
      return;
    }
    if (x.is_structured())
      for (const auto& v : x) walk(v);
  };
  walk(j);
  return out;
}

inline const char* status_word(const CheckResult& r) { return r.skipped ? "SKIP" : r.pass ? "PASS" : "FAIL"; }

inline Json check_json(const CheckResult& r) {
  return Json{{"suite", r.suite}, {"name", r.name}, {"status", status_word(r)},
              {"cases", r.cases},   {"detail", r.detail}, {"seconds", r.seconds}};
}

inline std::string check_line(const CheckResult& r) {
  std::ostringstream os;
  os << status_word(r) << ' ' << r.suite << " :: " << r.name << " (" << r.cases << " cases, " << std::fixed
     << std::setprecision(2) << r.seconds << " s)";
  if (!r.detail.empty()) os << "  " << r.detail;
  return os.str();
}

inline Json verify_json(const std::vector<CheckResult>& rs, const SessionConfig& cfg) {
  Json checks = Json::array();
  std::size_t failed = 0, skipped = 0;
  for (const auto& r : rs) {
    checks.push_back(check_json(r));
    if (!r.pass) ++failed;
    if (r.skipped) ++skipped;
  }
  return Json{{"config", {{"N", cfg.N}, {"D", cfg.D}, {"bound", cfg.bound}, {"seed", cfg.seed}}},
              {"checks", checks},
              {"summary", {{"total", rs.size()}, {"failed", failed}, {"skipped", skipped}}}};
}

/// Key: value lines for a flat-ish object; nested groups shown by their name.
inline void print_text(std::ostream& os, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    os << pad << it.key() << ":";
    if (v.is_object() && v.contains("group")) {
      os << " " << v["group"].get<std::string>() << "\n";
    } else if (v.is_object()) {
      os << "\n";
      print_text(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_structured()) {
      os << "\n";
      for (const auto& x : v) {
        if (x.is_object() && x.contains("group")) {
          os << pad << "  - " << x["group"].get<std::string>() << "\n";
        } else if (x.is_object()) {
          os << pad << "  -\n";
          print_text(os, x, indent + 4);
        } else {
          os << pad << "  - " << x.dump() << "\n";
        }
      }
    } else if (v.is_string()) {
      os << " " << v.get<std::string>() << "\n";
    } else {
      os << " " << v.dump() << "\n";
    }
  }
}

inline void emit(std::ostream& os, const Json& j, Format f) {
  if (f == Format::Json) {
    os << j.dump(2) << "\n";
  } else {
    print_text(os, j);
  }
}

}  // namespace relk
