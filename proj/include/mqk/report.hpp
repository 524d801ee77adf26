#pragma once
// Check bookkeeping shared by the verification sweeps, the CLI, and the
// acceptance runner: a flat list of named checks with PASS/FAIL status and
// an optional failure witness. Text and JSON renderings come from the same
// structure, and field order is fixed so equal reports render identically.

#include <string>
#include <utility>
#include <vector>

namespace mqk {

inline constexpr const char* kVersion = "0.1.0";

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // on failure: the minimal counterexample
};

struct Report {
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<Check> checks;

  void config_kv(std::string key, std::string value) {
    config.emplace_back(std::move(key), std::move(value));
  }

  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back(Check{std::move(name), pass, pass ? std::string() : std::move(witness)});
  }

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  int fail_count() const {
    int n = 0;
    for (const Check& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out += hex[(ch >> 4) & 0xf];
          out += hex[ch & 0xf];
        } else {
          out += ch;
        }
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_text(const Report& rep) {
  std::string out = "version " + std::string(kVersion) + "\n";
  for (const auto& [k, v] : rep.config) out += k + " = " + v + "\n";
  for (const Check& c : rep.checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name + "\n";
    if (!c.pass && !c.witness.empty()) out += "  witness: " + c.witness + "\n";
  }
  out += rep.all_pass() ? "ALL PASS (" + std::to_string(rep.checks.size()) + " checks)\n"
                        : std::to_string(rep.fail_count()) + " of " +
                              std::to_string(rep.checks.size()) + " checks FAILED\n";
  return out;
}

inline std::string render_json(const Report& rep) {
  using detail::json_escape;
  std::string out = "{\n  \"version\": \"" + std::string(kVersion) + "\",\n  \"config\": {";
  for (size_t i = 0; i < rep.config.size(); ++i) {
    if (i) out += ",";
    out += "\n    \"" + json_escape(rep.config[i].first) + "\": \"" +
           json_escape(rep.config[i].second) + "\"";
  }
  out += rep.config.empty() ? "},\n" : "\n  },\n";
  out += "  \"checks\": [";
  for (size_t i = 0; i < rep.checks.size(); ++i) {
    const Check& c = rep.checks[i];
    if (i) out += ",";
    out += "\n    {\"name\": \"" + json_escape(c.name) + "\", \"status\": \"" +
           (c.pass ? "PASS" : "FAIL") + "\"";
    if (!c.pass && !c.witness.empty()) out += ", \"witness\": \"" + json_escape(c.witness) + "\"";
    out += "}";
  }
  out += rep.checks.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

}  // namespace mqk
