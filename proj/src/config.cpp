#include "texlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "texlab/errors.hpp"
#include "texlab/runio.hpp"

namespace texlab {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

RunConfig RunConfig::from_file(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return from_text(ss.str(), overrides);
}

RunConfig RunConfig::from_text(const std::string& text, const std::vector<std::string>& overrides) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("config line " + std::to_string(lineno) +
                                             ": unterminated section header");
      section = trim(s.substr(1, s.size() - 2));
      cfg.sections_[section];
      continue;
    }
    const size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": key outside any section");
    cfg.sections_[section][trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
  }
  for (const auto& ov : overrides) {
    const size_t eq = ov.find('=');
    const size_t dot = ov.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw ConfigError("override must look like section.key=value: " + ov);
    cfg.sections_[trim(ov.substr(0, dot))][trim(ov.substr(dot + 1, eq - dot - 1))] =
        trim(ov.substr(eq + 1));
  }
  return cfg;
}

bool RunConfig::has(const std::string& section, const std::string& key) const {
  auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

std::string RunConfig::get(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
  auto it = sections_.find(section);
  if (it == sections_.end()) return fallback;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? fallback : jt->second;
}

std::string RunConfig::require(const std::string& section, const std::string& key) const {
  if (!has(section, key))
    throw ConfigError("missing config key [" + section + "] " + key);
  return get(section, key, "");
}

double RunConfig::number(const std::string& section, const std::string& key,
                         double fallback) const {
  if (!has(section, key)) return fallback;
  const std::string v = get(section, key, "");
  try {
    size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key [" + section + "] " + key + " is not a number: " + v);
  }
}

double RunConfig::require_number(const std::string& section, const std::string& key) const {
  require(section, key);
  return number(section, key, 0.0);
}

int RunConfig::integer(const std::string& section, const std::string& key, int fallback) const {
  return static_cast<int>(number(section, key, fallback));
}

std::string RunConfig::resolved_text() const {
  std::ostringstream os;
  for (const auto& [sec, kv] : sections_) {
    os << "[" << sec << "]\n";
    for (const auto& [k, v] : kv) os << k << " = " << v << "\n";
  }
  return os.str();
}

std::string RunConfig::physics_hash(const std::string& command) const {
  // paths and cosmetic keys do not change the physics
  static const char* skipped[] = {"out", "cache", "measured", "table", "plots", "workers"};
  std::ostringstream os;
  os << command << "\n";
  for (const auto& [sec, kv] : sections_) {
    if (sec == "run") continue;
    for (const auto& [k, v] : kv) {
      bool skip = false;
      for (const char* s : skipped)
        if (k == s) skip = true;
      if (!skip) os << sec << "." << k << "=" << v << "\n";
    }
  }
  return fnv1a_hex(os.str());
}

}  // namespace texlab
