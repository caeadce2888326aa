#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace texlab {

// [section] key = value run configuration; CLI overrides use section.key=value.
class RunConfig {
 public:
  static RunConfig from_file(const std::string& path,
                             const std::vector<std::string>& overrides = {});
  static RunConfig from_text(const std::string& text,
                             const std::vector<std::string>& overrides = {});

  bool has(const std::string& section, const std::string& key) const;
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback) const;
  std::string require(const std::string& section, const std::string& key) const;
  double number(const std::string& section, const std::string& key, double fallback) const;
  double require_number(const std::string& section, const std::string& key) const;
  int integer(const std::string& section, const std::string& key, int fallback) const;

  // canonical sorted text of the resolved configuration
  std::string resolved_text() const;
  // hash over the physics-relevant sections (paths and cosmetic keys excluded)
  std::string physics_hash(const std::string& command) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace texlab
