#include "texlab/runio.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "texlab/errors.hpp"

namespace texlab {

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  os << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_manifest(const std::string& out_dir, const std::string& command,
                    const std::string& resolved_config, const std::string& physics_hash) {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch());
  std::ostringstream os;
  os << "# texlab run manifest\n";
  os << "command = " << command << "\n";
  os << "physics_hash = " << physics_hash << "\n";
  os << "unix_time = " << secs.count() << "\n";
  os << "\n" << resolved_config;
  write_text_file(out_dir + "/manifest.txt", os.str());
}

std::optional<std::string> cache_lookup(const std::string& cache_dir, const std::string& key) {
  if (cache_dir.empty()) return std::nullopt;
  const std::string path = cache_dir + "/" + key + ".txt";
  if (!std::filesystem::exists(path)) return std::nullopt;
  return read_text_file(path);
}

void cache_store(const std::string& cache_dir, const std::string& key,
                 const std::string& content) {
  if (cache_dir.empty()) return;
  write_text_file(cache_dir + "/" + key + ".txt", content);
}

}  // namespace texlab
