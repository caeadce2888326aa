#pragma once

#include <optional>
#include <string>

namespace texlab {

// FNV-1a 64-bit content hash, hex encoded.
std::string fnv1a_hex(const std::string& data);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Run manifest: resolved config, content hash, command, timestamp.
void write_manifest(const std::string& out_dir, const std::string& command,
                    const std::string& resolved_config, const std::string& physics_hash);

// Texture cache keyed by the physics hash.
std::optional<std::string> cache_lookup(const std::string& cache_dir, const std::string& key);
void cache_store(const std::string& cache_dir, const std::string& key,
                 const std::string& content);

}  // namespace texlab
