#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ltkg::util {

// Hex-encoded SHA-256 digest (lowercase).
std::string sha256_hex(std::string_view data);

// Digest of a file's raw bytes. Throws IoError if unreadable.
std::string sha256_file_hex(const std::filesystem::path& path);

// FNV-1a, used to derive per-item RNG seeds from string keys.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 14695981039346656037ull);

}  // namespace ltkg::util
