#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "actinwire/version.hpp"

namespace actinwire::csv {

/// Shortest decimal representation that round-trips the exact double.
inline std::string num(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string num(std::int64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string num(std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string num(int v) { return num(static_cast<std::int64_t>(v)); }

/// Provenance comment carried as the first line of every CSV.
inline std::string provenance_line(std::string_view config_hash_hex) {
  std::string s = "# actinwire ";
  s += kVersion;
  s += " config-hash=";
  s += config_hash_hex;
  s += '\n';
  return s;
}

}  // namespace actinwire::csv
