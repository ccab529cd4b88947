#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "hsimplex/bigint.hpp"

namespace hsimplex {

/// JSON number when the value fits in int64, decimal string otherwise.
inline nlohmann::json big_to_json(const BigInt& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

inline BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  return BigInt(std::to_string(j.get<std::int64_t>()));
}

inline nlohmann::json big_to_json(const std::vector<BigInt>& values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(big_to_json(v));
  return arr;
}

inline std::vector<BigInt> bigs_from_json(const nlohmann::json& j) {
  std::vector<BigInt> out;
  for (const auto& v : j) out.push_back(big_from_json(v));
  return out;
}

}  // namespace hsimplex
