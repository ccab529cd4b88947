#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hsimplex {

/// Arbitrary-precision integer and rational used throughout the library.
/// mpq_class keeps values canonical (positive denominator, reduced).
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

/// Space-separated decimal rendering, the format used by the text outputs.
inline std::string join(const std::vector<BigInt>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

}  // namespace hsimplex
