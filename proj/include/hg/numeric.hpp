#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>

#include "hg/errors.hpp"

namespace hg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// boost's two-argument rational constructor rejects negative denominators,
// so sign normalization happens here.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational parse_rational(const std::string& num, const std::string& den) {
  try {
    return make_rational(Integer(num), Integer(den));
  } catch (const std::runtime_error& e) {
    throw ValidationError("unparseable rational " + num + "/" + den);
  }
}

// Decimal rendering with `digits` significant digits. Exact values stay the
// source of truth; this is for human-facing report columns only.
inline std::string to_decimal(const Rational& value, int digits = 6) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  std::ostringstream os;
  os << std::setprecision(digits) << static_cast<Float>(value);
  return os.str();
}

// Decimal rendering of sqrt(value), for quantities tracked as exact squares.
inline std::string sqrt_decimal(const Rational& value, int digits = 6) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  if (value < 0) throw ParameterError("sqrt of negative value");
  std::ostringstream os;
  os << std::setprecision(digits) << sqrt(static_cast<Float>(value));
  return os.str();
}

inline std::string rational_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

// FNV-1a, used for stable descriptor and table fingerprints.
inline std::uint64_t fnv1a64(std::string_view data,
                             std::uint64_t seed = 0xcbf29ce484222325ull) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace hg
