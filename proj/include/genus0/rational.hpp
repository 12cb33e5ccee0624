#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace genus0 {

/// Exact rational with arbitrary-precision numerator and denominator.
/// Always stored reduced with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Numerator of an integral rational, if it fits in 64 bits.
inline std::optional<std::int64_t> to_int64(const Rational& q) {
  if (!is_integral(q)) return std::nullopt;
  const BigInt& n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return n.convert_to<std::int64_t>();
}

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace genus0
