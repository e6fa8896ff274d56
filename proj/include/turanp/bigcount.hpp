#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace turanp {

/// Exact unbounded integer used for every e_p value and formula output.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(std::int64_t base, unsigned exponent) {
  return boost::multiprecision::pow(BigCount(base), exponent);
}

inline BigCount binom2(std::int64_t m) {
  if (m < 2) return 0;
  return BigCount(m) * (m - 1) / 2;
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace turanp
