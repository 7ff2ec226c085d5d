#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace tworay {

using Int = long long;
using Rat = boost::rational<Int>;

inline Int gcd_ll(Int a, Int b) { return std::gcd(a, b); }

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace tworay
