#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace svt {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0, exact.
BigRational rational_pow(const BigRational& base, int exp);

}  // namespace svt
