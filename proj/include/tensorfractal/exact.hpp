#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tensorfractal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace tensorfractal
