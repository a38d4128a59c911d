#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace grouptope {

// Exact arithmetic everywhere a half or a big order shows up.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace grouptope
