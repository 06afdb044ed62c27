#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace patex {

// All exact arithmetic in the toolkit goes through these; recurrence values
// outgrow machine words at small arguments.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

}  // namespace patex
