#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace msgf {

/// Extended-precision reals for the coefficient-level suites.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

}  // namespace msgf
