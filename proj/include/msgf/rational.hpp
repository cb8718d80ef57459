#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace msgf {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational scalar. Always held in canonical form:
/// positive denominator, gcd(|num|, den) == 1.
using ExactScalar = boost::multiprecision::cpp_rational;

inline BigInt numerator(const ExactScalar& q) {
    return boost::multiprecision::numerator(q);
}
inline BigInt denominator(const ExactScalar& q) {
    return boost::multiprecision::denominator(q);
}

inline double to_double(const ExactScalar& q) { return q.convert_to<double>(); }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const ExactScalar& q);

/// Accepts "p/q", a plain integer, or a decimal string such as "-0.25"
/// (converted exactly). Throws std::invalid_argument on anything else.
ExactScalar parse_rational(const std::string& text);

/// base^exponent with integer exponent; negative exponents invert.
ExactScalar pow_int(const ExactScalar& base, long exponent);

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
ExactScalar pochhammer(const ExactScalar& a, unsigned n);

ExactScalar factorial(unsigned n);

/// Stirling numbers of the second kind, S2(j, k) for 0 <= k <= j <= j_max.
std::vector<std::vector<BigInt>> stirling_second_table(unsigned j_max);

/// Converts falling-factorial moments to power moments:
/// out[j] = sum_k S2(j, k) * in[k].
std::vector<ExactScalar> stirling_convert(const std::vector<ExactScalar>& falling_moments);

}  // namespace msgf
