#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace msgf {

/// Truncation control for the series evaluators.
struct SeriesOptions {
    double tol = 1e-16;   // relative term threshold
    int max_terms = 10000;
};

template <class Real>
struct SeriesResult {
    Real value;
    int terms_used;  // index of the last term added
};

namespace detail {

template <class Real>
bool is_nonpositive_integer(const Real& v) {
    using std::floor;
    return v <= 0 && floor(v) == v;
}

}  // namespace detail

/// Terminating Gauss sum 2F1(-m, b; c0; z) = sum_{k=0}^m (-m)_k (b)_k / (c0)_k z^k / k!,
/// evaluated left to right. c0 must avoid {0, -1, ..., -(m-1)}.
template <class Real>
Real hyp2f1_terminating(int m, const Real& b, const Real& c0, const Real& z) {
    if (m < 0) throw std::invalid_argument("hyp2f1_terminating: m must be >= 0");
    if (detail::is_nonpositive_integer(c0) && c0 > Real(-m))
        throw std::domain_error("hyp2f1_terminating: pole in lower parameter");
    Real sum(1), term(1);
    for (int k = 0; k < m; ++k) {
        term *= Real(-m + k) * (b + Real(k)) / ((c0 + Real(k)) * Real(k + 1)) * z;
        sum += term;
    }
    return sum;
}

/// Gauss series 2F1(a, b; c0; z) for |z| < 1, c0 not a nonpositive integer.
/// Sums until the term drops below opts.tol relative to the partial sum.
template <class Real>
SeriesResult<Real> hyp2f1_series(const Real& a, const Real& b, const Real& c0, const Real& z,
                                 const SeriesOptions& opts = {}) {
    using std::abs;
    if (detail::is_nonpositive_integer(c0))
        throw std::domain_error("hyp2f1_series: pole in lower parameter");
    if (abs(z) >= Real(1))
        throw std::domain_error("hyp2f1_series: |z| must be < 1");
    Real sum(1), term(1);
    for (int k = 0; k < opts.max_terms; ++k) {
        term *= (a + Real(k)) * (b + Real(k)) / ((c0 + Real(k)) * Real(k + 1)) * z;
        sum += term;
        const Real bound = abs(sum) > Real(0) ? Real(opts.tol) * abs(sum) : Real(opts.tol);
        if (abs(term) <= bound) return {sum, k + 1};
    }
    throw std::runtime_error("hyp2f1_series: did not converge within max_terms");
}

/// Confluent series 1F1(a; c0; z), entire in z.
template <class Real>
SeriesResult<Real> hyp1f1_series(const Real& a, const Real& c0, const Real& z,
                                 const SeriesOptions& opts = {}) {
    using std::abs;
    if (detail::is_nonpositive_integer(c0))
        throw std::domain_error("hyp1f1_series: pole in lower parameter");
    Real sum(1), term(1);
    for (int k = 0; k < opts.max_terms; ++k) {
        term *= (a + Real(k)) / ((c0 + Real(k)) * Real(k + 1)) * z;
        sum += term;
        const Real bound = abs(sum) > Real(0) ? Real(opts.tol) * abs(sum) : Real(opts.tol);
        if (abs(term) <= bound) return {sum, k + 1};
    }
    throw std::runtime_error("hyp1f1_series: did not converge within max_terms");
}

/// (1 - z)^{-p} on the principal real branch. Integer p is evaluated by
/// repeated multiplication (any sign of 1-z); otherwise 1-z must be positive.
template <class Real>
Real binom_pow(const Real& z, const Real& p) {
    using std::abs;
    using std::floor;
    using std::pow;
    const Real base = Real(1) - z;
    if (floor(p) == p && abs(p) < Real(1000000)) {
        const long n = static_cast<long>(p);
        if (base == Real(0)) {
            if (n > 0) throw std::domain_error("binom_pow: zero base with positive p");
            return n == 0 ? Real(1) : Real(0);
        }
        Real r(1);
        for (long i = 0; i < (n < 0 ? -n : n); ++i) r *= base;
        return n > 0 ? Real(1) / r : r;
    }
    if (base <= Real(0))
        throw std::domain_error("binom_pow: nonpositive base with non-integer exponent");
    return pow(base, -p);
}

/// Both sides of the Pfaff-Kummer transformation
/// 2F1(a, b; c0; z) = (1-z)^{-b} 2F1(c0-a, b; c0; z/(z-1)), |z| < 1.
template <class Real>
std::pair<Real, Real> pfaff_kummer_check(const Real& a, const Real& b, const Real& c0,
                                         const Real& z, const SeriesOptions& opts = {}) {
    const Real lhs = hyp2f1_series(a, b, c0, z, opts).value;
    const Real rhs =
        binom_pow(z, b) * hyp2f1_series(c0 - a, b, c0, z / (z - Real(1)), opts).value;
    return {lhs, rhs};
}

/// Both sides of Hansen's formula (65.2.2):
///   sum_k (a)_k (b)_k / (c0)_k y^k / k! * 2F1(c0-a, c0-b; c0+k; z)
///     = (1-z)^{a+b-c0} 2F1(a, b; c0; z + y - z y),
/// the left side truncated after k_terms+1 terms.
template <class Real>
std::pair<Real, Real> hansen_65_2_2_check(const Real& a, const Real& b, const Real& c0,
                                          const Real& y, const Real& z, int k_terms,
                                          const SeriesOptions& opts = {}) {
    Real left(0), weight(1);
    for (int k = 0; k <= k_terms; ++k) {
        if (k > 0) {
            weight *= (a + Real(k - 1)) * (b + Real(k - 1)) /
                      ((c0 + Real(k - 1)) * Real(k)) * y;
            if (weight == Real(0)) break;  // terminating upper parameter or y == 0
        }
        left += weight * hyp2f1_series(c0 - a, c0 - b, c0 + Real(k), z, opts).value;
    }
    const Real right =
        binom_pow(z, c0 - a - b) *
        hyp2f1_series(a, b, c0, z + y - z * y, opts).value;
    return {left, right};
}

}  // namespace msgf
