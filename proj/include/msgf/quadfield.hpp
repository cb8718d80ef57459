#pragma once

#include "msgf/rational.hpp"

#include <cstddef>
#include <vector>

namespace msgf {

/// Element x + y*sqrt(d) of the real quadratic extension of the rationals
/// by a fixed nonnegative discriminant d. All operands of an expression
/// must share the same d; arithmetic stays exact.
class QuadScalar {
public:
    QuadScalar(ExactScalar rational_part, ExactScalar surd_part, ExactScalar discriminant);

    static QuadScalar from_rational(const ExactScalar& value, const ExactScalar& discriminant);
    /// sqrt(d) itself.
    static QuadScalar root(const ExactScalar& discriminant);

    const ExactScalar& rational_part() const { return x_; }
    const ExactScalar& surd_part() const { return y_; }
    const ExactScalar& discriminant() const { return d_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    double to_double() const;

    QuadScalar operator-() const;
    QuadScalar& operator+=(const QuadScalar& rhs);
    QuadScalar& operator-=(const QuadScalar& rhs);
    QuadScalar& operator*=(const QuadScalar& rhs);
    QuadScalar& operator/=(const QuadScalar& rhs);

    bool operator==(const QuadScalar& rhs) const;

private:
    ExactScalar x_, y_, d_;
};

QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs);
QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs);
QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs);
QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs);

/// Truncated power series with QuadScalar coefficients, index = power of w.
using QuadSeries = std::vector<QuadScalar>;

/// First n_terms coefficients of (1 - rate*w)^{-exponent}:
/// coefficient j = (exponent)_j rate^j / j!.
QuadSeries binomial_series(const QuadScalar& rate, const QuadScalar& exponent,
                           std::size_t n_terms);

/// Cauchy product truncated to n_terms coefficients.
QuadSeries convolve(const QuadSeries& a, const QuadSeries& b, std::size_t n_terms);

/// 1/(1-w): all-ones coefficients.
QuadSeries geometric_series(const ExactScalar& discriminant, std::size_t n_terms);

}  // namespace msgf
