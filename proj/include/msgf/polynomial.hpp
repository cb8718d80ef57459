#pragma once

#include "msgf/rational.hpp"

#include <initializer_list>
#include <vector>

namespace msgf {

/// Dense univariate polynomial over ExactScalar in the monomial basis.
/// coeffs()[i] is the coefficient of x^i. Trailing zeros are trimmed; the
/// zero polynomial has an empty coefficient vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactScalar> coeffs);
    Polynomial(std::initializer_list<ExactScalar> coeffs);

    static Polynomial constant(const ExactScalar& value);
    static Polynomial monomial(unsigned degree, const ExactScalar& coeff = ExactScalar(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<ExactScalar>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero outside the stored range.
    ExactScalar coeff(std::size_t i) const;
    /// Zero for the zero polynomial.
    ExactScalar leading_coefficient() const;

    ExactScalar operator()(const ExactScalar& x) const;
    double operator()(double x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const ExactScalar& s);
    Polynomial& operator/=(const ExactScalar& s);
    Polynomial operator-() const;

    bool operator==(const Polynomial& rhs) const = default;

private:
    void trim();
    std::vector<ExactScalar> coeffs_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial lhs, const Polynomial& rhs);
Polynomial operator*(Polynomial lhs, const ExactScalar& s);
Polynomial operator*(const ExactScalar& s, Polynomial rhs);
Polynomial operator/(Polynomial lhs, const ExactScalar& s);

/// p(x+1).
Polynomial shift_argument(const Polynomial& p);

/// Forward difference (Delta p)(x) = p(x+1) - p(x). Drops the degree by
/// exactly one for nonconstant p.
Polynomial forward_difference(const Polynomial& p);

/// d/dx p.
Polynomial derivative(const Polynomial& p);

}  // namespace msgf
