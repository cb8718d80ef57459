#include "msgf/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace msgf {

Polynomial::Polynomial(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<ExactScalar> coeffs) : coeffs_(coeffs) {
    trim();
}

Polynomial Polynomial::constant(const ExactScalar& value) {
    return Polynomial({value});
}

Polynomial Polynomial::monomial(unsigned degree, const ExactScalar& coeff) {
    std::vector<ExactScalar> c(degree + 1, ExactScalar(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactScalar Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ExactScalar(0);
}

ExactScalar Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? ExactScalar(0) : coeffs_.back();
}

ExactScalar Polynomial::operator()(const ExactScalar& x) const {
    ExactScalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + to_double(*it);
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ExactScalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ExactScalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ExactScalar> out(coeffs_.size() + rhs.coeffs_.size() - 1, ExactScalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Polynomial& Polynomial::operator/=(const ExactScalar& s) {
    if (s == 0) throw std::domain_error("Polynomial: division by zero scalar");
    for (auto& c : coeffs_) c /= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
Polynomial operator*(Polynomial lhs, const ExactScalar& s) { return lhs *= s; }
Polynomial operator*(const ExactScalar& s, Polynomial rhs) { return rhs *= s; }
Polynomial operator/(Polynomial lhs, const ExactScalar& s) { return lhs /= s; }

Polynomial shift_argument(const Polynomial& p) {
    // Horner in (x+1): acc <- acc*(x+1) + c_i from the top coefficient down.
    std::vector<ExactScalar> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        std::vector<ExactScalar> next(acc.size() + 1, ExactScalar(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i];
            next[i + 1] += acc[i];
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return Polynomial(std::move(acc));
}

Polynomial forward_difference(const Polynomial& p) {
    return shift_argument(p) - p;
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() <= 0) return Polynomial();
    std::vector<ExactScalar> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i)
        out[i - 1] = p.coeffs()[i] * ExactScalar(static_cast<long>(i));
    return Polynomial(std::move(out));
}

}  // namespace msgf
