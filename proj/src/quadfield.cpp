#include "msgf/quadfield.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace msgf {

QuadScalar::QuadScalar(ExactScalar rational_part, ExactScalar surd_part,
                       ExactScalar discriminant)
    : x_(std::move(rational_part)), y_(std::move(surd_part)), d_(std::move(discriminant)) {
    if (d_ < 0) throw std::invalid_argument("QuadScalar: discriminant must be >= 0");
}

QuadScalar QuadScalar::from_rational(const ExactScalar& value, const ExactScalar& discriminant) {
    return {value, ExactScalar(0), discriminant};
}

QuadScalar QuadScalar::root(const ExactScalar& discriminant) {
    return {ExactScalar(0), ExactScalar(1), discriminant};
}

double QuadScalar::to_double() const {
    return msgf::to_double(x_) + msgf::to_double(y_) * std::sqrt(msgf::to_double(d_));
}

namespace {
void check_same_field(const QuadScalar& a, const QuadScalar& b) {
    if (a.discriminant() != b.discriminant())
        throw std::invalid_argument("QuadScalar: mixed discriminants");
}
}  // namespace

QuadScalar QuadScalar::operator-() const { return {-x_, -y_, d_}; }

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
    check_same_field(*this, rhs);
    x_ += rhs.x_;
    y_ += rhs.y_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
    check_same_field(*this, rhs);
    x_ -= rhs.x_;
    y_ -= rhs.y_;
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
    check_same_field(*this, rhs);
    const ExactScalar nx = x_ * rhs.x_ + d_ * y_ * rhs.y_;
    const ExactScalar ny = x_ * rhs.y_ + y_ * rhs.x_;
    x_ = nx;
    y_ = ny;
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
    check_same_field(*this, rhs);
    // multiply by the conjugate; the field norm x^2 - d y^2 vanishes only at 0
    // (d is never a perfect square in the uses here, and 0/0 is rejected anyway)
    const ExactScalar norm = rhs.x_ * rhs.x_ - d_ * rhs.y_ * rhs.y_;
    if (norm == 0) throw std::domain_error("QuadScalar: division by zero");
    const ExactScalar nx = (x_ * rhs.x_ - d_ * y_ * rhs.y_) / norm;
    const ExactScalar ny = (y_ * rhs.x_ - x_ * rhs.y_) / norm;
    x_ = nx;
    y_ = ny;
    return *this;
}

bool QuadScalar::operator==(const QuadScalar& rhs) const {
    return d_ == rhs.d_ && x_ == rhs.x_ && y_ == rhs.y_;
}

QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }

QuadSeries binomial_series(const QuadScalar& rate, const QuadScalar& exponent,
                           std::size_t n_terms) {
    QuadSeries out;
    out.reserve(n_terms);
    QuadScalar term = QuadScalar::from_rational(ExactScalar(1), rate.discriminant());
    out.push_back(term);
    for (std::size_t j = 1; j < n_terms; ++j) {
        // term_j = term_{j-1} * (exponent + j - 1) * rate / j
        const QuadScalar step =
            (exponent + QuadScalar::from_rational(ExactScalar(static_cast<long>(j - 1)),
                                                  rate.discriminant())) *
            rate / QuadScalar::from_rational(ExactScalar(static_cast<long>(j)),
                                             rate.discriminant());
        term *= step;
        out.push_back(term);
    }
    return out;
}

QuadSeries convolve(const QuadSeries& a, const QuadSeries& b, std::size_t n_terms) {
    if (a.empty() || b.empty()) return {};
    const ExactScalar d = a.front().discriminant();
    QuadSeries out(n_terms, QuadScalar::from_rational(ExactScalar(0), d));
    for (std::size_t i = 0; i < a.size() && i < n_terms; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n_terms; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

QuadSeries geometric_series(const ExactScalar& discriminant, std::size_t n_terms) {
    return QuadSeries(n_terms, QuadScalar::from_rational(ExactScalar(1), discriminant));
}

}  // namespace msgf
