#include "msgf/meixner.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace msgf {

MeixnerParams::MeixnerParams(ExactScalar beta_, ExactScalar c_)
    : beta(std::move(beta_)), c(std::move(c_)) {
    if (c == 0 || c == 1)
        throw std::invalid_argument("MeixnerParams: c must differ from 0 and 1");
}

void MeixnerParams::require_orthogonal_regime(const char* what) const {
    if (!orthogonal_regime())
        throw std::domain_error(std::string(what) +
                                ": requires beta > 0 and 0 < c < 1");
}

Polynomial meixner_poly(unsigned n, const MeixnerParams& p) {
    const ExactScalar ratio = ExactScalar(1) / p.c - 1;  // (1/c - 1)
    Polynomial result;
    Polynomial neg_x_poch = Polynomial::constant(ExactScalar(1));  // (-x)_k
    ExactScalar ratio_pow(1);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            // (-x)_k = (-x)_{k-1} * (k-1 - x)
            neg_x_poch *= Polynomial({ExactScalar(static_cast<long>(k - 1)), ExactScalar(-1)});
            ratio_pow *= ratio;
        }
        const ExactScalar weight =
            pochhammer(p.beta + static_cast<long>(k), n - k) /
            (factorial(k) * factorial(n - k)) * ratio_pow;
        result += neg_x_poch * weight;
    }
    return result;
}

std::vector<Polynomial> meixner_polys(unsigned n_max, const MeixnerParams& p) {
    std::vector<Polynomial> m;
    m.reserve(n_max + 1);
    m.push_back(Polynomial::constant(ExactScalar(1)));
    if (n_max == 0) return m;

    Polynomial prev;  // m_{-1} = 0
    for (unsigned n = 0; n < n_max; ++n) {
        // c(n+1) m_{n+1} = [x(c-1) + beta c + n(c+1)] m_n - (n+beta-1) m_{n-1}
        const Polynomial multiplier({p.beta * p.c + static_cast<long>(n) * (p.c + 1),
                                     p.c - 1});
        Polynomial next = multiplier * m.back() - prev * (p.beta + static_cast<long>(n) - 1);
        next /= p.c * static_cast<long>(n + 1);
        prev = m.back();
        m.push_back(std::move(next));
    }
    return m;
}

Polynomial meixner_poly_recurrence(unsigned n, const MeixnerParams& p) {
    return meixner_polys(n, p).back();
}

ExactScalar pascal_factorial_moment(unsigned j, const MeixnerParams& p) {
    p.require_orthogonal_regime("pascal_factorial_moment");
    return pochhammer(p.beta, j) * pow_int(p.c / (1 - p.c), static_cast<long>(j));
}

std::vector<ExactScalar> pascal_power_moments(unsigned j_max, const MeixnerParams& p) {
    std::vector<ExactScalar> falling(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j) falling[j] = pascal_factorial_moment(j, p);
    return stirling_convert(falling);
}

ExactScalar pascal_inner(const Polynomial& f, const Polynomial& g, const MeixnerParams& p) {
    p.require_orthogonal_regime("pascal_inner");
    const Polynomial h = f * g;
    if (h.is_zero()) return ExactScalar(0);
    const auto moments = pascal_power_moments(static_cast<unsigned>(h.degree()), p);
    ExactScalar sum(0);
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) sum += h.coeffs()[i] * moments[i];
    return sum;
}

ExactScalar meixner_norm(unsigned n, const MeixnerParams& p) {
    p.require_orthogonal_regime("meixner_norm");
    return pochhammer(p.beta, n) / (factorial(n) * pow_int(p.c, static_cast<long>(n)));
}

}  // namespace msgf
