#include "msgf/sobolev.hpp"

#include "msgf/gram_schmidt.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace msgf {

SobolevParams::SobolevParams(ExactScalar beta_, ExactScalar c_, ExactScalar lambda_)
    : beta(std::move(beta_)), c(std::move(c_)), lambda(std::move(lambda_)) {
    if (beta <= 0) throw std::invalid_argument("SobolevParams: beta must be > 0");
    if (c <= 0 || c >= 1) throw std::invalid_argument("SobolevParams: c must lie in (0,1)");
    if (lambda < 0) throw std::invalid_argument("SobolevParams: lambda must be >= 0");
    const ExactScalar r = 1 - ExactScalar(1) / c;
    eta = 1 + lambda * r * r;
}

std::vector<ExactScalar> a_sequence(unsigned n_max, const SobolevParams& p) {
    std::vector<ExactScalar> a;
    a.reserve(n_max + 1);
    a.emplace_back(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        const ExactScalar head = p.beta + static_cast<long>(n) - 1;
        const ExactScalar cn = p.c * static_cast<long>(n);
        a.push_back(head / (head + p.eta * cn - cn * a.back()));
    }
    return a;
}

double a_limit(const SobolevParams& p) {
    const double s = to_double(1 + p.eta * p.c);
    const double cc = to_double(p.c);
    // conjugate form of (s - sqrt(s^2 - 4c)) / (2c), stable for small c
    return 2.0 / (s + std::sqrt(s * s - 4.0 * cc));
}

std::vector<ExactScalar> q_sequence(unsigned n_max, const SobolevParams& p) {
    std::vector<ExactScalar> q{ExactScalar(1), ExactScalar(1)};
    for (unsigned n = 1; n < n_max; ++n) {
        const ExactScalar head = p.beta + static_cast<long>(n) - 1;
        const ExactScalar cn = p.c * static_cast<long>(n);
        q.push_back(((head + p.eta * cn) * q[n] - cn * q[n - 1]) / head);
    }
    q.resize(n_max + 1, ExactScalar(1));
    return q;
}

std::vector<Polynomial> q_polynomials(unsigned n_max, const SobolevParams& p) {
    const Polynomial one = Polynomial::constant(ExactScalar(1));
    std::vector<Polynomial> q{one, one};
    for (unsigned n = 1; n < n_max; ++n) {
        const ExactScalar head = p.beta + static_cast<long>(n) - 1;
        const ExactScalar cn = p.c * static_cast<long>(n);
        // q_{n+1}(eta) = [(head + eta c n) q_n(eta) - c n q_{n-1}(eta)] / head
        Polynomial next = q[n] * head + Polynomial::monomial(1, cn) * q[n] - q[n - 1] * cn;
        next /= head;
        q.push_back(std::move(next));
    }
    q.resize(n_max + 1, one);
    return q;
}

CoefficientTables CoefficientTables::build(unsigned n_max, const SobolevParams& p) {
    return {a_sequence(n_max, p), q_sequence(n_max, p), q_polynomials(n_max, p)};
}

ExactScalar sobolev_inner(const Polynomial& f, const Polynomial& g, const SobolevParams& p) {
    const MeixnerParams mp = p.meixner();
    ExactScalar value = pascal_inner(f, g, mp);
    if (p.lambda != 0)
        value += p.lambda * pascal_inner(forward_difference(f), forward_difference(g), mp);
    return value;
}

std::vector<Polynomial> sobolev_polys(unsigned n_max, const SobolevParams& p) {
    const auto q = q_sequence(n_max, p);
    const auto m = meixner_polys(n_max, p.lowered_meixner());
    std::vector<Polynomial> s;
    s.reserve(n_max + 1);
    Polynomial partial;  // sum_{k<=n} q_k m_k(x; beta-1, c)
    for (unsigned n = 0; n <= n_max; ++n) {
        partial += m[n] * q[n];
        s.push_back(partial / q[n]);
    }
    return s;
}

Polynomial sobolev_poly(unsigned n, const SobolevParams& p) {
    return sobolev_polys(n, p).back();
}

std::vector<Polynomial> gram_schmidt_basis(unsigned n_max, const SobolevParams& p) {
    const ExactScalar lc_ratio = 1 - ExactScalar(1) / p.c;
    return orthogonalize_monomials(
        n_max,
        [&](unsigned i, unsigned j) {
            return sobolev_inner(Polynomial::monomial(i), Polynomial::monomial(j), p);
        },
        [&](unsigned n) { return pow_int(lc_ratio, static_cast<long>(n)) / factorial(n); });
}

Polynomial gram_schmidt_oracle(unsigned n, const SobolevParams& p) {
    return gram_schmidt_basis(n, p).back();
}

bool telescoping_check(unsigned n, const SobolevParams& p) {
    if (n == 0) throw std::invalid_argument("telescoping_check: n must be >= 1");
    const auto m = meixner_polys(n, p.meixner());
    const auto s = sobolev_polys(n, p);
    const auto a = a_sequence(n - 1, p);
    return m[n] - m[n - 1] == s[n] - a[n - 1] * s[n - 1];
}

}  // namespace msgf
