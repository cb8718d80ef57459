#pragma once

#include "msgf/polynomial.hpp"

#include <vector>

namespace msgf {

/// Parameters (beta, c) of the Meixner family m_n(x; beta, c).
///
/// Polynomial construction is valid for any real beta and c outside {0, 1};
/// the Pascal-measure operations (inner products, norms, moments) require
/// the orthogonal regime beta > 0, 0 < c < 1.
struct MeixnerParams {
    ExactScalar beta;
    ExactScalar c;

    MeixnerParams(ExactScalar beta_, ExactScalar c_);

    bool orthogonal_regime() const { return beta > 0 && c > 0 && c < 1; }
    /// Throws std::domain_error outside the orthogonal regime.
    void require_orthogonal_regime(const char* what) const;
};

/// m_n from the explicit sum
/// m_n(x; beta, c) = sum_k (beta+k)_{n-k} / (k! (n-k)!) (-x)_k (1/c - 1)^k,
/// a polynomial of exact degree n with leading coefficient (1/n!)(1-1/c)^n.
Polynomial meixner_poly(unsigned n, const MeixnerParams& p);

/// Same polynomial, built from the three-term recurrence
/// c(n+1) m_{n+1} = [x(c-1) + beta c + n(c+1)] m_n - (n+beta-1) m_{n-1}
/// with seeds m_{-1} = 0, m_0 = 1.
Polynomial meixner_poly_recurrence(unsigned n, const MeixnerParams& p);

/// m_0..m_{n_max} via the recurrence.
std::vector<Polynomial> meixner_polys(unsigned n_max, const MeixnerParams& p);

/// j-th falling-factorial moment of the normalized Pascal measure:
/// (1-c)^beta sum_k k(k-1)...(k-j+1) c^k (beta)_k / k! = (beta)_j (c/(1-c))^j.
ExactScalar pascal_factorial_moment(unsigned j, const MeixnerParams& p);

/// Power moments E[k^j] for j = 0..j_max of the normalized Pascal measure.
std::vector<ExactScalar> pascal_power_moments(unsigned j_max, const MeixnerParams& p);

/// Normalized inner product (1-c)^beta sum_k f(k) g(k) c^k (beta)_k / k!,
/// computed exactly by expanding f*g and contracting against power moments.
ExactScalar pascal_inner(const Polynomial& f, const Polynomial& g, const MeixnerParams& p);

/// Normalized squared norm of m_n: (beta)_n / (n! c^n).
ExactScalar meixner_norm(unsigned n, const MeixnerParams& p);

}  // namespace msgf
