#pragma once

#include "msgf/meixner.hpp"

#include <vector>

namespace msgf {

/// Parameters (beta, c, lambda) of the difference Sobolev inner product
/// (f, g)_S = (f, g) + lambda (Delta f, Delta g) over the Pascal measure,
/// with the derived eta = 1 + lambda (1 - 1/c)^2.
///
/// lambda = 0 is accepted (eta = 1); it degenerates the whole family back
/// to the classical Meixner polynomials.
struct SobolevParams {
    ExactScalar beta;
    ExactScalar c;
    ExactScalar lambda;
    ExactScalar eta;

    SobolevParams(ExactScalar beta_, ExactScalar c_, ExactScalar lambda_);

    MeixnerParams meixner() const { return {beta, c}; }
    /// The (beta-1, c) family entering the telescoped construction of S_n.
    MeixnerParams lowered_meixner() const { return {beta - 1, c}; }
};

/// a_0 = 1, a_n = (n+beta-1) / (n+beta-1 + eta c n - c n a_{n-1}).
/// Every entry lies in (0, 1].
std::vector<ExactScalar> a_sequence(unsigned n_max, const SobolevParams& p);

/// Limit of {a_n}: the smallest root of c z^2 - (1 + eta c) z + 1 = 0,
/// a = 2 / (1 + eta c + sqrt((1 + eta c)^2 - 4c)) < 1.
double a_limit(const SobolevParams& p);

/// q_0 = q_1 = 1 and
/// (n+beta-1) q_{n+1} = (n+beta-1+eta c n) q_n - c n q_{n-1},
/// evaluated at the parameter set's eta. Equivalently q_{n+1} = q_n / a_n.
std::vector<ExactScalar> q_sequence(unsigned n_max, const SobolevParams& p);

/// The same recurrence run over polynomials in eta; entry n has degree n-1
/// for n >= 1 (uses beta and c only).
std::vector<Polynomial> q_polynomials(unsigned n_max, const SobolevParams& p);

/// Memoized coefficient sequences for one parameter set.
struct CoefficientTables {
    std::vector<ExactScalar> a;
    std::vector<ExactScalar> q;
    std::vector<Polynomial> q_poly;

    static CoefficientTables build(unsigned n_max, const SobolevParams& p);
};

/// Exact normalized Sobolev inner product
/// (1-c)^beta [ (f, g) + lambda (Delta f, Delta g) ].
ExactScalar sobolev_inner(const Polynomial& f, const Polynomial& g, const SobolevParams& p);

/// S_n from the telescoped sum q_n S_n = sum_{k<=n} q_k m_k(x; beta-1, c);
/// exact degree n, leading coefficient (1/n!)(1 - 1/c)^n.
Polynomial sobolev_poly(unsigned n, const SobolevParams& p);

/// S_0..S_{n_max}.
std::vector<Polynomial> sobolev_polys(unsigned n_max, const SobolevParams& p);

/// Independent construction of S_n: Gram-Schmidt over the monomial basis
/// under sobolev_inner, rescaled to the Meixner leading coefficient.
Polynomial gram_schmidt_oracle(unsigned n, const SobolevParams& p);
std::vector<Polynomial> gram_schmidt_basis(unsigned n_max, const SobolevParams& p);

/// True iff m_n(x;beta,c) - m_{n-1}(x;beta,c) == S_n - a_{n-1} S_{n-1}
/// holds exactly as polynomials (n >= 1).
bool telescoping_check(unsigned n, const SobolevParams& p);

}  // namespace msgf
