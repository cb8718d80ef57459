#include "msgf/gram_schmidt.hpp"

#include <stdexcept>

namespace msgf {

std::vector<Polynomial> orthogonalize_monomials(
    unsigned n_max,
    const std::function<ExactScalar(unsigned, unsigned)>& gram,
    const std::function<ExactScalar(unsigned)>& leading_coefficient) {
    const unsigned dim = n_max + 1;
    // gram_cache(i, j) for i, j <= n_max, symmetric
    std::vector<std::vector<ExactScalar>> g(dim, std::vector<ExactScalar>(dim));
    for (unsigned i = 0; i < dim; ++i)
        for (unsigned j = i; j < dim; ++j) g[i][j] = g[j][i] = gram(i, j);

    std::vector<Polynomial> basis;
    std::vector<std::vector<ExactScalar>> rows;  // rows[k][i] = (x^i, p_k)
    std::vector<ExactScalar> norms;              // (p_k, p_k)
    basis.reserve(dim);

    for (unsigned n = 0; n < dim; ++n) {
        Polynomial p = Polynomial::monomial(n);
        std::vector<ExactScalar> row = g[n];  // (x^i, x^n) for all i
        for (unsigned k = 0; k < n; ++k) {
            const ExactScalar coef = rows[k][n] / norms[k];
            p -= coef * basis[k];
            for (unsigned i = 0; i < dim; ++i) row[i] -= coef * rows[k][i];
        }
        if (p.degree() != static_cast<int>(n))
            throw std::runtime_error("orthogonalize_monomials: degenerate form");
        const ExactScalar scale = leading_coefficient(n) / p.leading_coefficient();
        p *= scale;
        for (auto& r : row) r *= scale;
        ExactScalar norm(0);
        for (std::size_t i = 0; i < p.coeffs().size(); ++i) norm += p.coeffs()[i] * row[i];
        if (norm == 0)
            throw std::runtime_error("orthogonalize_monomials: zero norm");
        basis.push_back(std::move(p));
        rows.push_back(std::move(row));
        norms.push_back(std::move(norm));
    }
    return basis;
}

}  // namespace msgf
