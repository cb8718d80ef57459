#pragma once

#include "msgf/polynomial.hpp"

#include <functional>
#include <vector>

namespace msgf {

/// Orthogonalizes the monomial basis 1, x, ..., x^n_max against the bilinear
/// form whose Gram matrix on monomials is gram(i, j), then rescales entry n
/// to the prescribed leading coefficient.
///
/// Runs in O(n_max^3) coefficient operations by carrying, for each basis
/// polynomial, its row of inner products against all monomials.
std::vector<Polynomial> orthogonalize_monomials(
    unsigned n_max,
    const std::function<ExactScalar(unsigned, unsigned)>& gram,
    const std::function<ExactScalar(unsigned)>& leading_coefficient);

}  // namespace msgf
