#pragma once

#include "prodex/series.hpp"

namespace prodex {

/// Unique exponents m_1..m_N with f = prod (1 - m_k x^k) mod x^{N+1}. Requires c_0 = 1.
///
/// Runs the induction on k: with C the x^k coefficient of the partial product
/// prod_{j<k} (1 - m_j x^j) and a_k the x^k coefficient of f, the only choice
/// that makes the next partial product agree with f through x^k is m_k = C - a_k.
/// The partial product is updated in place, P <- P - m_k x^k P.
ProductExpansion expand_to_product(const TruncatedSeries &f);

/// prod_{k=1}^{N} (1 - m_k x^k) mod x^{N+1}.
TruncatedSeries product_to_series(const ProductExpansion &m);

/// Exponents n of the reciprocal product: prod (1 - m_k x^k) prod (1 - n_k x^k) = 1 mod x^{N+1}.
ProductExpansion inverse_sequence(const ProductExpansion &m);

/// Elementwise negation, turning prod (1 - n_k x^k) into prod (1 + n~_k x^k).
ProductExpansion tilde_transform(const ProductExpansion &m);

} // namespace prodex
