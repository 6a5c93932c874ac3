#include "prodex/product.hpp"

#include <stdexcept>

namespace prodex {

namespace {

// P <- P * (1 - m x^k), truncated at P's order.
void multiply_factor(std::vector<Integer> &p, std::size_t k, const Integer &m)
{
    if (sgn(m) == 0)
        return;
    for (std::size_t i = p.size() - 1; i >= k; --i) {
        mpz_submul(p[i].get_mpz_t(), m.get_mpz_t(), p[i - k].get_mpz_t());
        if (i == k)
            break;
    }
}

} // namespace

ProductExpansion expand_to_product(const TruncatedSeries &f)
{
    if (f[0] != 1)
        throw std::invalid_argument("expand: constant term must be 1, got " + to_decimal(f[0]));
    const std::size_t n = f.order();
    std::vector<Integer> partial(n + 1);
    partial[0] = 1;
    std::vector<Integer> m(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // partial agrees with f below x^k; partial[k] is C.
        m[k - 1] = partial[k] - f[k];
        multiply_factor(partial, k, m[k - 1]);
    }
    return ProductExpansion(std::move(m));
}

TruncatedSeries product_to_series(const ProductExpansion &m)
{
    const std::size_t n = m.order();
    std::vector<Integer> p(n + 1);
    p[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        multiply_factor(p, k, m[k]);
    return TruncatedSeries(std::move(p));
}

ProductExpansion inverse_sequence(const ProductExpansion &m)
{
    return expand_to_product(reciprocal(product_to_series(m)));
}

ProductExpansion tilde_transform(const ProductExpansion &m)
{
    std::vector<Integer> v(m.values().begin(), m.values().end());
    for (auto &x : v)
        x = -x;
    return ProductExpansion(std::move(v));
}

} // namespace prodex
