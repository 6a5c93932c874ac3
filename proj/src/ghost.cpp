#include "prodex/ghost.hpp"

#include <algorithm>

namespace prodex {

NotRealizable::NotRealizable(std::size_t index, Integer remainder)
    : std::runtime_error("not realizable at N=" + std::to_string(index) + ", remainder " + to_decimal(remainder)),
      index_(index), remainder_(std::move(remainder))
{
}

std::vector<std::size_t> divisors(std::size_t n)
{
    std::vector<std::size_t> low, high;
    for (std::size_t s = 1; s * s <= n; ++s) {
        if (n % s != 0)
            continue;
        low.push_back(s);
        if (s != n / s)
            high.push_back(n / s);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

namespace {

// sum over divisors s of n with s >= first_s of m_{n/s}^s (n/s)
Integer divisor_sum(const ProductExpansion &m, std::size_t n, std::size_t first_s)
{
    Integer total, term;
    for (std::size_t s : divisors(n)) {
        if (s < first_s)
            continue;
        const std::size_t k = n / s;
        term = power(m[k], s);
        mpz_addmul_ui(total.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return total;
}

} // namespace

GhostSequence ghost_from_exponents(const ProductExpansion &m)
{
    std::vector<Integer> values(m.order());
    for (std::size_t n = 1; n <= m.order(); ++n)
        values[n - 1] = divisor_sum(m, n, 1);
    return GhostSequence(std::move(values));
}

ProductExpansion exponents_from_ghost(const GhostSequence &ghost)
{
    const std::size_t order = ghost.order();
    ProductExpansion m = ProductExpansion::zeros(order);
    Integer numerator, rem;
    for (std::size_t n = 1; n <= order; ++n) {
        // m_n for n' < n is final; m_n itself only enters through s = 1.
        numerator = ghost[n] - divisor_sum(m, n, 2);
        mpz_fdiv_qr_ui(m[n].get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(n));
        if (sgn(rem) != 0)
            throw NotRealizable(n, rem);
    }
    return m;
}

std::vector<bool> verify_reciprocal_identity(const ProductExpansion &m, const ProductExpansion &n)
{
    if (m.order() != n.order())
        throw std::invalid_argument("reciprocal identity: order mismatch");
    const auto gm = ghost_from_exponents(m);
    const auto gn = ghost_from_exponents(n);
    std::vector<bool> ok(m.order());
    for (std::size_t k = 1; k <= m.order(); ++k)
        ok[k - 1] = gm[k] == -gn[k];
    return ok;
}

} // namespace prodex
