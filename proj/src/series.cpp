#include "prodex/series.hpp"

#include <stdexcept>
#include <string>

namespace prodex {

namespace {

void require_same_order(const TruncatedSeries &a, const TruncatedSeries &b, const char *what)
{
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(what) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs)
{
    if (coeffs.size() == 0)
        throw std::invalid_argument("series needs at least one coefficient");
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + std::min(order + 1, coeffs_.size()));
    c.resize(order + 1);
    return TruncatedSeries(std::move(c));
}

GhostSequence operator+(const GhostSequence &a, const GhostSequence &b)
{
    if (a.order() != b.order())
        throw std::invalid_argument("ghost sum: order mismatch");
    std::vector<Integer> v(a.values().begin(), a.values().end());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] += b.values()[k];
    return GhostSequence(std::move(v));
}

GhostSequence operator-(const GhostSequence &a)
{
    std::vector<Integer> v(a.values().begin(), a.values().end());
    for (auto &x : v)
        x = -x;
    return GhostSequence(std::move(v));
}

TruncatedSeries make_series(std::vector<Integer> coeffs) { return TruncatedSeries(std::move(coeffs)); }

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_order(a, b, "add");
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] += b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    require_same_order(a, b, "mul");
    const std::size_t n = a.order();
    std::vector<Integer> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries &f)
{
    const Integer &c0 = f[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("reciprocal: constant term must be +1 or -1, got " + to_decimal(c0));
    const std::size_t n = f.order();
    std::vector<Integer> g(n + 1);
    g[0] = c0;
    Integer acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            mpz_addmul(acc.get_mpz_t(), f[i].get_mpz_t(), g[k - i].get_mpz_t());
        // c0 * g_k + acc = 0 and c0 = 1/c0
        g[k] = -c0 * acc;
    }
    return TruncatedSeries(std::move(g));
}

TruncatedSeries derivative(const TruncatedSeries &f)
{
    const std::size_t n = f.order();
    std::vector<Integer> d(n + 1);
    for (std::size_t k = 0; k < n; ++k)
        d[k] = f[k + 1] * static_cast<unsigned long>(k + 1);
    return TruncatedSeries(std::move(d));
}

GhostSequence neg_x_log_derivative(const TruncatedSeries &f)
{
    if (f[0] != 1)
        throw std::invalid_argument("log derivative: constant term must be 1, got " + to_decimal(f[0]));
    const std::size_t n = f.order();
    // -x f' at the same order; the zeroed top of f' falls off after the shift.
    const auto df = derivative(f);
    std::vector<Integer> shifted(n + 1);
    for (std::size_t k = 1; k <= n; ++k)
        shifted[k] = -df[k - 1];
    const auto q = mul(TruncatedSeries(std::move(shifted)), reciprocal(f));
    return GhostSequence(std::vector<Integer>(q.coeffs().begin() + 1, q.coeffs().end()));
}

} // namespace prodex
