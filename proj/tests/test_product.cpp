#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prodex/product.hpp"

using namespace prodex;
namespace oracle = prodex::oracle;

namespace {

TruncatedSeries multiply_back(const ProductExpansion &m)
{
    std::vector<Integer> ms(m.values().begin(), m.values().end());
    return TruncatedSeries(oracle::product(ms, m.order()));
}

} // namespace

TEST(ExpandToProduct, SingleFactor)
{
    EXPECT_EQ(expand_to_product(TruncatedSeries{1, -1, 0, 0, 0}), (ProductExpansion{1, 0, 0, 0}));
}

TEST(ExpandToProduct, GeometricSeriesIsBinaryProduct)
{
    TruncatedSeries f{1, 1, 1, 1, 1, 1, 1, 1, 1};
    auto m = expand_to_product(f);
    EXPECT_EQ(m, (ProductExpansion{-1, -1, 0, -1, 0, 0, 0, -1}));
    EXPECT_EQ(multiply_back(m), f);
}

TEST(ExpandToProduct, ZeroTailQuadratic)
{
    TruncatedSeries f{1, -1, -1, 0, 0, 0, 0};
    auto m = expand_to_product(f);
    EXPECT_EQ(m, (ProductExpansion{1, 1, 1, 1, 2, 2}));
    EXPECT_EQ(multiply_back(m), f);
}

TEST(ExpandToProduct, LeadingExponentsOfQuadratic)
{
    // m_1 = 1 and m_2 = d for 1 - x - d x^2 + ..., any tail.
    for (long d : {-3L, 0L, 1L, 5L}) {
        auto m = expand_to_product(TruncatedSeries{1, -1, -d, 4, -7});
        EXPECT_EQ(m[1], 1);
        EXPECT_EQ(m[2], d);
    }
}

TEST(ExpandToProduct, RejectsNonUnit)
{
    EXPECT_THROW(expand_to_product(TruncatedSeries{-1, 1}), std::invalid_argument);
    EXPECT_THROW(expand_to_product(TruncatedSeries{3, 1}), std::invalid_argument);
}

TEST(ExpandToProduct, PartialProductsAgreeWithF)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        TruncatedSeries f(oracle::random_unit_coeffs(rng, 1 + rng() % 40));
        auto m = expand_to_product(f);
        std::vector<Integer> prefix;
        for (std::size_t k = 1; k <= m.order(); ++k) {
            prefix.push_back(m[k]);
            auto p = oracle::product(prefix, f.order());
            for (std::size_t i = 0; i <= k; ++i)
                ASSERT_EQ(p[i], f[i]) << "k=" << k << " i=" << i;
        }
    }
}

TEST(ExpandToProduct, Deterministic)
{
    std::mt19937_64 rng(9);
    TruncatedSeries f(oracle::random_unit_coeffs(rng, 64));
    EXPECT_EQ(expand_to_product(f), expand_to_product(f));
}

TEST(ProductToSeries, Examples)
{
    EXPECT_EQ(product_to_series(ProductExpansion::zeros(5)), TruncatedSeries::one(5));
    EXPECT_EQ(product_to_series(ProductExpansion::ones(7)), (TruncatedSeries{1, -1, -1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(product_to_series(ProductExpansion{1, 0, 0, 0}), (TruncatedSeries{1, -1, 0, 0, 0}));
}

TEST(ProductToSeries, PentagonalNumberTheorem)
{
    // prod (1 - x^k) = sum_j (-1)^j x^{j(3j-1)/2}, j over all integers
    const std::size_t n = 100;
    std::vector<Integer> expected(n + 1);
    for (long j = -10; j <= 10; ++j) {
        long e = j * (3 * j - 1) / 2;
        if (e >= 0 && e <= static_cast<long>(n))
            expected[e] += (j % 2 == 0) ? 1 : -1;
    }
    EXPECT_EQ(product_to_series(ProductExpansion::ones(n)), TruncatedSeries(expected));
}

TEST(ProductExpansion, RoundTripProperties)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        ProductExpansion m(oracle::random_ints(rng, n));
        EXPECT_EQ(expand_to_product(product_to_series(m)), m);
        EXPECT_EQ(product_to_series(m), multiply_back(m));

        TruncatedSeries f(oracle::random_unit_coeffs(rng, n));
        EXPECT_EQ(product_to_series(expand_to_product(f)), f);
    }
}

TEST(InverseSequence, Examples)
{
    EXPECT_EQ(inverse_sequence(ProductExpansion::zeros(6)), ProductExpansion::zeros(6));
    EXPECT_EQ(inverse_sequence(ProductExpansion::ones(8)), (ProductExpansion{-1, -2, -1, -4, -1, 0, -1, -14}));
    EXPECT_EQ(inverse_sequence(ProductExpansion{1, 1, 1, 1, 2, 2}), (ProductExpansion{-1, -2, -1, -4, -2, -1}));
}

TEST(InverseSequence, PairingInvolutionAndOddNegation)
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 63;
        // m_1 is unrestricted here, not only +-1.
        ProductExpansion m(oracle::random_ints(rng, n));
        auto inv = inverse_sequence(m);
        EXPECT_EQ(product_to_series(m) * product_to_series(inv), TruncatedSeries::one(n));
        EXPECT_EQ(inverse_sequence(inv), m);
        for (std::size_t k = 1; k <= n; k += 2)
            EXPECT_EQ(inv[k], -m[k]) << "k=" << k;
    }
}

TEST(InverseSequence, EvenIndexNegationFails)
{
    auto n = inverse_sequence(ProductExpansion::ones(2));
    EXPECT_EQ(n[2], -2);
    EXPECT_NE(n[2], -1);
}

TEST(TildeTransform, Examples)
{
    EXPECT_EQ(tilde_transform(ProductExpansion{-1, -2, -1}), (ProductExpansion{1, 2, 1}));
    ProductExpansion m{3, -4, 0, 9};
    EXPECT_EQ(tilde_transform(tilde_transform(m)), m);

    auto t = tilde_transform(inverse_sequence(ProductExpansion::ones(8)));
    EXPECT_EQ(t[2], 2);
    EXPECT_EQ(t[4], 4);
    EXPECT_EQ(t[6], 0);
    EXPECT_EQ(t[8], 14);
}

TEST(ProductExpansion, OneBasedAccess)
{
    ProductExpansion m{5, 6, 7};
    EXPECT_EQ(m.at(1), 5);
    EXPECT_EQ(m.at(3), 7);
    EXPECT_THROW(m.at(0), std::out_of_range);
    EXPECT_THROW(m.at(4), std::out_of_range);
}
