#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "prodex/integer.hpp"

namespace prodex {

/// A formal power series c_0 + c_1 x + ... + c_N x^N, understood modulo x^{N+1}.
class TruncatedSeries
{
  public:
    /// Throws std::invalid_argument on an empty list.
    explicit TruncatedSeries(std::vector<Integer> coeffs);
    TruncatedSeries(std::initializer_list<long> coeffs);

    /// The constant series 1 at the given order.
    static TruncatedSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Integer &operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Integer> coeffs() const { return coeffs_; }

    /// Zero-pads or cuts to the requested order.
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  private:
    std::vector<Integer> coeffs_;
};

/// Sequence indexed 1..N. Tag distinguishes exponent sequences from ghost sequences.
template <class Tag>
class OneBasedSequence
{
  public:
    OneBasedSequence() = default;
    explicit OneBasedSequence(std::vector<Integer> values) : values_(std::move(values)) {}
    OneBasedSequence(std::initializer_list<long> values)
    {
        values_.reserve(values.size());
        for (long v : values)
            values_.emplace_back(v);
    }

    static OneBasedSequence zeros(std::size_t order) { return OneBasedSequence(std::vector<Integer>(order)); }
    static OneBasedSequence ones(std::size_t order) { return OneBasedSequence(std::vector<Integer>(order, Integer(1))); }

    std::size_t order() const { return values_.size(); }

    /// 1-based access; k must lie in [1, order()].
    const Integer &operator[](std::size_t k) const { return values_[k - 1]; }
    Integer &operator[](std::size_t k) { return values_[k - 1]; }

    const Integer &at(std::size_t k) const
    {
        if (k == 0 || k > values_.size())
            throw std::out_of_range("index outside 1..order");
        return values_[k - 1];
    }

    std::span<const Integer> values() const { return values_; }

    OneBasedSequence truncated(std::size_t order) const
    {
        std::vector<Integer> v(values_.begin(), values_.begin() + std::min(order, values_.size()));
        v.resize(order);
        return OneBasedSequence(std::move(v));
    }

    friend bool operator==(const OneBasedSequence &, const OneBasedSequence &) = default;

  private:
    std::vector<Integer> values_;
};

struct GhostTag;
struct ExponentTag;

/// Coefficients L_1..L_N of -x (ln f)'.
using GhostSequence = OneBasedSequence<GhostTag>;

/// Exponents m_1..m_N with f = prod_k (1 - m_k x^k) mod x^{N+1}.
using ProductExpansion = OneBasedSequence<ExponentTag>;

GhostSequence operator+(const GhostSequence &a, const GhostSequence &b);
GhostSequence operator-(const GhostSequence &a);

/// Throws std::invalid_argument on an empty list.
TruncatedSeries make_series(std::vector<Integer> coeffs);

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);

/// Truncated Cauchy product. Orders must match.
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);
inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) { return mul(a, b); }

/// 1/f for a series whose constant term is +1 or -1.
TruncatedSeries reciprocal(const TruncatedSeries &f);

/// Term-by-term derivative at the same order; the top coefficient is set to zero.
TruncatedSeries derivative(const TruncatedSeries &f);

/// L_1..L_N with sum L_k x^k = -x f'(x) / f(x) mod x^{N+1}. Requires c_0 = 1.
GhostSequence neg_x_log_derivative(const TruncatedSeries &f);

} // namespace prodex
