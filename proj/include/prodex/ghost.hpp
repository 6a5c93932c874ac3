#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "prodex/series.hpp"

namespace prodex {

/// Raised when a ghost sequence is not the divisor-sum transform of any integer exponent sequence.
class NotRealizable : public std::runtime_error
{
  public:
    NotRealizable(std::size_t index, Integer remainder);

    /// First index N at which the numerator is not divisible by N.
    std::size_t index() const { return index_; }
    /// Numerator mod N, in [1, N).
    const Integer &remainder() const { return remainder_; }

  private:
    std::size_t index_;
    Integer remainder_;
};

/// Positive divisors of n in increasing order, by trial division up to sqrt(n).
std::vector<std::size_t> divisors(std::size_t n);

/// L_N = sum_{s | N} m_{N/s}^s (N/s).
GhostSequence ghost_from_exponents(const ProductExpansion &m);

/// Inverts ghost_from_exponents, solving for m_N in increasing N.
/// Throws NotRealizable at the first index whose numerator is not divisible by N.
ProductExpansion exponents_from_ghost(const GhostSequence &ghost);

/// Per index N, whether ghost(m)_N == -ghost(n)_N. Orders must match.
std::vector<bool> verify_reciprocal_identity(const ProductExpansion &m, const ProductExpansion &n);

} // namespace prodex
