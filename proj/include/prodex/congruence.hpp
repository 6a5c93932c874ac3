#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "prodex/series.hpp"

namespace prodex {

/// An exact identity that must hold failed to balance. Indicates a bug, never bad input.
class IdentityViolation : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], increasing. Segmented sieve; isolated Miller-Rabin above 2^40.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// f = 1 - x - sum_{n>=1} d^n x^{n+1} = (1 - (d+1)x) / (1 - dx), truncated at order.
/// The closed form is checked by multiplying out before returning.
TruncatedSeries rational_family_series(const Integer &d, std::size_t order);

/// ((d+1)^p - d^p - 1) / p, read off as the exponent at index p of the rational family.
Integer fermat_quotient_via_product(const Integer &d, std::uint64_t p);

struct FermatWitness
{
    Integer d;
    std::uint64_t p = 0;
    Integer m_p, m_2p, n_p, n_2p;
    Integer quotient;
};

/// Expands f = 1 - x - d x^2 + tail and 1/f to order 2p and balances the N = 2p instance
/// of the reciprocal identity:
///   2p m_2p + p m_p^2 + 2 d^p + 1 = -2p n_2p - p n_p^2 + 2 (d+1)^p - 1.
/// tail holds a_3, a_4, ...; entries past order 2p are ignored.
FermatWitness fermat_witness(const Integer &d, std::uint64_t p, std::span<const Integer> tail = {});

/// p | a^p - a, checked twice: by telescoping the witness quotients over d = 1..a-1,
/// and by modular exponentiation. True iff both routes say so.
bool fermat_check(std::uint64_t a, std::uint64_t p);

/// 2^{p-1} == 1 (mod p^2).
bool is_wieferich(std::uint64_t p);

struct WieferichScanReport
{
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::uint64_t primes_tested = 0;
    std::vector<std::uint64_t> hits;

    friend bool operator==(const WieferichScanReport &, const WieferichScanReport &) = default;
};

inline constexpr std::uint64_t kScanBlock = std::uint64_t{1} << 20;

/// Tests every prime in [lo, hi]. Blocks of kScanBlock are spread over `threads`
/// workers (0 = hardware concurrency) and merged in block order.
WieferichScanReport wieferich_scan(std::uint64_t lo, std::uint64_t hi, unsigned threads = 0);

/// p(0)..p(N) by Euler's pentagonal recurrence.
struct PartitionTable
{
    std::vector<Integer> values;
    std::size_t order() const { return values.size() - 1; }
};

PartitionTable partition_numbers(std::size_t order);

} // namespace prodex
