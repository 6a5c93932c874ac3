#include "prodex/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "prodex/product.hpp"

namespace prodex {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSieveLimit = u64{1} << 40;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 isqrt(u64 n)
{
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n)
        --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

std::vector<u64> small_primes(u64 limit)
{
    std::vector<u64> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

// Primes in [lo, hi] using base primes covering sqrt(hi). Requires hi <= kSieveLimit.
std::vector<u64> sieve_segment(u64 lo, u64 hi, const std::vector<u64> &base)
{
    std::vector<u64> out;
    lo = std::max<u64>(lo, 2);
    if (lo > hi)
        return out;
    std::vector<bool> composite(hi - lo + 1);
    for (u64 q : base) {
        if (q * q > hi)
            break;
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 j = start; j <= hi; j += q)
            composite[j - lo] = true;
    }
    for (u64 x = lo; x <= hi; ++x)
        if (!composite[x - lo])
            out.push_back(x);
    return out;
}

std::vector<u64> primes_by_test(u64 lo, u64 hi)
{
    std::vector<u64> out;
    for (u64 x = lo;; ++x) {
        if (is_prime(x))
            out.push_back(x);
        if (x == hi)
            break;
    }
    return out;
}

void require_prime(u64 p, const char *what)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
}

void require_odd_prime(u64 p, const char *what)
{
    require_prime(p, what);
    if (p == 2)
        throw std::invalid_argument(std::string(what) + ": p = 2 is excluded, p must be odd");
}

Integer closed_form_numerator(const Integer &d, u64 p)
{
    return power(d + 1, p) - power(d, p) - 1;
}

struct WieferichScratch
{
    Integer base{2}, exp, modulus, result;
};

bool wieferich_holds(u64 p, WieferichScratch &s)
{
    s.exp = static_cast<unsigned long>(p - 1);
    s.modulus = static_cast<unsigned long>(p);
    s.modulus *= s.modulus;
    mpz_powm(s.result.get_mpz_t(), s.base.get_mpz_t(), s.exp.get_mpz_t(), s.modulus.get_mpz_t());
    return s.result == 1;
}

} // namespace

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // These twelve bases are exact below 3.3e24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi)
{
    if (lo > hi || hi < 2)
        return {};
    lo = std::max<u64>(lo, 2);
    if (hi > kSieveLimit)
        return primes_by_test(lo, hi);
    const auto base = small_primes(isqrt(hi));
    std::vector<u64> out;
    for (u64 start = lo; start <= hi; start += kScanBlock) {
        auto part = sieve_segment(start, std::min(hi, start + kScanBlock - 1), base);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

TruncatedSeries rational_family_series(const Integer &d, std::size_t order)
{
    if (order < 1)
        throw std::invalid_argument("rational family: order must be at least 1");
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    c[1] = -1;
    Integer dn = 1;
    for (std::size_t k = 2; k <= order; ++k) {
        dn *= d;
        c[k] = -dn;
    }
    TruncatedSeries f(std::move(c));

    std::vector<Integer> denom(order + 1), numer(order + 1);
    denom[0] = numer[0] = 1;
    denom[1] = -d;
    numer[1] = -(d + 1);
    if (mul(TruncatedSeries(std::move(denom)), f) != TruncatedSeries(std::move(numer)))
        throw IdentityViolation("rational family: (1 - dx) f != 1 - (d+1)x");
    return f;
}

Integer fermat_quotient_via_product(const Integer &d, u64 p)
{
    if (d < 1)
        throw std::invalid_argument("fermat quotient: d must be at least 1");
    require_odd_prime(p, "fermat quotient");
    const auto m = expand_to_product(rational_family_series(d, p));
    Integer q = m[p];
    if (q * static_cast<unsigned long>(p) != closed_form_numerator(d, p))
        throw IdentityViolation("fermat quotient: a_p * p != (d+1)^p - d^p - 1 for p = " + std::to_string(p));
    return q;
}

FermatWitness fermat_witness(const Integer &d, u64 p, std::span<const Integer> tail)
{
    if (d < 1)
        throw std::invalid_argument("fermat witness: d must be at least 1");
    require_odd_prime(p, "fermat witness");
    const std::size_t order = 2 * p;
    std::vector<Integer> c(order + 1);
    c[0] = 1;
    c[1] = -1;
    c[2] = -d;
    for (std::size_t i = 0; i < tail.size() && i + 3 <= order; ++i)
        c[i + 3] = tail[i];
    const TruncatedSeries f(std::move(c));
    const auto m = expand_to_product(f);
    const auto n = expand_to_product(reciprocal(f));

    FermatWitness w;
    w.d = d;
    w.p = p;
    w.m_p = m[p];
    w.m_2p = m[2 * p];
    w.n_p = n[p];
    w.n_2p = n[2 * p];

    const auto up = static_cast<unsigned long>(p);
    const Integer lhs = 2 * up * w.m_2p + up * w.m_p * w.m_p + 2 * power(d, p) + 1;
    const Integer rhs = -(2 * up * w.n_2p) - up * w.n_p * w.n_p + 2 * power(d + 1, p) - 1;
    if (lhs != rhs)
        throw IdentityViolation("fermat witness: N = 2p identity does not balance for p = " + std::to_string(p));
    if (w.m_p != -w.n_p)
        throw IdentityViolation("fermat witness: m_p != -n_p for p = " + std::to_string(p));
    w.quotient = w.m_2p + w.n_2p + w.m_p * w.m_p;
    if (w.quotient * up != closed_form_numerator(d, p))
        throw IdentityViolation("fermat witness: quotient * p != (d+1)^p - d^p - 1 for p = " + std::to_string(p));
    return w;
}

bool fermat_check(u64 a, u64 p)
{
    require_prime(p, "fermat check");
    if (a < 1)
        throw std::invalid_argument("fermat check: a must be at least 1");
    const Integer A = static_cast<unsigned long>(a);
    const Integer P = static_cast<unsigned long>(p);
    const Integer target = power(A, p) - A;

    bool telescoped;
    if (p == 2) {
        // a^2 - a = a (a - 1), a product of consecutive integers.
        telescoped = target == A * (A - 1) && mpz_even_p(target.get_mpz_t());
    } else {
        // sum_{d=1}^{a-1} ((d+1)^p - d^p - 1) = a^p - 1 - (a - 1)
        Integer total;
        for (u64 d = 1; d < a; ++d)
            total += fermat_witness(Integer(static_cast<unsigned long>(d)), p).quotient * P;
        telescoped = total == target && mpz_divisible_p(total.get_mpz_t(), P.get_mpz_t());
    }

    Integer residue;
    mpz_powm(residue.get_mpz_t(), A.get_mpz_t(), P.get_mpz_t(), P.get_mpz_t());
    const bool modular = residue == a % p;
    return telescoped && modular;
}

bool is_wieferich(u64 p)
{
    require_prime(p, "wieferich");
    WieferichScratch s;
    return wieferich_holds(p, s);
}

WieferichScanReport wieferich_scan(u64 lo, u64 hi, unsigned threads)
{
    if (lo < 2 || lo > hi)
        throw std::invalid_argument("wieferich scan: need 2 <= lo <= hi");
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    const u64 blocks = (hi - lo) / kScanBlock + 1;
    const bool sieve = hi <= kSieveLimit;
    const auto base = sieve ? small_primes(isqrt(hi)) : std::vector<u64>{};

    struct BlockResult
    {
        u64 tested = 0;
        std::vector<u64> hits;
    };
    std::vector<BlockResult> results(blocks);
    std::atomic<u64> next{0};

    auto worker = [&] {
        WieferichScratch scratch;
        for (u64 b = next++; b < blocks; b = next++) {
            const u64 start = lo + b * kScanBlock;
            const u64 end = (b + 1 == blocks) ? hi : start + kScanBlock - 1;
            const auto primes = sieve ? sieve_segment(start, end, base) : primes_by_test(start, end);
            auto &r = results[b];
            r.tested = primes.size();
            for (u64 p : primes)
                if (wieferich_holds(p, scratch))
                    r.hits.push_back(p);
        }
    };

    const unsigned spawn = static_cast<unsigned>(std::min<u64>(threads, blocks));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < spawn; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    WieferichScanReport report{lo, hi, 0, {}};
    for (const auto &r : results) {
        report.primes_tested += r.tested;
        report.hits.insert(report.hits.end(), r.hits.begin(), r.hits.end());
    }
    return report;
}

PartitionTable partition_numbers(std::size_t order)
{
    std::vector<Integer> p(order + 1);
    p[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Integer acc;
        for (std::size_t j = 1;; ++j) {
            const std::size_t g1 = j * (3 * j - 1) / 2;
            if (g1 > n)
                break;
            const std::size_t g2 = j * (3 * j + 1) / 2;
            Integer term = p[n - g1];
            if (g2 <= n)
                term += p[n - g2];
            if (j % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        p[n] = std::move(acc);
    }
    return PartitionTable{std::move(p)};
}

} // namespace prodex
