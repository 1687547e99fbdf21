#include "qres/core_arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qres {

std::string to_string(wide_int v)
{
    if (v == 0) {
        return "0";
    }
    const bool negative = v < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                     : static_cast<unsigned __int128>(v);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exponent >>= 1U;
    }
    return result;
}

namespace {

// These twelve bases decide every n < 3.3e24, which covers all of uint64.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t base, std::uint64_t d, int r)
{
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t q : kWitnesses) {
        if (n % q == 0) {
            return n == q;
        }
    }
    if (n < 37 * 37) {
        return true;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                       [&](std::uint64_t a) { return strong_probable_prime(n, a, d, r); });
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p)
{
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw DomainError("not an odd prime: " + std::to_string(p));
    }
}

Residue least_nonneg_residue(std::int64_t m, PrimeModulus p)
{
    std::int64_t r = m % p.value();
    if (r < 0) {
        r += p.value();
    }
    return {r, p};
}

Residue mod_pow(std::int64_t base, std::uint64_t exponent, PrimeModulus p)
{
    const auto b = static_cast<std::uint64_t>(least_nonneg_residue(base, p).value);
    const auto m = static_cast<std::uint64_t>(p.value());
    return {static_cast<std::int64_t>(pow_mod(b, exponent, m)), p};
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi)
{
    if (lo < 2 || lo > hi) {
        throw DomainError("primes_in_range requires 2 <= lo <= hi");
    }

    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(hi)));
    while (root * root > hi) {
        --root;
    }
    while ((root + 1) * (root + 1) <= hi) {
        ++root;
    }

    std::vector<char> small(static_cast<std::size_t>(root) + 1, 1);
    std::vector<std::int64_t> base;
    for (std::int64_t i = 2; i <= root; ++i) {
        if (small[i]) {
            base.push_back(i);
            for (std::int64_t j = i * i; j <= root; j += i) {
                small[j] = 0;
            }
        }
    }

    constexpr std::int64_t kSegment = 1 << 18;
    std::vector<std::int64_t> out;
    std::vector<char> mark;
    for (std::int64_t seg_lo = lo; seg_lo <= hi;) {
        const std::int64_t seg_hi = hi - seg_lo < kSegment ? hi : seg_lo + kSegment - 1;
        mark.assign(static_cast<std::size_t>(seg_hi - seg_lo + 1), 1);
        for (std::int64_t q : base) {
            std::int64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
            for (std::int64_t j = start; j <= seg_hi; j += q) {
                mark[j - seg_lo] = 0;
            }
        }
        for (std::int64_t n = seg_lo; n <= seg_hi; ++n) {
            if (mark[n - seg_lo]) {
                out.push_back(n);
            }
        }
        if (seg_hi == hi) {
            break;
        }
        seg_lo = seg_hi + 1;
    }
    return out;
}

std::vector<PrimeModulus> odd_prime_moduli(std::int64_t lo, std::int64_t hi)
{
    std::vector<PrimeModulus> out;
    if (hi < 3 || lo > hi) {
        return out;
    }
    for (std::int64_t q : primes_in_range(std::max<std::int64_t>(lo, 3), hi)) {
        out.emplace_back(q);
    }
    return out;
}

}  // namespace qres
