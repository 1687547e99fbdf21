#pragma once

// Exact modular arithmetic over 64-bit moduli, deterministic primality and
// prime-range generation.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qres {

/// Signed double-width integer for sums and products bounded by p^2.
using wide_int = __int128;

std::string to_string(wide_int v);

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a computed value contradicts an identity that must hold.
/// Seeing one means either a bug or a false theorem.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

bool is_prime(std::uint64_t n);

/// An odd prime p < 2^63. Construction runs the primality test.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }
    std::int64_t half() const noexcept { return (p_ - 1) / 2; }
    int mod4() const noexcept { return static_cast<int>(p_ % 4); }
    int mod8() const noexcept { return static_cast<int>(p_ % 8); }

    friend bool operator==(PrimeModulus, PrimeModulus) = default;
    friend auto operator<=>(PrimeModulus, PrimeModulus) = default;

private:
    std::int64_t p_;
};

/// {m}_p: a value in [0, p) tagged with its modulus.
struct Residue {
    std::int64_t value;
    PrimeModulus modulus;

    friend bool operator==(const Residue&, const Residue&) = default;
};

Residue least_nonneg_residue(std::int64_t m, PrimeModulus p);

Residue mod_pow(std::int64_t base, std::uint64_t exponent, PrimeModulus p);

/// Raw kernels on unsigned moduli; `m` must be nonzero and < 2^63.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// All primes in [lo, hi], ascending. Requires 2 <= lo <= hi.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

/// Odd primes in [lo, hi] as validated moduli (2 is skipped).
std::vector<PrimeModulus> odd_prime_moduli(std::int64_t lo, std::int64_t hi);

}  // namespace qres
