#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "qres/core_arith.hpp"

using namespace qres;

namespace {

bool trial_division_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(LeastNonnegResidue, Examples)
{
    const PrimeModulus seven(7);
    EXPECT_EQ(least_nonneg_residue(4 * 2 * 2, seven).value, 2);
    EXPECT_EQ(least_nonneg_residue(0, PrimeModulus(5)).value, 0);
    EXPECT_EQ(least_nonneg_residue(-3, seven).value, 4);
}

TEST(LeastNonnegResidue, RangeAndCongruenceProperty)
{
    std::mt19937_64 gen(1);
    const PrimeModulus p(1'000'003);
    for (int i = 0; i < 10'000; ++i) {
        const auto m = static_cast<std::int64_t>(gen() >> 2) - (std::int64_t{1} << 61);
        const std::int64_t r = least_nonneg_residue(m, p).value;
        ASSERT_GE(r, 0);
        ASSERT_LT(r, p.value());
        ASSERT_EQ((m - r) % p.value(), 0);
        const std::int64_t k = static_cast<std::int64_t>(gen() % 2001) - 1000;
        ASSERT_EQ(least_nonneg_residue(m + k * p.value(), p).value, r);
    }
}

TEST(LeastNonnegResidue, ExtremeInputs)
{
    const PrimeModulus p(9'223'372'036'854'775'783LL);  // largest prime below 2^63
    // p = 2^63 - 25, so -2^63 = -25 and 2^63 - 1 = 24 (mod p)
    EXPECT_EQ(least_nonneg_residue(std::numeric_limits<std::int64_t>::min(), p).value,
              p.value() - 25);
    EXPECT_EQ(least_nonneg_residue(std::numeric_limits<std::int64_t>::max(), p).value, 24);
}

TEST(ModPow, Examples)
{
    const PrimeModulus seven(7);
    EXPECT_EQ(mod_pow(2, 3, seven).value, 1);
    EXPECT_EQ(mod_pow(5, 0, seven).value, 1);
    // squares mod 7 are {1, 2, 4}; 3 is a nonresidue so 3^3 = -1
    EXPECT_EQ(mod_pow(3, 3, seven).value, 6);
    EXPECT_EQ(mod_pow(-1, 3, seven).value, 6);
}

TEST(ModPow, ExponentAdditivityProperty)
{
    std::mt19937_64 gen(2);
    const std::vector<std::int64_t> moduli = {7, 1'000'003, 2'305'843'009'213'693'951LL,
                                              9'223'372'036'854'775'783LL};
    for (std::int64_t m : moduli) {
        const PrimeModulus p(m);
        for (int i = 0; i < 2000; ++i) {
            const auto a = static_cast<std::int64_t>(gen() >> 1);
            const std::uint64_t e1 = gen() % 100'000;
            const std::uint64_t e2 = gen();
            const auto lhs = mod_pow(a, e1 + e2 % 100'000, p).value;
            const auto rhs =
                mul_mod(static_cast<std::uint64_t>(mod_pow(a, e1, p).value),
                        static_cast<std::uint64_t>(mod_pow(a, e2 % 100'000, p).value),
                        static_cast<std::uint64_t>(m));
            ASSERT_EQ(static_cast<std::uint64_t>(lhs), rhs);
        }
    }
}

TEST(ModPow, FermatOnLargePrime)
{
    const PrimeModulus p(9'223'372'036'854'775'783LL);
    for (std::int64_t a : {2LL, 3LL, 123456789LL, -5LL}) {
        EXPECT_EQ(mod_pow(a, static_cast<std::uint64_t>(p.value() - 1), p).value, 1);
    }
}

TEST(IsPrime, Examples)
{
    EXPECT_TRUE(is_prime(7));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(3481));  // 59^2
    EXPECT_TRUE(is_prime(2));
}

TEST(IsPrime, AgreesWithTrialDivisionBelow100k)
{
    for (std::uint64_t n = 0; n < 100'000; ++n) {
        ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
    }
}

TEST(IsPrime, StrongPseudoprimesAndLargeValues)
{
    // strong pseudoprimes to several small bases
    EXPECT_FALSE(is_prime(2047));
    EXPECT_FALSE(is_prime(3'215'031'751ULL));
    EXPECT_FALSE(is_prime(3'825'123'056'546'413'051ULL));
    EXPECT_TRUE(is_prime(18'446'744'073'709'551'557ULL));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(18'446'744'073'709'551'615ULL));
    EXPECT_TRUE(is_prime(9'223'372'036'854'775'783ULL));
    EXPECT_FALSE(is_prime(4'294'967'297ULL));  // 641 * 6700417
    EXPECT_FALSE(is_prime(1'000'003ULL * 1'000'033ULL));
}

TEST(PrimeModulus, RejectsNonOddPrimes)
{
    EXPECT_THROW(PrimeModulus(2), DomainError);
    EXPECT_THROW(PrimeModulus(1), DomainError);
    EXPECT_THROW(PrimeModulus(-7), DomainError);
    EXPECT_THROW(PrimeModulus(9), DomainError);
    EXPECT_NO_THROW(PrimeModulus(3));
    EXPECT_EQ(PrimeModulus(23).half(), 11);
    EXPECT_EQ(PrimeModulus(23).mod4(), 3);
    EXPECT_EQ(PrimeModulus(23).mod8(), 7);
}

TEST(PrimesInRange, Examples)
{
    EXPECT_EQ(primes_in_range(5, 13), (std::vector<std::int64_t>{5, 7, 11, 13}));
    EXPECT_TRUE(primes_in_range(24, 28).empty());
    EXPECT_EQ(primes_in_range(2, 2), (std::vector<std::int64_t>{2}));
}

TEST(PrimesInRange, CountTo10k)
{
    std::size_t count = 0;
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        count += is_prime(n) ? 1 : 0;
    }
    ASSERT_EQ(count, 1229U);
    EXPECT_EQ(primes_in_range(2, 10'000).size(), count);
}

TEST(PrimesInRange, MatchesIsPrimeAcrossSegments)
{
    // spans several sieve segments and starts mid-way
    const std::int64_t lo = 999'000;
    const std::int64_t hi = 1'600'000;
    const auto primes = primes_in_range(lo, hi);
    std::size_t idx = 0;
    for (std::int64_t n = lo; n <= hi; ++n) {
        if (is_prime(static_cast<std::uint64_t>(n))) {
            ASSERT_LT(idx, primes.size());
            ASSERT_EQ(primes[idx++], n);
        }
    }
    EXPECT_EQ(idx, primes.size());
}

TEST(PrimesInRange, RejectsBadRange)
{
    EXPECT_THROW(primes_in_range(1, 10), DomainError);
    EXPECT_THROW(primes_in_range(10, 5), DomainError);
}

TEST(OddPrimeModuli, SkipsTwo)
{
    const auto ps = odd_prime_moduli(2, 11);
    ASSERT_EQ(ps.size(), 4U);
    EXPECT_EQ(ps.front().value(), 3);
    EXPECT_EQ(ps.back().value(), 11);
}

TEST(WideInt, ToString)
{
    EXPECT_EQ(to_string(wide_int{0}), "0");
    EXPECT_EQ(to_string(wide_int{-69}), "-69");
    EXPECT_EQ(to_string(static_cast<wide_int>(std::numeric_limits<std::int64_t>::max()) * 4),
              "36893488147419103228");
}
