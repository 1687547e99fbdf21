#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qres/symbols.hpp"

using namespace qres;

namespace {

// Legendre symbol by listing the squares.
int legendre_by_squares(std::int64_t a, std::int64_t p)
{
    const std::int64_t r = ((a % p) + p) % p;
    if (r == 0) {
        return 0;
    }
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == r) {
            return 1;
        }
    }
    return -1;
}

// Jacobi symbol as the product of Legendre symbols over the factorisation of n.
int jacobi_by_factoring(std::int64_t a, std::int64_t n)
{
    int s = 1;
    std::int64_t m = n;
    for (std::int64_t q = 3; q * q <= m; q += 2) {
        while (m % q == 0) {
            s *= legendre_by_squares(a, q);
            m /= q;
        }
    }
    if (m > 1) {
        s *= legendre_by_squares(a, m);
    }
    return s;
}

}  // namespace

TEST(LegendreEuler, Examples)
{
    EXPECT_EQ(legendre_euler(1, PrimeModulus(5)), SymbolValue::plus());
    EXPECT_EQ(legendre_euler(10, PrimeModulus(5)), SymbolValue::zero());
    EXPECT_EQ(legendre_euler(2, PrimeModulus(7)), SymbolValue::plus());
    EXPECT_EQ(legendre_euler(3, PrimeModulus(7)), SymbolValue::minus());
    EXPECT_EQ(legendre_euler(-1, PrimeModulus(7)), SymbolValue::minus());
    EXPECT_EQ(legendre_euler(-1, PrimeModulus(13)), SymbolValue::plus());
}

TEST(Jacobi, Examples)
{
    EXPECT_EQ(jacobi(-4, 9), SymbolValue::plus());
    EXPECT_EQ(jacobi(-4, 9).sign(), jacobi_by_factoring(-4, 9));
    EXPECT_EQ(jacobi(3, 9), SymbolValue::zero());
    EXPECT_EQ(jacobi(5, 1), SymbolValue::plus());
    EXPECT_EQ(jacobi(0, 1), SymbolValue::plus());
    EXPECT_EQ(jacobi(0, 3), SymbolValue::zero());
}

TEST(Jacobi, RejectsEvenOrNonpositiveModulus)
{
    EXPECT_THROW(jacobi(3, 8), DomainError);
    EXPECT_THROW(jacobi(3, 0), DomainError);
    EXPECT_THROW(jacobi(3, -7), DomainError);
}

TEST(Jacobi, MatchesFactorisationOracle)
{
    for (std::int64_t n = 1; n <= 301; n += 2) {
        for (std::int64_t a = -n - 3; a <= 2 * n; ++a) {
            ASSERT_EQ(jacobi(a, n).sign(), jacobi_by_factoring(a, n)) << a << "/" << n;
        }
    }
}

TEST(Jacobi, NegativeOneFollowsSupplement)
{
    for (std::int64_t n = 1; n < 2000; n += 2) {
        ASSERT_EQ(jacobi(-1, n).sign(), ((n - 1) / 2) % 2 == 0 ? 1 : -1) << n;
    }
}

TEST(Jacobi, MultiplicativityAndPeriodicityProperty)
{
    std::mt19937_64 gen(7);
    for (int i = 0; i < 20'000; ++i) {
        const auto n = static_cast<std::int64_t>(gen() % 1'000'000) * 2 + 1;
        const auto a = static_cast<std::int64_t>(gen() % 2'000'000'000) - 1'000'000'000;
        const auto b = static_cast<std::int64_t>(gen() % 2'000'000'000) - 1'000'000'000;
        ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n));
        ASSERT_EQ(jacobi(a + n, n), jacobi(a, n));
    }
}

TEST(Jacobi, LargeModulus)
{
    const std::int64_t p = 9'223'372'036'854'775'783LL;
    for (std::int64_t a : {2LL, 3LL, 5LL, -1LL, 1'234'567'891LL}) {
        EXPECT_EQ(jacobi(a, p), legendre_euler(a, PrimeModulus(p))) << a;
    }
}

TEST(GaussLemma, Examples)
{
    EXPECT_EQ(legendre_gauss_lemma(1, PrimeModulus(11)), SymbolValue::plus());
    EXPECT_EQ(legendre_gauss_lemma(2, PrimeModulus(7)), SymbolValue::plus());
    EXPECT_EQ(legendre_gauss_lemma(3, PrimeModulus(7)), SymbolValue::minus());
    EXPECT_EQ(legendre_gauss_lemma(3, PrimeModulus(7)), legendre_euler(3, PrimeModulus(7)));
}

TEST(GaussLemma, RejectsMultiplesOfP)
{
    EXPECT_THROW(legendre_gauss_lemma(0, PrimeModulus(7)), DomainError);
    EXPECT_THROW(legendre_gauss_lemma(14, PrimeModulus(7)), DomainError);
}

TEST(Symbols, ThreeRoutesAgreeWithSquaresOracle)
{
    for (PrimeModulus p : odd_prime_moduli(3, 400)) {
        for (std::int64_t a = 1; a < p.value(); ++a) {
            const int expected = legendre_by_squares(a, p.value());
            ASSERT_EQ(legendre_euler(a, p).sign(), expected);
            ASSERT_EQ(jacobi(a, p.value()).sign(), expected);
            ASSERT_EQ(legendre_gauss_lemma(a, p).sign(), expected);
        }
    }
}

TEST(Symbols, HalfOfNonzeroResiduesAreSquares)
{
    for (PrimeModulus p : odd_prime_moduli(3, 2000)) {
        std::int64_t plus = 0;
        for (std::int64_t a = 1; a < p.value(); ++a) {
            plus += legendre_euler(a, p) == SymbolValue::plus();
        }
        ASSERT_EQ(plus, p.half()) << p.value();
    }
}

TEST(LegendreTable, MatchesEuler)
{
    for (PrimeModulus p : odd_prime_moduli(3, 1000)) {
        const LegendreTable chi(p);
        for (std::int64_t a = -p.value(); a < 2 * p.value(); ++a) {
            ASSERT_EQ(chi(a), legendre_euler(a, p));
        }
    }
}

TEST(SymbolValue, RejectsOutOfRange)
{
    EXPECT_THROW(SymbolValue(2), std::invalid_argument);
    EXPECT_EQ(SymbolValue::parity_of(3), SymbolValue::minus());
    EXPECT_EQ(SymbolValue::parity_of(0), SymbolValue::plus());
    EXPECT_EQ(-SymbolValue::plus(), SymbolValue::minus());
}
