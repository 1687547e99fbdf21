#pragma once

// Legendre and Jacobi symbols. The Legendre symbol has three independent
// routes (Euler's criterion, binary Jacobi reduction, Gauss's lemma) so
// each can be checked against the others.

#include <cstdint>
#include <vector>

#include "qres/core_arith.hpp"

namespace qres {

/// A symbol value in {-1, 0, +1}.
class SymbolValue {
public:
    constexpr SymbolValue() = default;
    constexpr explicit SymbolValue(int sign) : sign_(sign)
    {
        if (sign < -1 || sign > 1) {
            throw std::invalid_argument("symbol value must be -1, 0 or +1");
        }
    }

    static constexpr SymbolValue plus() { return SymbolValue(1); }
    static constexpr SymbolValue minus() { return SymbolValue(-1); }
    static constexpr SymbolValue zero() { return SymbolValue(0); }

    /// (-1)^count
    static constexpr SymbolValue parity_of(std::uint64_t count)
    {
        return SymbolValue((count & 1U) ? -1 : 1);
    }

    constexpr int sign() const noexcept { return sign_; }

    friend constexpr SymbolValue operator*(SymbolValue x, SymbolValue y)
    {
        return SymbolValue(x.sign_ * y.sign_);
    }
    friend constexpr SymbolValue operator-(SymbolValue x) { return SymbolValue(-x.sign_); }
    friend constexpr bool operator==(SymbolValue, SymbolValue) = default;

private:
    int sign_ = 0;
};

SymbolValue legendre_euler(std::int64_t a, PrimeModulus p);

/// Jacobi symbol (a/n) for odd n >= 1; any sign of a. jacobi(a, 1) == +1.
SymbolValue jacobi(std::int64_t a, std::int64_t n);

/// (-1)^{#{1 <= k <= (p-1)/2 : {ka}_p > p/2}}. Plain O(p) count; p must not divide a.
SymbolValue legendre_gauss_lemma(std::int64_t a, PrimeModulus p);

/// The quadratic character mod p tabulated for 0..p-1 by squaring, so that
/// sweeps over all residues cost O(p) instead of O(p log p).
class LegendreTable {
public:
    explicit LegendreTable(PrimeModulus p);

    PrimeModulus modulus() const noexcept { return p_; }

    /// Symbol of an already-reduced residue r in [0, p).
    int operator[](std::int64_t r) const noexcept { return signs_[static_cast<std::size_t>(r)]; }

    SymbolValue operator()(std::int64_t a) const
    {
        return SymbolValue(signs_[static_cast<std::size_t>(least_nonneg_residue(a, p_).value)]);
    }

private:
    PrimeModulus p_;
    std::vector<std::int8_t> signs_;
};

}  // namespace qres
