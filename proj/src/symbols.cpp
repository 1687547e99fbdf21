#include "qres/symbols.hpp"

#include <utility>

namespace qres {

SymbolValue legendre_euler(std::int64_t a, PrimeModulus p)
{
    const std::int64_t r = least_nonneg_residue(a, p).value;
    if (r == 0) {
        return SymbolValue::zero();
    }
    const std::int64_t e = mod_pow(r, static_cast<std::uint64_t>(p.half()), p).value;
    if (e == 1) {
        return SymbolValue::plus();
    }
    if (e == p.value() - 1) {
        return SymbolValue::minus();
    }
    throw InvariantViolation("Euler criterion produced " + std::to_string(e) + " mod "
                             + std::to_string(p.value()));
}

SymbolValue jacobi(std::int64_t a, std::int64_t n)
{
    if (n < 1 || n % 2 == 0) {
        throw DomainError("jacobi requires odd n >= 1, got " + std::to_string(n));
    }
    // Reducing a mod n first is the standard extension to negative a:
    // it agrees with (-1/n) = (-1)^{(n-1)/2} by periodicity.
    std::uint64_t m = static_cast<std::uint64_t>(n);
    std::int64_t r = a % n;
    if (r < 0) {
        r += n;
    }
    std::uint64_t x = static_cast<std::uint64_t>(r);
    int s = 1;
    while (x != 0) {
        const int twos = __builtin_ctzll(x);
        x >>= twos;
        // (2/m) = -1 iff m = 3, 5 (mod 8)
        if ((twos & 1) && ((m & 7U) == 3 || (m & 7U) == 5)) {
            s = -s;
        }
        // reciprocity: flip iff both are 3 (mod 4)
        if ((x & 3U) == 3 && (m & 3U) == 3) {
            s = -s;
        }
        std::swap(x, m);
        x %= m;
    }
    return SymbolValue(m == 1 ? s : 0);
}

SymbolValue legendre_gauss_lemma(std::int64_t a, PrimeModulus p)
{
    const std::int64_t r = least_nonneg_residue(a, p).value;
    if (r == 0) {
        throw DomainError("Gauss's lemma requires p not dividing a");
    }
    std::uint64_t count = 0;
    for (std::int64_t k = 1; k <= p.half(); ++k) {
        // {ka}_p > p/2  <=>  2{ka}_p > p
        if (2 * static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(k),
                                                  static_cast<std::uint64_t>(r),
                                                  static_cast<std::uint64_t>(p.value())))
            > p.value()) {
            ++count;
        }
    }
    return SymbolValue::parity_of(count);
}

LegendreTable::LegendreTable(PrimeModulus p)
    : p_(p), signs_(static_cast<std::size_t>(p.value()), -1)
{
    signs_[0] = 0;
    // x^2 for x = 1..(p-1)/2 hits each quadratic residue exactly once.
    std::int64_t sq = 0;
    for (std::int64_t x = 1; x <= p.half(); ++x) {
        sq += 2 * x - 1;
        while (sq >= p.value()) {
            sq -= p.value();
        }
        signs_[static_cast<std::size_t>(sq)] = 1;
    }
}

}  // namespace qres
