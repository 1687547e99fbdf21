#include "qres/class_number.hpp"

#include <numeric>

namespace qres {

namespace {

void require_three_mod_four(PrimeModulus p)
{
    if (p.mod4() != 3 || p.value() == 3) {
        throw DomainError("class number routes need p = 3 (mod 4) and p > 3, got "
                          + std::to_string(p.value()));
    }
}

}  // namespace

ClassNumberResult class_number_dirichlet(PrimeModulus p)
{
    require_three_mod_four(p);
    const LegendreTable chi(p);
    wide_int sum = 0;
    for (std::int64_t z = 1; z < p.value(); ++z) {
        sum += static_cast<wide_int>(z) * chi[z];
    }
    const wide_int pp = p.value();
    if (sum % pp != 0) {
        throw InvariantViolation("weighted sum " + to_string(sum) + " not divisible by p="
                                 + std::to_string(p.value()));
    }
    const wide_int h = -sum / pp;
    if (h <= 0) {
        throw InvariantViolation("weighted sum " + to_string(sum) + " gives nonpositive h");
    }
    return {p, sum, static_cast<std::int64_t>(h)};
}

std::int64_t class_number_forms_oracle(PrimeModulus p)
{
    require_three_mod_four(p);
    const wide_int disc = p.value();  // |B^2 - 4AC|
    std::int64_t count = 0;
    for (wide_int a = 1; 3 * a * a <= disc; ++a) {
        // -p is odd, so B must be odd.
        for (wide_int b = -a; b <= a; ++b) {
            if ((b & 1) == 0) {
                continue;
            }
            const wide_int num = b * b + disc;
            if (num % (4 * a) != 0) {
                continue;
            }
            const wide_int c = num / (4 * a);
            if (c < a) {
                continue;
            }
            const bool boundary = (b < 0 ? -b : b) == a || a == c;
            if (boundary && b < 0) {
                continue;
            }
            const auto g = std::gcd(std::gcd(static_cast<std::int64_t>(a),
                                             static_cast<std::int64_t>(b < 0 ? -b : b)),
                                    static_cast<std::int64_t>(c));
            if (g != 1) {
                throw InvariantViolation("imprimitive form of prime discriminant");
            }
            ++count;
        }
    }
    return count;
}

wide_int qr_sum(PrimeModulus p, SymbolValue sign)
{
    if (p.value() <= 3) {
        throw DomainError("qr_sum requires p > 3");
    }
    if (sign == SymbolValue::zero()) {
        throw DomainError("qr_sum sign must be +1 or -1");
    }
    const LegendreTable chi(p);
    wide_int sum = 0;
    for (std::int64_t z = 1; z < p.value(); ++z) {
        if (chi[z] == sign.sign()) {
            sum += z;
        }
    }
    return sum;
}

}  // namespace qres
