#include "qres/residue_statistics.hpp"

#include <algorithm>
#include <numeric>

#include "qres/class_number.hpp"

namespace qres {

namespace {

void require_above_three(PrimeModulus p, const char* what)
{
    if (p.value() <= 3) {
        throw DomainError(std::string(what) + " requires p > 3");
    }
}

void require_three_mod_four(PrimeModulus p, const char* what)
{
    if (p.mod4() != 3 || p.value() == 3) {
        throw DomainError(std::string(what) + " requires p = 3 (mod 4) and p > 3, got "
                          + std::to_string(p.value()));
    }
}

std::int64_t reduce(std::int64_t m, PrimeModulus p)
{
    return least_nonneg_residue(m, p).value;
}

std::int64_t mul(std::int64_t x, std::int64_t y, PrimeModulus p)
{
    return static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(x),
                                             static_cast<std::uint64_t>(y),
                                             static_cast<std::uint64_t>(p.value())));
}

std::int64_t add(std::int64_t x, std::int64_t y, PrimeModulus p)
{
    // x, y in [0, p) and p < 2^63, so x + y cannot overflow uint64.
    const auto s = static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(y);
    const auto m = static_cast<std::uint64_t>(p.value());
    return static_cast<std::int64_t>(s >= m ? s - m : s);
}

std::vector<std::int64_t> sorted_distinct(std::vector<std::int64_t> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int slot(int sign) { return sign > 0 ? 1 : 0; }

}  // namespace

CountSpec::CountSpec(PrimeModulus p, std::int64_t a, std::int64_t b)
    : p_(p), a_(a), b_(reduce(b, p))
{
    if (a <= 1 || a >= p.value()) {
        throw DomainError("CountSpec requires 1 < a < p, got a=" + std::to_string(a));
    }
}

SymbolValue CountSpec::epsilon() const { return legendre_euler(a_, p_); }

SymbolValue CountSpec::delta() const
{
    return legendre_euler(a_, p_) * legendre_euler(1 - a_, p_);
}

std::int64_t count_N(const CountSpec& spec)
{
    const PrimeModulus p = spec.p();
    std::int64_t count = 0;
    std::int64_t sq = 0;
    for (std::int64_t x = 1; x <= p.half(); ++x) {
        sq = add(sq, reduce(2 * x - 1, p), p);
        const std::int64_t lhs = add(sq, spec.b(), p);
        const std::int64_t rhs = add(mul(spec.a(), sq, p), spec.b(), p);
        if (lhs == rhs) {
            throw InvariantViolation("tie {x^2+b}_p == {ax^2+b}_p at p=" + std::to_string(p.value())
                                     + " a=" + std::to_string(spec.a())
                                     + " x=" + std::to_string(x));
        }
        count += lhs > rhs ? 1 : 0;
    }
    return count;
}

std::vector<std::int64_t> count_N_all(PrimeModulus p, std::int64_t b)
{
    const std::int64_t m = p.value();
    const std::int64_t shift = reduce(b, p);
    std::vector<std::int64_t> n(static_cast<std::size_t>(m), 0);
    std::int64_t ties = 0;
    std::int64_t sq = 0;
    for (std::int64_t x = 1; x <= p.half(); ++x) {
        sq = add(sq, reduce(2 * x - 1, p), p);
        const std::int64_t lhs = add(sq, shift, p);
        // {a x^2}_p for successive a, stepping by sq
        std::int64_t ax2 = add(sq, sq, p);
        for (std::int64_t a = 2; a < m; ++a) {
            std::int64_t rhs = ax2 + shift;
            rhs -= rhs >= m ? m : 0;
            n[static_cast<std::size_t>(a)] += lhs > rhs;
            ties += lhs == rhs;
            ax2 += sq;
            ax2 -= ax2 >= m ? m : 0;
        }
    }
    if (ties != 0) {
        throw InvariantViolation("tie {x^2+b}_p == {ax^2+b}_p at p=" + std::to_string(m));
    }
    return n;
}

CountFormula::CountFormula(PrimeModulus p, std::int64_t b)
    : chi_(p), b_(reduce(b, p)), shifted_sum_{0, 0}, plain_sum_{0, 0}
{
    require_above_three(p, "CountFormula");
    for (std::int64_t r = 1; r < p.value(); ++r) {
        const int s = slot(chi_[r]);
        shifted_sum_[s] += add(r, b_, p);
        plain_sum_[s] += r;
    }
}

std::int64_t CountFormula::evaluate(std::int64_t a) const
{
    const PrimeModulus p = chi_.modulus();
    if (a <= 1 || a >= p.value()) {
        throw DomainError("CountFormula::evaluate requires 1 < a < p");
    }
    const int eps = chi_[a];
    const int delta = eps * chi_[p.value() + 1 - a];
    const wide_int pp = p.value();

    wide_int scaled;
    if (eps == 1) {
        scaled = pp * p.half() - plain_sum_[slot(delta)];
    } else {
        scaled = pp * p.half() + shifted_sum_[1] - shifted_sum_[slot(eps)]
                 - plain_sum_[slot(delta * eps)];
    }
    if (scaled % pp != 0) {
        throw InvariantViolation("p N_p(a,b) = " + to_string(scaled) + " not divisible by p="
                                 + std::to_string(p.value()) + " at a=" + std::to_string(a)
                                 + " b=" + std::to_string(b_));
    }
    return static_cast<std::int64_t>(scaled / pp);
}

std::int64_t count_N_formula(const CountSpec& spec)
{
    return CountFormula(spec.p(), spec.b()).evaluate(spec.a());
}

ResidueCountReport compute_S_T(PrimeModulus p, std::int64_t b, bool with_per_a)
{
    require_above_three(p, "compute_S_T");
    const LegendreTable chi(p);
    const std::vector<std::int64_t> n = count_N_all(p, b);

    ResidueCountReport report{p, reduce(b, p), {}, {}, {}};
    std::vector<std::int64_t> s;
    std::vector<std::int64_t> t;
    for (std::int64_t a = 2; a < p.value(); ++a) {
        const std::int64_t value = n[static_cast<std::size_t>(a)];
        const int eps = chi[a];
        (eps == 1 ? s : t).push_back(value);
        if (with_per_a) {
            const int delta = eps * chi[p.value() + 1 - a];
            report.per_a.push_back({a, SymbolValue(eps), SymbolValue(delta), value});
        }
    }
    report.S = sorted_distinct(std::move(s));
    report.T = sorted_distinct(std::move(t));
    return report;
}

std::vector<std::int64_t> closed_form_S(PrimeModulus p)
{
    require_above_three(p, "closed_form_S");
    const std::int64_t m = p.value();
    if (p.mod4() == 1) {
        if ((m - 1) % 4 != 0) {
            throw InvariantViolation("p-1 not divisible by 4");
        }
        return {(m - 1) / 4};
    }
    const std::int64_t h = class_number_dirichlet(p).h;
    const wide_int lo = static_cast<wide_int>(m) - 1 - 2 * static_cast<wide_int>(h);
    const wide_int hi = static_cast<wide_int>(m) - 1 + 2 * static_cast<wide_int>(h);
    if (lo % 4 != 0 || hi % 4 != 0) {
        throw InvariantViolation("(p-1 +- 2h)/4 inexact at p=" + std::to_string(m));
    }
    return {static_cast<std::int64_t>(lo / 4), static_cast<std::int64_t>(hi / 4)};
}

std::int64_t cardinality_prediction(PrimeModulus p)
{
    require_above_three(p, "cardinality_prediction");
    return (3 - legendre_euler(-1, p).sign()) / 2;
}

PatternCounts consecutive_pattern_counts(PrimeModulus p)
{
    require_three_mod_four(p, "consecutive_pattern_counts");
    const LegendreTable chi(p);
    PatternCounts c{0, 0, 0};
    for (std::int64_t x = 1; x <= p.value() - 2; ++x) {
        const int here = chi[x];
        const int next = chi[x + 1];
        c.rr += here == 1 && next == 1;
        c.nr += here == -1 && next == 1;
        c.rn += here == 1 && next == -1;
    }
    return c;
}

std::int64_t linear_shift_count(PrimeModulus p, std::int64_t a, std::int64_t b)
{
    const std::int64_t ar = reduce(a, p);
    if (ar == 0 || ar == 1) {
        throw DomainError("linear_shift_count requires a != 0, 1 (mod p)");
    }
    std::int64_t v = reduce(b, p);  // {a x + b}_p at x = 0
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < p.value(); ++x) {
        count += v > x;
        v = add(v, ar, p);
    }
    return count;
}

SymbolPair sun2020_check(std::int64_t n, std::int64_t a)
{
    if (n < 1 || n % 2 == 0) {
        throw DomainError("sun2020_check requires odd n >= 1");
    }
    auto mod_n = [n](std::int64_t v) {
        std::int64_t r = v % n;
        return r < 0 ? r + n : r;
    };
    const std::int64_t ar = mod_n(a);
    const std::int64_t one_minus = mod_n(1 - mod_n(a));
    if (std::gcd(ar, n) != 1 || std::gcd(one_minus, n) != 1) {
        throw DomainError("sun2020_check requires gcd(a(1-a), n) = 1");
    }
    const auto un = static_cast<std::uint64_t>(n);
    std::uint64_t count = 0;
    std::uint64_t v = 0;
    for (std::int64_t k = 1; k <= (n - 1) / 2; ++k) {
        v += static_cast<std::uint64_t>(ar);
        v -= v >= un ? un : 0;
        count += v > static_cast<std::uint64_t>(k);
    }
    const auto product = mul_mod(mul_mod(2 % un, static_cast<std::uint64_t>(ar), un),
                                 static_cast<std::uint64_t>(one_minus), un);
    return {SymbolValue::parity_of(count), jacobi(static_cast<std::int64_t>(product), n)};
}

std::uint64_t count_inversions(std::span<const std::int64_t> values)
{
    std::vector<std::int64_t> a(values.begin(), values.end());
    std::vector<std::int64_t> buf(a.size());
    const std::size_t n = a.size();
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo;
            std::size_t j = mid;
            std::size_t k = lo;
            while (i < mid && j < hi) {
                if (a[j] < a[i]) {
                    // a[j] is smaller than every remaining left element
                    inversions += mid - i;
                    buf[k++] = a[j++];
                } else {
                    buf[k++] = a[i++];
                }
            }
            while (i < mid) {
                buf[k++] = a[i++];
            }
            while (j < hi) {
                buf[k++] = a[j++];
            }
        }
        a.swap(buf);
    }
    return inversions;
}

InversionParity half_range_inversion_check(PrimeModulus p)
{
    require_three_mod_four(p, "half_range_inversion_check");
    std::vector<std::int64_t> squares;
    squares.reserve(static_cast<std::size_t>(p.half()));
    std::int64_t sq = 0;
    for (std::int64_t i = 1; i <= p.half(); ++i) {
        sq = add(sq, reduce(2 * i - 1, p), p);
        squares.push_back(sq);
    }
    const std::uint64_t inv = count_inversions(squares);

    SymbolValue predicted = SymbolValue::plus();
    if (p.mod8() == 7) {
        const std::int64_t h = class_number_dirichlet(p).h;
        predicted = SymbolValue::parity_of(static_cast<std::uint64_t>((h + 1) / 2));
    }
    return {inv, SymbolValue::parity_of(inv), predicted};
}

int fractional_identity_check(PrimeModulus p, std::int64_t a, std::int64_t b, std::int64_t x)
{
    const std::int64_t ar = reduce(a, p);
    if (ar == 0 || ar == 1) {
        throw DomainError("fractional_identity_check requires a != 0, 1 (mod p)");
    }
    const std::int64_t xr = reduce(x, p);
    if (xr == 0) {
        throw DomainError("fractional_identity_check requires p not dividing x");
    }
    const std::int64_t br = reduce(b, p);
    const std::int64_t x2 = mul(xr, xr, p);
    const std::int64_t plain = add(x2, br, p);
    const std::int64_t scaled = add(mul(ar, x2, p), br, p);
    const std::int64_t rest = mul(reduce(1 - ar, p), x2, p);

    const wide_int value = static_cast<wide_int>(scaled) + rest - plain;
    const int direct = plain > scaled ? 0 : 1;
    if (value != 0 && value != p.value()) {
        throw InvariantViolation("fractional identity value " + to_string(value)
                                 + " is neither 0 nor p");
    }
    const int via_identity = value == 0 ? 0 : 1;
    if (via_identity != direct) {
        throw InvariantViolation("fractional identity disagrees with direct comparison");
    }
    return via_identity;
}

}  // namespace qres
