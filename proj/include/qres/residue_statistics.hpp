#pragma once

// N_p(a,b) = #{1 <= x <= (p-1)/2 : {x^2+b}_p > {ax^2+b}_p}, the value sets S
// and T it takes over residues and nonresidues a, and the companion identities
// that pin those sets down. Every quantity has a brute-force route and a
// closed-form route.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qres/core_arith.hpp"
#include "qres/symbols.hpp"

namespace qres {

/// A validated (p, a, b) with 1 < a < p and b reduced into [0, p).
class CountSpec {
public:
    CountSpec(PrimeModulus p, std::int64_t a, std::int64_t b);

    PrimeModulus p() const noexcept { return p_; }
    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }

    /// (a/p)
    SymbolValue epsilon() const;
    /// (a(1-a)/p)
    SymbolValue delta() const;

private:
    PrimeModulus p_;
    std::int64_t a_;
    std::int64_t b_;
};

/// Direct enumeration of the definition.
std::int64_t count_N(const CountSpec& spec);

/// Direct enumeration for every a in [2, p-1] at once; entry a holds
/// N_p(a,b), entries 0 and 1 are unused and zero.
std::vector<std::int64_t> count_N_all(PrimeModulus p, std::int64_t b);

/// Evaluates N_p(a,b) from residue sums instead of counting:
///
///   p N = p(p-1)/2 + sum_{(x/p)=1} {x+b}_p - sum_{(y/p)=eps} {y+b}_p
///         - sum_{(z/p)=delta*eps} z
///
/// with eps = (a/p), delta = (a(1-a)/p). For eps = +1 the shifted sums cancel
/// and N = (p-1)/2 - (1/p) sum_{(z/p)=delta} z. Sums are built once per (p, b);
/// each evaluation is then O(1).
class CountFormula {
public:
    CountFormula(PrimeModulus p, std::int64_t b);

    std::int64_t evaluate(std::int64_t a) const;

    PrimeModulus modulus() const noexcept { return chi_.modulus(); }
    std::int64_t shift() const noexcept { return b_; }
    const LegendreTable& character() const noexcept { return chi_; }

private:
    LegendreTable chi_;
    std::int64_t b_;
    wide_int shifted_sum_[2];  // [0]: nonresidues, [1]: residues
    wide_int plain_sum_[2];
};

std::int64_t count_N_formula(const CountSpec& spec);

struct PerAEntry {
    std::int64_t a;
    SymbolValue epsilon;
    SymbolValue delta;
    std::int64_t n;
};

struct ResidueCountReport {
    PrimeModulus p;
    std::int64_t b;  // normalized into [0, p)
    std::vector<std::int64_t> S;  // sorted, distinct
    std::vector<std::int64_t> T;
    std::vector<PerAEntry> per_a;  // filled only on request
};

/// Requires p > 3.
ResidueCountReport compute_S_T(PrimeModulus p, std::int64_t b, bool with_per_a = false);

/// {(p-1)/4} for p = 1 (mod 4); {(p-1-2h)/4, (p-1+2h)/4} with h = h(-p) otherwise.
std::vector<std::int64_t> closed_form_S(PrimeModulus p);

/// (3 - (-1/p)) / 2
std::int64_t cardinality_prediction(PrimeModulus p);

struct PatternCounts {
    std::int64_t rr;  // (x/p) = (x+1/p) = +1
    std::int64_t nr;  // (y/p) = -1, (y+1/p) = +1
    std::int64_t rn;  // (z/p) = +1, (z+1/p) = -1

    friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

/// Counts over x in [1, p-2]. Requires p = 3 (mod 4), p > 3.
PatternCounts consecutive_pattern_counts(PrimeModulus p);

/// #{x in [0, p-1] : {ax+b}_p > x}. Requires a != 0, 1 (mod p).
std::int64_t linear_shift_count(PrimeModulus p, std::int64_t a, std::int64_t b);

struct SymbolPair {
    SymbolValue lhs;
    SymbolValue rhs;

    friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
};

/// lhs = (-1)^{#{1 <= k <= (n-1)/2 : {ka}_n > k}}, rhs = (2a(1-a)/n).
/// n odd and positive, gcd(a(1-a), n) = 1.
SymbolPair sun2020_check(std::int64_t n, std::int64_t a);

/// Number of pairs i < j with values[i] > values[j], by merge counting.
std::uint64_t count_inversions(std::span<const std::int64_t> values);

struct InversionParity {
    std::uint64_t inversions;
    SymbolValue parity;     // (-1)^inversions over ({1^2}_p, ..., {((p-1)/2)^2}_p)
    SymbolValue predicted;  // +1 for p = 3 (mod 8), (-1)^{(h(-p)+1)/2} for p = 7 (mod 8)
};

/// Requires p = 3 (mod 4), p > 3.
InversionParity half_range_inversion_check(PrimeModulus p);

/// ({ax^2+b}_p + {(1-a)x^2}_p - {x^2+b}_p) / p, which is 0 exactly when
/// {x^2+b}_p > {ax^2+b}_p and 1 otherwise. Requires a != 0, 1 and x != 0 (mod p).
int fractional_identity_check(PrimeModulus p, std::int64_t a, std::int64_t b, std::int64_t x);

}  // namespace qres
