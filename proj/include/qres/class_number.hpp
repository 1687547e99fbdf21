#pragma once

// Class number h(-p) of Q(sqrt(-p)) for primes p = 3 (mod 4), p > 3, by the
// Dirichlet weighted character sum and by counting reduced binary forms.

#include <cstdint>

#include "qres/core_arith.hpp"
#include "qres/symbols.hpp"

namespace qres {

struct ClassNumberResult {
    PrimeModulus p;
    wide_int weighted_sum;  // sum_{z=1}^{p-1} z (z/p), equal to -p h
    std::int64_t h;
};

/// h(-p) = -(1/p) sum z (z/p). Throws DomainError unless p = 3 (mod 4), p > 3.
ClassNumberResult class_number_dirichlet(PrimeModulus p);

/// Number of reduced forms (A, B, C) with B^2 - 4AC = -p:
/// |B| <= A <= C, and B >= 0 whenever |B| == A or A == C.
std::int64_t class_number_forms_oracle(PrimeModulus p);

/// Sum of z in [1, p-1] with (z/p) == sign, sign in {-1, +1}. Requires p > 3.
wide_int qr_sum(PrimeModulus p, SymbolValue sign);

}  // namespace qres
