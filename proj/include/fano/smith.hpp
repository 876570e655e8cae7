#pragma once
#include <gmpxx.h>

#include <vector>

namespace fano {

// Invariant factors d1 | d2 | ... of an integer matrix (nonzero ones only,
// padded with zeros up to min(rows, cols) when the rank is deficient).
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m);

struct AbelianQuotient {
    mpz_class order; // 0 if infinite
    std::vector<mpz_class> invariants;
};

// (Z/2 x Z^r) / (n-th powers), written additively: quotient by n * (whole group).
AbelianQuotient smith_quotient(bool z2_torsion, int free_rank, long n);

} // namespace fano
