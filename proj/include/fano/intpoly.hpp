#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace fano::zp {

// dense integer polynomial, c[0] + c[1] x + ...; zero == empty after trim
using ZPoly = std::vector<mpz_class>;

ZPoly trim(ZPoly f);
int deg(const ZPoly& f);
bool is_zero(const ZPoly& f);
ZPoly add(const ZPoly& f, const ZPoly& g);
ZPoly sub(const ZPoly& f, const ZPoly& g);
ZPoly mul(const ZPoly& f, const ZPoly& g);
ZPoly scale(const ZPoly& f, const mpz_class& c);
mpz_class content(const ZPoly& f);
ZPoly primitive(const ZPoly& f);
mpz_class eval(const ZPoly& f, const mpz_class& x);

// primitive gcd via primitive pseudo-remainder sequence (sign-normalized,
// positive leading coefficient)
ZPoly gcd(ZPoly f, ZPoly g);

// Sylvester resultant with declared degrees m >= deg f, n >= deg g (the
// binary-form convention: zero leading coefficients allowed). Computed by
// Chinese remaindering of word-size modular determinants; exact.
mpz_class sylvester_resultant(const ZPoly& f, const ZPoly& g, int m, int n);

// prime factors of |n| by trial division; the flag reports whether the
// leftover cofactor (> bound^2) was certified prime by a probable-prime test
struct Factorization {
    std::vector<mpz_class> primes;
    bool complete = true; // false if a composite cofactor could not be split
    mpz_class cofactor = 1;
};
Factorization factor_for_candidates(const mpz_class& n, unsigned long trial_bound = 1000000);

} // namespace fano::zp
