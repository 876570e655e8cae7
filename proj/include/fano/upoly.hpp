#pragma once
#include "fano/field.hpp"

#include <utility>
#include <vector>

// Dense univariate polynomials over an Elem field, coefficients c[0] + c[1] x + ...
// The zero polynomial is the empty vector; nonzero polynomials have a nonzero
// leading coefficient after trim().
namespace fano::up {

using Poly = std::vector<Elem>;

Poly trim(Poly f);
int deg(const Poly& f); // -1 for zero
bool is_zero(const Poly& f);
Poly constant(const FieldPtr& k, const Elem& c);
Poly x_power(const FieldPtr& k, unsigned n);

Poly add(const FieldPtr& k, const Poly& f, const Poly& g);
Poly sub(const FieldPtr& k, const Poly& f, const Poly& g);
Poly mul(const FieldPtr& k, const Poly& f, const Poly& g);
Poly scale(const Poly& f, const Elem& c);
std::pair<Poly, Poly> divmod(const FieldPtr& k, Poly num, const Poly& den);
Poly monic(const Poly& f);
Poly gcd_monic(const FieldPtr& k, Poly f, Poly g);
Elem eval(const FieldPtr& k, const Poly& f, const Elem& x);
Poly deriv(const FieldPtr& k, const Poly& f);
Poly powmod(const FieldPtr& k, Poly b, mpz_class e, const Poly& m);

// finite base field only
bool is_irreducible(const FieldPtr& k, const Poly& f);

// all distinct roots of f lying in the (finite) coefficient field, by
// Cantor-Zassenhaus splitting with a fixed internal seed
std::vector<Elem> roots_in_field(const FieldPtr& k, Poly f);

} // namespace fano::up
