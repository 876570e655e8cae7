#pragma once
#include "fano/field.hpp"
#include "fano/upoly.hpp"

#include <vector>

namespace fano {

// Homogeneous form in (s,t); coefficient index i holds the coefficient of
// s^(d-i) t^i. The zero form keeps its declared degree.
class BinaryForm {
public:
    BinaryForm() = default;
    BinaryForm(FieldPtr k, int degree);
    static BinaryForm from_coeffs(FieldPtr k, std::vector<Elem> c); // degree = size-1

    bool valid() const { return k_ != nullptr; }
    const FieldPtr& field() const { return k_; }
    int degree() const { return deg_; }
    bool is_zero() const;
    const Elem& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    Elem& coeff(int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Elem>& coeffs() const { return c_; }

    Elem eval(const Elem& s, const Elem& t) const;
    BinaryForm ds() const; // d/ds
    BinaryForm dt() const; // d/dt

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scale(const Elem& c) const;
    bool operator==(const BinaryForm& o) const;

    // map coefficients into another field (Q -> F_p reduction or subfield embedding)
    BinaryForm convert(const FieldPtr& target) const;
    // substitute (s,t) -> (a s + b t, c s + d t)
    BinaryForm compose(const Elem& a, const Elem& b, const Elem& c, const Elem& d) const;

    std::string str() const;

private:
    FieldPtr k_;
    int deg_ = -1;
    std::vector<Elem> c_;
};

// monic gcd (leading-coefficient normalized); degree 0 constant when coprime
BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g);
// Sylvester resultant with the declared degrees of f and g
Elem bf_resultant(const BinaryForm& f, const BinaryForm& g);

struct BFRoot {
    Elem s, t; // projective root (s : t), normalized
    int mult = 0;
};

// All roots of f over its own field K (finite fields: exhaustive scan; Q by
// rational root search). Total multiplicity <= deg f.
std::vector<BFRoot> bf_roots(const BinaryForm& f);

// roots_in_extension for a form over a finite field: embed into the degree-d
// extension of the coefficient field and scan there.
std::vector<BFRoot> bf_roots_in_extension(const BinaryForm& f, unsigned d, FieldPtr* ext_out = nullptr);

} // namespace fano
