#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace fano {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of Q, of a prime field, or of a simple extension field.
// Always carries its field; operands must belong to structurally equal fields.
class Elem {
public:
    Elem() = default;

    bool valid() const { return f_ != nullptr; }
    const FieldPtr& field() const { return f_; }

    bool is_zero() const;
    bool is_one() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator-() const;
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const;
    Elem inv() const;
    Elem pow(const mpz_class& e) const;
    bool operator==(const Elem& o) const;
    bool operator!=(const Elem& o) const { return !(*this == o); }

    std::string str() const;

    // representation accessors, kind-checked
    const mpq_class& rat() const;
    std::uint64_t residue() const;
    const std::vector<Elem>& coords() const;

private:
    friend class Field;
    FieldPtr f_;
    mpq_class q_;
    std::uint64_t r_ = 0;
    std::vector<Elem> c_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rationals, Prime, Ext };

    static FieldPtr rationals();
    static FieldPtr prime(std::uint64_t p);
    // minpoly: coefficients c0..cd over base, monic, d >= 2, irreducible over base.
    static FieldPtr extension(FieldPtr base, std::vector<Elem> minpoly);

    Kind kind() const { return kind_; }
    std::uint64_t characteristic() const { return char_; }
    const FieldPtr& base() const { return base_; }
    const std::vector<Elem>& minpoly() const { return minpoly_; }
    unsigned degree() const { return deg_; }        // extension degree over base
    const mpz_class& size() const { return size_; } // 0 means infinite
    bool finite() const { return size_ != 0; }

    Elem zero() const;
    Elem one() const;
    Elem from_int(long v) const;
    Elem from_mpz(const mpz_class& v) const;
    Elem from_mpq(const mpq_class& v) const; // finite fields invert the denominator
    Elem gen() const;                        // Ext only: the class of x
    Elem embed(const Elem& x) const;         // lift an element of a subtower field
    Elem element(const mpz_class& index) const; // finite fields: 0 <= index < size
    bool same(const FieldPtr& o) const;

    std::string describe() const;

private:
    Field() = default;
    friend class Elem;

    Elem make_rat(mpq_class v) const;
    Elem make_res(std::uint64_t r) const;
    Elem make_ext(std::vector<Elem> c) const;

    Kind kind_ = Kind::Rationals;
    std::uint64_t char_ = 0;
    std::uint64_t p_ = 0; // prime-field modulus
    FieldPtr base_;
    std::vector<Elem> minpoly_;
    unsigned deg_ = 1;
    mpz_class size_ = 0;
};

// F_{p^d}; d = 1 gives the prime field, otherwise a simple extension whose
// minimal polynomial comes from the deterministic search in find_irreducible.
FieldPtr construct_extension(std::uint64_t p, unsigned d);

// Degree-d extension of an arbitrary finite field (towers allowed).
FieldPtr extension_of(const FieldPtr& k, unsigned d);

// Deterministic irreducible monic polynomial of degree d over finite k:
// binomials x^d - a (a in enumeration order) first, then ascending
// lexicographic enumeration of all monic coefficient tuples.
std::vector<Elem> find_irreducible(const FieldPtr& k, unsigned d);

// Move x into target: identity if fields match, rational reduction when x is
// over Q, subtower embedding otherwise.
Elem convert_elem(const Elem& x, const FieldPtr& target);

} // namespace fano
