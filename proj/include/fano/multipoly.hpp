#pragma once
#include "fano/binary_form.hpp"
#include "fano/field.hpp"
#include "fano/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace fano {

// Sparse multivariate polynomial; exponent vectors have fixed length nvars.
class MPoly {
public:
    using Exps = std::vector<unsigned>;

    MPoly() = default;
    MPoly(FieldPtr k, int nvars);
    static MPoly variable(const FieldPtr& k, int nvars, int i);
    static MPoly constant(const FieldPtr& k, int nvars, const Elem& c);

    bool valid() const { return k_ != nullptr; }
    const FieldPtr& field() const { return k_; }
    int nvars() const { return n_; }
    const std::map<Exps, Elem>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add_term(const Exps& e, const Elem& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly scale(const Elem& c) const;
    bool operator==(const MPoly& o) const;

    Elem eval(const std::vector<Elem>& x) const;
    MPoly subst(const std::vector<MPoly>& x) const; // x.size() == nvars
    // pullback along the linear map x_i -> sum_j A(i,j) x_j
    MPoly subst_linear(const Mat& A) const;
    BinaryForm eval_forms(const std::vector<BinaryForm>& x, int expected_degree) const;
    MPoly deriv(int i) const;
    MPoly convert(const FieldPtr& target) const;

    int total_degree() const; // -1 for zero
    bool homogeneous(int d) const;

    std::string str() const;

private:
    FieldPtr k_;
    int n_ = 0;
    std::map<Exps, Elem> t_;
};

} // namespace fano
