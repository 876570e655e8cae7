#include "fano/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fano {

namespace {
void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}
} // namespace

MPoly::MPoly(FieldPtr k, int nvars) : k_(std::move(k)), n_(nvars) {
    require(n_ >= 1, "MPoly: need at least one variable");
}

MPoly MPoly::variable(const FieldPtr& k, int nvars, int i) {
    MPoly p(k, nvars);
    Exps e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.t_[e] = k->one();
    return p;
}

MPoly MPoly::constant(const FieldPtr& k, int nvars, const Elem& c) {
    MPoly p(k, nvars);
    if (!c.is_zero()) p.t_[Exps(static_cast<size_t>(nvars), 0)] = c;
    return p;
}

void MPoly::add_term(const Exps& e, const Elem& c) {
    require(static_cast<int>(e.size()) == n_, "MPoly: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_[e] = c;
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
    require(n_ == o.n_, "MPoly +: variable count mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    require(n_ == o.n_, "MPoly -: variable count mismatch");
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    require(n_ == o.n_, "MPoly *: variable count mismatch");
    MPoly r(k_, n_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) {
            Exps e(static_cast<size_t>(n_));
            for (int i = 0; i < n_; ++i) e[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::scale(const Elem& c) const {
    MPoly r(k_, n_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t_) r.t_[e] = v * c;
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (n_ != o.n_ || t_.size() != o.t_.size()) return false;
    auto it1 = t_.begin();
    auto it2 = o.t_.begin();
    for (; it1 != t_.end(); ++it1, ++it2)
        if (it1->first != it2->first || !(it1->second == it2->second)) return false;
    return true;
}

Elem MPoly::eval(const std::vector<Elem>& x) const {
    require(static_cast<int>(x.size()) == n_, "MPoly eval: argument count mismatch");
    Elem r = k_->zero();
    for (const auto& [e, c] : t_) {
        Elem term = c;
        for (int i = 0; i < n_; ++i)
            for (unsigned j = 0; j < e[static_cast<size_t>(i)]; ++j) term = term * x[static_cast<size_t>(i)];
        r = r + term;
    }
    return r;
}

MPoly MPoly::subst(const std::vector<MPoly>& x) const {
    require(static_cast<int>(x.size()) == n_, "MPoly subst: argument count mismatch");
    int m = x[0].nvars();
    MPoly r(x[0].field(), m);
    for (const auto& [e, c] : t_) {
        MPoly term = MPoly::constant(x[0].field(), m, c);
        for (int i = 0; i < n_; ++i)
            for (unsigned j = 0; j < e[static_cast<size_t>(i)]; ++j) term = term * x[static_cast<size_t>(i)];
        r = r + term;
    }
    return r;
}

MPoly MPoly::subst_linear(const Mat& A) const {
    require(A.rows == n_ && A.cols == n_, "subst_linear: matrix size mismatch");
    std::vector<MPoly> lin;
    lin.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        MPoly l(A.k, n_);
        for (int j = 0; j < n_; ++j) {
            if (A.at(i, j).is_zero()) continue;
            Exps e(static_cast<size_t>(n_), 0);
            e[static_cast<size_t>(j)] = 1;
            l.add_term(e, A.at(i, j));
        }
        lin.push_back(std::move(l));
    }
    return subst(lin);
}

BinaryForm MPoly::eval_forms(const std::vector<BinaryForm>& x, int expected_degree) const {
    require(static_cast<int>(x.size()) == n_, "eval_forms: argument count mismatch");
    const FieldPtr& k = x[0].field();
    BinaryForm r(k, expected_degree);
    for (const auto& [e, c] : t_) {
        BinaryForm term(k, 0);
        if (c.field()->same(k))
            term.coeff(0) = c;
        else if (c.field()->kind() == Field::Kind::Rationals)
            term.coeff(0) = k->from_mpq(c.rat());
        else
            term.coeff(0) = k->embed(c);
        for (int i = 0; i < n_; ++i)
            for (unsigned j = 0; j < e[static_cast<size_t>(i)]; ++j) term = term * x[static_cast<size_t>(i)];
        require(term.degree() == expected_degree, "eval_forms: inhomogeneous substitution");
        r = r + term;
    }
    return r;
}

MPoly MPoly::deriv(int i) const {
    MPoly r(k_, n_);
    for (const auto& [e, c] : t_) {
        unsigned exp = e[static_cast<size_t>(i)];
        if (exp == 0) continue;
        Exps e2 = e;
        e2[static_cast<size_t>(i)] = exp - 1;
        r.add_term(e2, c * k_->from_int(static_cast<long>(exp)));
    }
    return r;
}

MPoly MPoly::convert(const FieldPtr& target) const {
    MPoly r(target, n_);
    for (const auto& [e, c] : t_) {
        Elem v = c.field()->kind() == Field::Kind::Rationals ? target->from_mpq(c.rat()) : target->embed(c);
        r.add_term(e, v);
    }
    return r;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        (void)c;
        int s = 0;
        for (unsigned x : e) s += static_cast<int>(x);
        if (s > d) d = s;
    }
    return d;
}

bool MPoly::homogeneous(int d) const {
    for (const auto& [e, c] : t_) {
        (void)c;
        int s = 0;
        for (unsigned x : e) s += static_cast<int>(x);
        if (s != d) return false;
    }
    return true;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        for (int i = 0; i < n_; ++i)
            if (e[static_cast<size_t>(i)] > 0) os << "x" << i << "^" << e[static_cast<size_t>(i)];
        first = false;
    }
    return os.str();
}

} // namespace fano
