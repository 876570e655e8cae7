#include "fano/binary_form.hpp"

#include <sstream>
#include <stdexcept>

#include "fano/linalg.hpp"

namespace fano {

namespace {
void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}
} // namespace

BinaryForm::BinaryForm(FieldPtr k, int degree) : k_(std::move(k)), deg_(degree) {
    require(degree >= 0, "BinaryForm: negative degree");
    c_.assign(static_cast<size_t>(degree) + 1, k_->zero());
}

BinaryForm BinaryForm::from_coeffs(FieldPtr k, std::vector<Elem> c) {
    require(!c.empty(), "BinaryForm: empty coefficient vector");
    BinaryForm f;
    f.k_ = std::move(k);
    f.deg_ = static_cast<int>(c.size()) - 1;
    f.c_ = std::move(c);
    return f;
}

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

Elem BinaryForm::eval(const Elem& s, const Elem& t) const {
    Elem r = k_->zero();
    std::vector<Elem> spow(static_cast<size_t>(deg_) + 1, k_->one());
    for (int i = 1; i <= deg_; ++i) spow[static_cast<size_t>(i)] = spow[static_cast<size_t>(i - 1)] * s;
    Elem tp = k_->one();
    for (int i = 0; i <= deg_; ++i) {
        if (!c_[static_cast<size_t>(i)].is_zero())
            r = r + c_[static_cast<size_t>(i)] * spow[static_cast<size_t>(deg_ - i)] * tp;
        tp = tp * t;
    }
    return r;
}

BinaryForm BinaryForm::ds() const {
    if (deg_ == 0) return BinaryForm(k_, 0);
    BinaryForm r(k_, deg_ - 1);
    for (int i = 0; i < deg_; ++i)
        r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)] * k_->from_int(deg_ - i);
    return r;
}

BinaryForm BinaryForm::dt() const {
    if (deg_ == 0) return BinaryForm(k_, 0);
    BinaryForm r(k_, deg_ - 1);
    for (int i = 1; i <= deg_; ++i)
        r.c_[static_cast<size_t>(i - 1)] = c_[static_cast<size_t>(i)] * k_->from_int(i);
    return r;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    require(deg_ == o.deg_, "BinaryForm +: degree mismatch");
    BinaryForm r(k_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const {
    require(deg_ == o.deg_, "BinaryForm -: degree mismatch");
    BinaryForm r(k_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    BinaryForm r(k_, deg_ + o.deg_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return r;
}

BinaryForm BinaryForm::scale(const Elem& c) const {
    BinaryForm r(k_, deg_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * c;
    return r;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
    if (deg_ != o.deg_) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

BinaryForm BinaryForm::convert(const FieldPtr& target) const {
    BinaryForm r(target, deg_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].field()->kind() == Field::Kind::Rationals)
            r.c_[i] = target->from_mpq(c_[i].rat());
        else
            r.c_[i] = target->embed(c_[i]);
    }
    return r;
}

BinaryForm BinaryForm::compose(const Elem& a, const Elem& b, const Elem& c, const Elem& d) const {
    // powers of (a s + b t) and (c s + d t)
    std::vector<BinaryForm> up(static_cast<size_t>(deg_) + 1), vp(static_cast<size_t>(deg_) + 1);
    BinaryForm u(k_, 1), v(k_, 1);
    u.coeff(0) = a;
    u.coeff(1) = b;
    v.coeff(0) = c;
    v.coeff(1) = d;
    up[0] = BinaryForm(k_, 0);
    up[0].coeff(0) = k_->one();
    vp[0] = up[0];
    for (int i = 1; i <= deg_; ++i) {
        up[static_cast<size_t>(i)] = up[static_cast<size_t>(i - 1)] * u;
        vp[static_cast<size_t>(i)] = vp[static_cast<size_t>(i - 1)] * v;
    }
    BinaryForm r(k_, deg_);
    for (int i = 0; i <= deg_; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        r = r + (up[static_cast<size_t>(deg_ - i)] * vp[static_cast<size_t>(i)]).scale(c_[static_cast<size_t>(i)]);
    }
    return r;
}

std::string BinaryForm::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= deg_; ++i) {
        if (c_[static_cast<size_t>(i)].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[static_cast<size_t>(i)].str() << ")s^" << (deg_ - i) << "t^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

// split f = s^a t^b h with h(1,0) != 0 and h(0,1) != 0 (as a t-polynomial, h
// has nonzero constant and leading coefficient); returns (a, b, h as up::Poly
// in the dehomogenized variable t)
struct Split {
    int s_pow = 0, t_pow = 0;
    up::Poly h; // h[i] is the coefficient of t^i, i.e. of s^{m-i} t^i
};

Split split_form(const BinaryForm& f) {
    require(!f.is_zero(), "binary form root/gcd: zero form");
    int d = f.degree();
    int b = 0;
    while (f.coeff(b).is_zero()) ++b; // t^b divides f
    int a = 0;
    while (f.coeff(d - a).is_zero()) ++a; // s^a divides f
    Split sp;
    sp.s_pow = a;
    sp.t_pow = b;
    for (int i = b; i <= d - a; ++i) sp.h.push_back(f.coeff(i));
    return sp;
}

BinaryForm homogenize(const FieldPtr& k, const up::Poly& h) {
    up::Poly t = up::trim(h);
    if (t.empty()) return BinaryForm(k, 0);
    return BinaryForm::from_coeffs(k, std::move(t));
}

// all roots in K of a univariate with nonzero constant term, with multiplicity
std::vector<std::pair<Elem, int>> upoly_roots(const FieldPtr& k, up::Poly f);

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    require(n != 0, "divisors_of: zero");
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class d = 2;
    while (d * d <= n && d < 2000000) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            fac.emplace_back(d, e);
        }
        d += 1;
    }
    if (n > 1) {
        require(mpz_probab_prime_p(n.get_mpz_t(), 30) != 0,
                "divisors_of: constant too hard to factor for rational root search");
        fac.emplace_back(n, 1);
    }
    std::vector<mpz_class> div = {1};
    for (auto& [p, e] : fac) {
        size_t old = div.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < old; ++j) div.push_back(div[j] * pk);
        }
        require(div.size() < 200000, "divisors_of: too many divisors");
    }
    return div;
}

std::vector<std::pair<Elem, int>> upoly_roots(const FieldPtr& k, up::Poly f) {
    f = up::trim(std::move(f));
    std::vector<std::pair<Elem, int>> roots;
    if (up::deg(f) <= 0) return roots;
    if (k->finite()) {
        for (mpz_class i = 0; i < k->size(); ++i) {
            Elem r = k->element(i);
            if (!up::eval(k, f, r).is_zero()) continue;
            int m = 0;
            up::Poly lin = {-r, k->one()};
            up::Poly cur = f;
            for (;;) {
                auto [q, rem] = up::divmod(k, cur, lin);
                if (!up::is_zero(rem)) break;
                cur = std::move(q);
                ++m;
            }
            roots.emplace_back(r, m);
        }
        return roots;
    }
    require(k->kind() == Field::Kind::Rationals, "upoly_roots: unsupported field");
    // rational root search: clear denominators, candidates +/- p/q with
    // p | constant, q | leading
    mpz_class lcm = 1;
    for (const auto& c : f) {
        mpz_class den = c.rat().get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> zc(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        mpq_class v = f[i].rat() * mpq_class(lcm);
        zc[i] = v.get_num();
    }
    require(zc[0] != 0, "upoly_roots: constant term vanished after split");
    std::vector<mpz_class> ps = divisors_of(zc[0]);
    std::vector<mpz_class> qs = divisors_of(zc.back());
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int sign = -1; sign <= 1; sign += 2) {
                mpq_class cand(sign * p, q);
                cand.canonicalize();
                if (cand.get_den() != q || abs(cand.get_num()) != p) continue; // not lowest terms, seen already
                Elem r = k->from_mpq(cand);
                if (!up::eval(k, f, r).is_zero()) continue;
                int m = 0;
                up::Poly lin = {-r, k->one()};
                up::Poly cur = f;
                for (;;) {
                    auto [qq, rem] = up::divmod(k, cur, lin);
                    if (!up::is_zero(rem)) break;
                    cur = std::move(qq);
                    ++m;
                }
                roots.emplace_back(r, m);
            }
    return roots;
}

} // namespace

BinaryForm bf_gcd(const BinaryForm& f, const BinaryForm& g) {
    require(!(f.is_zero() && g.is_zero()), "bf_gcd: both forms zero");
    const FieldPtr& k = f.field();
    if (f.is_zero()) return bf_gcd(g, f);
    if (g.is_zero()) {
        Split sf = split_form(f);
        BinaryForm h = homogenize(k, up::monic(sf.h));
        BinaryForm spow(k, sf.s_pow);
        spow.coeff(0) = k->one();
        BinaryForm tpow(k, sf.t_pow);
        tpow.coeff(sf.t_pow) = k->one();
        return spow * tpow * h;
    }
    Split sf = split_form(f), sg = split_form(g);
    up::Poly hg = up::gcd_monic(k, sf.h, sg.h);
    int a = std::min(sf.s_pow, sg.s_pow);
    int b = std::min(sf.t_pow, sg.t_pow);
    BinaryForm core = homogenize(k, hg);
    BinaryForm spow(k, a);
    spow.coeff(0) = k->one();
    BinaryForm tpow(k, b);
    tpow.coeff(b) = k->one();
    return spow * tpow * core;
}

Elem bf_resultant(const BinaryForm& f, const BinaryForm& g) {
    require(!f.is_zero() && !g.is_zero(), "bf_resultant: zero form");
    const FieldPtr& k = f.field();
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return k->one();
    Mat syl(k, m + n, m + n);
    // rows: t^j * f for j = 0..n-1, then t^j * g for j = 0..m-1, in the
    // dehomogenized variable t (coefficient of t^i is coeff(i))
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= m; ++i) syl.at(j, i + j) = f.coeff(i);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i <= n; ++i) syl.at(n + j, i + j) = g.coeff(i);
    return mat_det(std::move(syl));
}

std::vector<BFRoot> bf_roots(const BinaryForm& f) {
    const FieldPtr& k = f.field();
    std::vector<BFRoot> out;
    if (f.is_zero()) throw std::runtime_error("bf_roots: zero form");
    if (f.degree() == 0) return out;
    Split sp = split_form(f);
    if (sp.s_pow > 0) out.push_back({k->zero(), k->one(), sp.s_pow});
    if (sp.t_pow > 0) out.push_back({k->one(), k->zero(), sp.t_pow});
    for (auto& [r, m] : upoly_roots(k, sp.h)) out.push_back({k->one(), r, m});
    return out;
}

std::vector<BFRoot> bf_roots_in_extension(const BinaryForm& f, unsigned d, FieldPtr* ext_out) {
    require(f.field()->finite(), "bf_roots_in_extension: finite field required");
    FieldPtr ext = extension_of(f.field(), d);
    if (ext_out) *ext_out = ext;
    return bf_roots(f.convert(ext));
}

} // namespace fano
