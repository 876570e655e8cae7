#include "fano/field.hpp"

#include "fano/upoly.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------- Field

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = Kind::Rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(std::uint64_t p) {
    require(p >= 2, "prime field: modulus must be >= 2");
    mpz_class pz(static_cast<unsigned long>(p));
    require(mpz_probab_prime_p(pz.get_mpz_t(), 30) != 0, "prime field: p not prime");
    require(p < (1ull << 62), "prime field: modulus too large");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->char_ = p;
    f->p_ = p;
    f->size_ = pz;
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> minpoly) {
    require(base != nullptr, "extension: null base");
    minpoly = up::trim(std::move(minpoly));
    int d = up::deg(minpoly);
    require(d >= 2, "extension: minimal polynomial degree must be >= 2");
    for (auto& c : minpoly) require(c.field()->same(base), "extension: minpoly coefficient field mismatch");
    require(minpoly.back().is_one(), "extension: minimal polynomial must be monic");
    if (base->finite()) require(up::is_irreducible(base, minpoly), "extension: minpoly reducible");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Ext;
    f->char_ = base->characteristic();
    f->base_ = std::move(base);
    f->minpoly_ = std::move(minpoly);
    f->deg_ = static_cast<unsigned>(d);
    if (f->base_->finite()) {
        mpz_class s = 1;
        for (int i = 0; i < d; ++i) s *= f->base_->size();
        f->size_ = s;
    }
    return f;
}

Elem Field::make_rat(mpq_class v) const {
    Elem e;
    e.f_ = shared_from_this();
    e.q_ = std::move(v);
    e.q_.canonicalize();
    return e;
}

Elem Field::make_res(std::uint64_t r) const {
    Elem e;
    e.f_ = shared_from_this();
    e.r_ = r % p_;
    return e;
}

Elem Field::make_ext(std::vector<Elem> c) const {
    require(c.size() == deg_, "extension element: wrong coordinate count");
    Elem e;
    e.f_ = shared_from_this();
    e.c_ = std::move(c);
    return e;
}

Elem Field::zero() const {
    switch (kind_) {
    case Kind::Rationals: return make_rat(0);
    case Kind::Prime: return make_res(0);
    case Kind::Ext: return make_ext(std::vector<Elem>(deg_, base_->zero()));
    }
    throw std::logic_error("unreachable");
}

Elem Field::one() const { return from_int(1); }

Elem Field::from_int(long v) const {
    return from_mpz(mpz_class(v));
}

Elem Field::from_mpz(const mpz_class& v) const {
    switch (kind_) {
    case Kind::Rationals: return make_rat(mpq_class(v));
    case Kind::Prime: {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
        if (r < 0) r += static_cast<unsigned long>(p_);
        return make_res(r.get_ui());
    }
    case Kind::Ext: {
        std::vector<Elem> c(deg_, base_->zero());
        c[0] = base_->from_mpz(v);
        return make_ext(std::move(c));
    }
    }
    throw std::logic_error("unreachable");
}

Elem Field::from_mpq(const mpq_class& v) const {
    if (kind_ == Kind::Rationals) return make_rat(v);
    Elem num = from_mpz(mpq_class(v).get_num());
    Elem den = from_mpz(mpq_class(v).get_den());
    require(!den.is_zero(), "from_mpq: denominator vanishes in this characteristic");
    return num / den;
}

Elem Field::gen() const {
    require(kind_ == Kind::Ext, "gen: not an extension field");
    std::vector<Elem> c(deg_, base_->zero());
    c[1] = base_->one();
    return make_ext(std::move(c));
}

Elem Field::embed(const Elem& x) const {
    require(x.valid(), "embed: invalid element");
    if (x.field()->same(shared_from_this())) return x;
    require(kind_ == Kind::Ext, "embed: element not of a subfield of this tower");
    std::vector<Elem> c(deg_, base_->zero());
    c[0] = base_->embed(x);
    return make_ext(std::move(c));
}

Elem Field::element(const mpz_class& index) const {
    require(finite(), "element: infinite field");
    require(index >= 0 && index < size_, "element: index out of range");
    switch (kind_) {
    case Kind::Prime: return make_res(index.get_ui());
    case Kind::Ext: {
        std::vector<Elem> c;
        c.reserve(deg_);
        mpz_class rest = index;
        for (unsigned i = 0; i < deg_; ++i) {
            mpz_class digit = rest % base_->size();
            rest /= base_->size();
            c.push_back(base_->element(digit));
        }
        return make_ext(std::move(c));
    }
    default: throw std::logic_error("unreachable");
    }
}

bool Field::same(const FieldPtr& o) const {
    if (!o) return false;
    if (o.get() == this) return true;
    if (kind_ != o->kind_) return false;
    switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Prime: return p_ == o->p_;
    case Kind::Ext: {
        if (deg_ != o->deg_ || !base_->same(o->base_)) return false;
        for (unsigned i = 0; i <= deg_; ++i)
            if (minpoly_[i] != o->minpoly_[i]) return false;
        return true;
    }
    }
    return false;
}

std::string Field::describe() const {
    switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(p_);
    case Kind::Ext: {
        std::ostringstream os;
        os << base_->describe() << "[x]/(";
        for (int i = static_cast<int>(deg_); i >= 0; --i) {
            if (minpoly_[static_cast<size_t>(i)].is_zero()) continue;
            if (i != static_cast<int>(deg_)) os << " + ";
            os << "(" << minpoly_[static_cast<size_t>(i)].str() << ")";
            if (i > 0) os << "x^" << i;
        }
        os << ")";
        return os.str();
    }
    }
    return "?";
}

// ---------------------------------------------------------------- Elem

namespace {
const Field& fld(const Elem& e) {
    if (!e.valid()) throw std::runtime_error("operation on default-constructed Elem");
    return *e.field();
}
void check_same(const Elem& a, const Elem& b) {
    if (!fld(a).same(b.field())) throw std::runtime_error("field mismatch between operands");
}
} // namespace

bool Elem::is_zero() const {
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return q_ == 0;
    case Field::Kind::Prime: return r_ == 0;
    case Field::Kind::Ext:
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    return false;
}

bool Elem::is_one() const {
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return q_ == 1;
    case Field::Kind::Prime: return r_ == 1;
    case Field::Kind::Ext:
        if (!c_[0].is_one()) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    return false;
}

Elem Elem::operator+(const Elem& o) const {
    check_same(*this, o);
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return f_->make_rat(q_ + o.q_);
    case Field::Kind::Prime: {
        std::uint64_t p = f_->p_;
        std::uint64_t s = r_ + o.r_;
        if (s >= p) s -= p;
        return f_->make_res(s);
    }
    case Field::Kind::Ext: {
        std::vector<Elem> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] + o.c_[i];
        return f_->make_ext(std::move(c));
    }
    }
    throw std::logic_error("unreachable");
}

Elem Elem::operator-() const {
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return f_->make_rat(-q_);
    case Field::Kind::Prime: return f_->make_res(r_ == 0 ? 0 : f_->p_ - r_);
    case Field::Kind::Ext: {
        std::vector<Elem> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return f_->make_ext(std::move(c));
    }
    }
    throw std::logic_error("unreachable");
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator*(const Elem& o) const {
    check_same(*this, o);
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return f_->make_rat(q_ * o.q_);
    case Field::Kind::Prime: return f_->make_res(mulmod(r_, o.r_, f_->p_));
    case Field::Kind::Ext: {
        const FieldPtr& base = f_->base_;
        unsigned d = f_->deg_;
        std::vector<Elem> prod(2 * d - 1, base->zero());
        for (unsigned i = 0; i < d; ++i) {
            if (c_[i].is_zero()) continue;
            for (unsigned j = 0; j < d; ++j) {
                if (o.c_[j].is_zero()) continue;
                prod[i + j] = prod[i + j] + c_[i] * o.c_[j];
            }
        }
        // reduce modulo the monic minimal polynomial
        for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(d); --i) {
            if (prod[static_cast<size_t>(i)].is_zero()) continue;
            Elem lead = prod[static_cast<size_t>(i)];
            prod[static_cast<size_t>(i)] = base->zero();
            for (unsigned j = 0; j < d; ++j) {
                if (f_->minpoly_[j].is_zero()) continue;
                size_t k = static_cast<size_t>(i) - d + j;
                prod[k] = prod[k] - lead * f_->minpoly_[j];
            }
        }
        prod.resize(d, base->zero());
        return f_->make_ext(std::move(prod));
    }
    }
    throw std::logic_error("unreachable");
}

Elem Elem::inv() const {
    if (is_zero()) throw std::runtime_error("division by zero");
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return f_->make_rat(1 / q_);
    case Field::Kind::Prime: return f_->make_res(powmod64(r_, f_->p_ - 2, f_->p_));
    case Field::Kind::Ext: {
        // extended Euclid over the base field: s * this + t * minpoly = 1
        const FieldPtr& base = f_->base_;
        up::Poly r0 = f_->minpoly_;
        up::Poly r1 = up::trim(c_);
        up::Poly s0 = {}; // coefficient of `this` in r0
        up::Poly s1 = {base->one()};
        while (up::deg(r1) > 0) {
            auto [q, r] = up::divmod(base, r0, r1);
            up::Poly s2 = up::sub(base, s0, up::mul(base, q, s1));
            r0 = std::move(r1);
            r1 = up::trim(std::move(r));
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (up::is_zero(r1)) throw std::runtime_error("inv: element not invertible (reducible minpoly?)");
        up::Poly res = up::scale(s1, r1[0].inv());
        res.resize(f_->deg_, base->zero());
        return f_->make_ext(std::move(res));
    }
    }
    throw std::logic_error("unreachable");
}

Elem Elem::operator/(const Elem& o) const { return *this * o.inv(); }

Elem Elem::pow(const mpz_class& e) const {
    if (e < 0) return inv().pow(-e);
    Elem r = f_->one();
    Elem b = *this;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool Elem::operator==(const Elem& o) const {
    check_same(*this, o);
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return q_ == o.q_;
    case Field::Kind::Prime: return r_ == o.r_;
    case Field::Kind::Ext:
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    return false;
}

std::string Elem::str() const {
    switch (fld(*this).kind()) {
    case Field::Kind::Rationals: return q_.get_str();
    case Field::Kind::Prime: return std::to_string(r_);
    case Field::Kind::Ext: {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ",";
            os << c_[i].str();
        }
        os << "]";
        return os.str();
    }
    }
    return "?";
}

const mpq_class& Elem::rat() const {
    require(fld(*this).kind() == Field::Kind::Rationals, "rat(): not a rational");
    return q_;
}

std::uint64_t Elem::residue() const {
    require(fld(*this).kind() == Field::Kind::Prime, "residue(): not a prime-field element");
    return r_;
}

const std::vector<Elem>& Elem::coords() const {
    require(fld(*this).kind() == Field::Kind::Ext, "coords(): not an extension element");
    return c_;
}

// ------------------------------------------------- extension construction

std::vector<Elem> find_irreducible(const FieldPtr& k, unsigned d) {
    require(k && k->finite(), "find_irreducible: finite base field required");
    require(d >= 2, "find_irreducible: degree must be >= 2");
    // binomials x^d - a first
    for (mpz_class i = 1; i < k->size(); ++i) {
        up::Poly f(d + 1, k->zero());
        f[d] = k->one();
        f[0] = -k->element(i);
        if (up::is_irreducible(k, f)) return f;
    }
    // ascending lexicographic enumeration of (c_{d-1}, ..., c_0)
    std::vector<mpz_class> digits(d, 0);
    for (;;) {
        up::Poly f(d + 1, k->zero());
        f[d] = k->one();
        for (unsigned i = 0; i < d; ++i) f[d - 1 - i] = k->element(digits[i]);
        if (up::is_irreducible(k, f)) return f;
        int pos = static_cast<int>(d) - 1;
        while (pos >= 0) {
            digits[static_cast<size_t>(pos)] += 1;
            if (digits[static_cast<size_t>(pos)] < k->size()) break;
            digits[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        require(pos >= 0, "find_irreducible: search exhausted (impossible)");
    }
}

FieldPtr extension_of(const FieldPtr& k, unsigned d) {
    require(d >= 1, "extension_of: degree must be >= 1");
    if (d == 1) return k;
    return Field::extension(k, find_irreducible(k, d));
}

FieldPtr construct_extension(std::uint64_t p, unsigned d) {
    FieldPtr fp = Field::prime(p);
    return extension_of(fp, d);
}

// ---------------------------------------------------------------- upoly

namespace up {

Poly trim(Poly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!f[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

bool is_zero(const Poly& f) { return deg(f) < 0; }

Poly constant(const FieldPtr& k, const Elem& c) {
    if (c.is_zero()) return {};
    (void)k;
    return {c};
}

Poly x_power(const FieldPtr& k, unsigned n) {
    Poly f(n + 1, k->zero());
    f[n] = k->one();
    return f;
}

Poly add(const FieldPtr& k, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), k->zero());
    for (size_t i = 0; i < f.size(); ++i) r[i] = r[i] + f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] = r[i] + g[i];
    return trim(std::move(r));
}

Poly sub(const FieldPtr& k, const Poly& f, const Poly& g) {
    Poly r(std::max(f.size(), g.size()), k->zero());
    for (size_t i = 0; i < f.size(); ++i) r[i] = r[i] + f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] = r[i] - g[i];
    return trim(std::move(r));
}

Poly mul(const FieldPtr& k, const Poly& f, const Poly& g) {
    if (is_zero(f) || is_zero(g)) return {};
    Poly r(f.size() + g.size() - 1, k->zero());
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_zero()) continue;
        for (size_t j = 0; j < g.size(); ++j) {
            if (g[j].is_zero()) continue;
            r[i + j] = r[i + j] + f[i] * g[j];
        }
    }
    return trim(std::move(r));
}

Poly scale(const Poly& f, const Elem& c) {
    if (c.is_zero()) return {};
    Poly r = f;
    for (auto& x : r) x = x * c;
    return trim(std::move(r));
}

std::pair<Poly, Poly> divmod(const FieldPtr& k, Poly num, const Poly& den) {
    int dd = deg(den);
    if (dd < 0) throw std::runtime_error("divmod: division by zero polynomial");
    num = trim(std::move(num));
    Poly q;
    Elem lead_inv = den[static_cast<size_t>(dd)].inv();
    while (deg(num) >= dd) {
        int dn = deg(num);
        Elem c = num[static_cast<size_t>(dn)] * lead_inv;
        int shift = dn - dd;
        if (static_cast<int>(q.size()) < shift + 1) q.resize(static_cast<size_t>(shift) + 1, k->zero());
        q[static_cast<size_t>(shift)] = c;
        for (int i = 0; i <= dd; ++i) {
            size_t idx = static_cast<size_t>(i + shift);
            num[idx] = num[idx] - c * den[static_cast<size_t>(i)];
        }
        num = trim(std::move(num));
    }
    return {trim(std::move(q)), std::move(num)};
}

Poly monic(const Poly& f) {
    int d = deg(f);
    if (d < 0) return {};
    return scale(f, f[static_cast<size_t>(d)].inv());
}

Poly gcd_monic(const FieldPtr& k, Poly f, Poly g) {
    f = trim(std::move(f));
    g = trim(std::move(g));
    while (!is_zero(g)) {
        auto [q, r] = divmod(k, f, g);
        (void)q;
        f = std::move(g);
        g = trim(std::move(r));
    }
    return monic(f);
}

Elem eval(const FieldPtr& k, const Poly& f, const Elem& x) {
    Elem r = k->zero();
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = r * x + f[static_cast<size_t>(i)];
    return r;
}

Poly deriv(const FieldPtr& k, const Poly& f) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1, k->zero());
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * k->from_mpz(mpz_class(static_cast<unsigned long>(i)));
    return trim(std::move(r));
}

Poly powmod(const FieldPtr& k, Poly b, mpz_class e, const Poly& m) {
    Poly r = {k->one()};
    b = divmod(k, std::move(b), m).second;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = divmod(k, mul(k, r, b), m).second;
        b = divmod(k, mul(k, b, b), m).second;
        e >>= 1;
    }
    return r;
}

bool is_irreducible(const FieldPtr& k, const Poly& f) {
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    const mpz_class& q = k->size();
    Poly x = x_power(k, 1);
    // x^(q^n) == x mod f
    mpz_class qn;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    if (!is_zero(sub(k, powmod(k, x, qn, f), x))) return false;
    // gcd(x^(q^(n/l)) - x, f) == 1 for each prime l | n
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) { lprime = false; break; }
        if (!lprime) continue;
        mpz_class qk;
        mpz_pow_ui(qk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n / l));
        Poly g = gcd_monic(k, sub(k, powmod(k, x, qk, f), x), f);
        if (deg(g) != 0) return false;
    }
    return true;
}

std::vector<Elem> roots_in_field(const FieldPtr& k, Poly f) {
    require(k->finite(), "roots_in_field: finite field required");
    std::vector<Elem> out;
    f = trim(std::move(f));
    if (deg(f) < 1) return out;
    // isolate the product of the distinct linear factors
    Poly x = x_power(k, 1);
    f = gcd_monic(k, sub(k, powmod(k, x, k->size(), f), x), monic(f));
    if (deg(f) < 1) return out;
    // Cantor-Zassenhaus splitting; the rng is fixed so results are stable
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    auto rand_elem = [&] { return k->element(mpz_class(rng()) % k->size()); };
    std::vector<Poly> stack{std::move(f)};
    while (!stack.empty()) {
        Poly g = std::move(stack.back());
        stack.pop_back();
        if (deg(g) == 1) {
            out.push_back(-(g[0] / g[1]));
            continue;
        }
        Poly split;
        while (true) {
            if (k->characteristic() != 2) {
                Poly shift{rand_elem(), k->one()};
                Poly h = powmod(k, shift, (k->size() - 1) / 2, g);
                if (!h.empty()) h[0] = h[0] - k->one();
                split = gcd_monic(k, trim(std::move(h)), g);
            } else {
                // trace map of a random multiple of x splits in characteristic 2
                unsigned m = static_cast<unsigned>(mpz_sizeinbase(k->size().get_mpz_t(), 2)) - 1;
                Poly cx{k->zero(), rand_elem()};
                Poly acc, term = divmod(k, cx, g).second;
                for (unsigned i = 0; i < m; ++i) {
                    acc = add(k, acc, term);
                    term = divmod(k, mul(k, term, term), g).second;
                }
                split = gcd_monic(k, trim(std::move(acc)), g);
            }
            if (deg(split) > 0 && deg(split) < deg(g)) break;
        }
        stack.push_back(divmod(k, g, split).first);
        stack.push_back(std::move(split));
    }
    return out;
}

} // namespace up

Elem convert_elem(const Elem& x, const FieldPtr& target) {
    if (x.field()->same(target)) return x;
    if (x.field()->kind() == Field::Kind::Rationals) return target->from_mpq(x.rat());
    return target->embed(x);
}

} // namespace fano
