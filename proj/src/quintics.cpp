#include "fano/quintics.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::runtime_error(msg);
}

// canonical form of a 2x2 matrix up to scalars, as a comparison key
std::string proj_key(const Mat& g) {
    Elem lead;
    for (const Elem& e : g.a)
        if (!e.is_zero()) {
            lead = e;
            break;
        }
    Elem inv = lead.inv();
    std::string s;
    for (const Elem& e : g.a) {
        s += (e * inv).str();
        s += '|';
    }
    return s;
}

bool is_scalar(const Mat& g) {
    return g.at(0, 1).is_zero() && g.at(1, 0).is_zero() && g.at(0, 0) == g.at(1, 1);
}

// unipotent as an element of the projective group: equal eigenvalues,
// not the identity
bool is_unipotent(const Mat& g) {
    if (is_scalar(g)) return false;
    Elem tr = g.at(0, 0) + g.at(1, 1);
    Elem det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
    if (g.k->characteristic() == 2) return tr.is_zero();
    return tr * tr == det.field()->from_int(4) * det;
}

long proj_order(const Mat& g, long cap) {
    Mat acc = g;
    for (long n = 1; n <= cap; ++n) {
        if (is_scalar(acc)) return n;
        acc = acc.mul(g);
    }
    return cap + 1;
}

// sorted rational-point set of a parametrized curve, as a cheap image key
std::string point_set_key(const CurveMap& c) {
    const FieldPtr& k = c.forms[0].field();
    std::set<std::string> keys;
    auto add = [&](const Elem& s, const Elem& t) {
        std::vector<Elem> pt;
        for (const auto& f : c.forms) pt.push_back(f.eval(s, t));
        Elem lead;
        for (const Elem& e : pt)
            if (!e.is_zero()) {
                lead = e.inv();
                break;
            }
        std::string key;
        for (const Elem& e : pt) {
            key += (e * lead).str();
            key += ',';
        }
        keys.insert(std::move(key));
    };
    for (mpz_class i = 0; i < k->size(); ++i) add(k->element(i), k->one());
    add(k->one(), k->zero());
    std::string out;
    for (const auto& s : keys) {
        out += s;
        out += ';';
    }
    return out;
}

StabTag decide_tag(const std::vector<Mat>& elems, const FieldPtr& k) {
    long q = static_cast<long>(k->size().get_ui());
    long n = static_cast<long>(elems.size());
    long g4 = std::gcd(4L, q - 1);
    std::set<std::string> unip;
    long max_order = 1;
    bool all_semisimple = true;
    for (const Mat& g : elems) {
        if (is_scalar(g)) continue;
        if (is_unipotent(g)) {
            unip.insert(proj_key(g));
            all_semisimple = false;
        } else {
            max_order = std::max(max_order, proj_order(g, n));
        }
    }
    long u = static_cast<long>(unip.size());
    if (n == q * (q - 1) && u == q - 1 && max_order >= q - 1) return StabTag::Borel;
    if (n == q * g4 && u == q - 1) {
        // the unipotents together with the identity must close under
        // multiplication; unipotence is conjugation-invariant, so a closed
        // set of size q is a normal subgroup
        std::set<std::string> uset = unip;
        bool closed = true;
        std::vector<const Mat*> us;
        for (const Mat& g : elems)
            if (!is_scalar(g) && is_unipotent(g)) us.push_back(&g);
        for (const Mat* a : us)
            for (const Mat* b : us) {
                Mat p = a->mul(*b);
                if (!is_scalar(p) && !is_unipotent(p)) closed = false;
            }
        if (closed) return StabTag::GaMu4;
    }
    if (n == q - 1 && all_semisimple && max_order == q - 1) return StabTag::Torus;
    if (n == 2 * (q - 1) && all_semisimple && max_order == q - 1) return StabTag::TorusByTwo;
    return StabTag::Other;
}

} // namespace

QuinticSpec QuinticSpec::mu() { return QuinticSpec{}; }

QuinticSpec QuinticSpec::ga(Elem xi) {
    QuinticSpec s;
    s.kind = Kind::Ga;
    s.param = std::move(xi);
    return s;
}

QuinticSpec QuinticSpec::gm(Elem u) {
    QuinticSpec s;
    s.kind = Kind::Gm;
    s.param = std::move(u);
    return s;
}

QuinticSpec QuinticSpec::gm_prime(Elem u) {
    QuinticSpec s;
    s.kind = Kind::GmPrime;
    s.param = std::move(u);
    return s;
}

QuinticSpec QuinticSpec::translate(const Mat& m) const {
    QuinticSpec s = *this;
    s.translated = true;
    s.g = m;
    return s;
}

bool gm_param_valid(const Elem& u) {
    if (u.is_zero() || u.is_one()) return false;
    std::uint64_t p = u.field()->characteristic();
    if (p == 2) return true;
    return u * u.field()->from_int(4) != u.field()->from_int(5);
}

CurveMap build_quintic(const QuinticSpec& spec, const FieldPtr& k) {
    std::vector<BinaryForm> fs(7, BinaryForm(k, 5));
    auto set = [&](int coord, int ti, long c) { fs[static_cast<size_t>(coord)].coeff(ti) = k->from_int(c); };
    Elem p = spec.param.valid() ? convert_elem(spec.param, k) : k->zero();
    switch (spec.kind) {
    case QuinticSpec::Kind::Ga:
        // xi = 0 degenerates to the dense-orbit curve below
        fs[0].coeff(4) = k->from_int(2) * p;
        fs[1].coeff(5) = p;
        [[fallthrough]];
    case QuinticSpec::Kind::MU:
        set(0, 0, 8);
        set(1, 1, 20);
        set(2, 2, 8);
        set(3, 3, 4);
        set(4, 4, 2);
        set(5, 5, 1);
        break;
    case QuinticSpec::Kind::Gm:
        fs[0].coeff(0) = p - k->one();
        fs[1].coeff(1) = p;
        set(2, 2, 1);
        set(3, 3, 1);
        set(4, 4, 1);
        set(5, 5, 1);
        break;
    case QuinticSpec::Kind::GmPrime:
        set(1, 5, 1);
        set(2, 4, 1);
        set(3, 3, 1);
        set(4, 2, 1);
        fs[5].coeff(1) = p;
        fs[6].coeff(0) = p - k->one();
        break;
    }
    CurveMap c(std::move(fs));
    if (spec.translated) c = act_curve(apply_aut(spec.g.convert(k)), c);
    return c;
}

bool check_quintic_smooth(const QuinticSpec& spec, const FieldPtr& k) {
    CurveMap c = build_quintic(spec, k);
    if (!curve_on_variety(c, w5_variety(k))) return false;
    return c.stripped_degree == 0 && c.d == 5 && rnc_rank(c) == 6;
}

StabilizerReport stabilizer_exhaustive(const QuinticSpec& spec, const FieldPtr& k) {
    CurveMap z = build_quintic(spec, k);
    StabilizerReport rep;
    std::string key = point_set_key(z);
    for (const Mat& g : aut_group_elements(k)) {
        CurveMap t = act_curve(apply_aut(g), z);
        if (point_set_key(t) != key) continue;
        if (curves_same_image(t, z)) rep.elements.push_back(g);
    }
    rep.order = static_cast<long>(rep.elements.size());
    rep.tag = decide_tag(rep.elements, k);
    return rep;
}

bool verify_gm_rigidity(const Elem& u, const Elem& u2, const FieldPtr& k) {
    CurveMap z1 = build_quintic(QuinticSpec::gm(u), k);
    CurveMap z2 = build_quintic(QuinticSpec::gm(u2), k);
    // equal images share their rational point sets, so the cheap key filters
    // almost every group element before the exact image comparison
    std::string key2 = point_set_key(z2);
    for (const Mat& g : aut_group_elements(k)) {
        CurveMap t = act_curve(apply_aut(g), z1);
        if (point_set_key(t) != key2) continue;
        if (curves_same_image(t, z2)) return false;
    }
    return true;
}

CountRecord count_v22(const std::string& type, const mpz_class& q) {
    unsigned long p = 0;
    {
        mpz_class r = q;
        for (unsigned long c = 2; mpz_class(c) * c <= q; ++c)
            if (r % c == 0) {
                p = c;
                break;
            }
        if (p == 0) p = r.get_ui();
        mpz_class w = q;
        while (w % p == 0) w /= p;
        require(w == 1, "count_v22: q is not a prime power");
    }
    unsigned d = 0;
    for (mpz_class w = q; w > 1; w /= p) ++d;
    FieldPtr k = construct_extension(p, d);
    bool excluded_char = (p == 2 || p == 5);

    CountRecord rec;
    rec.type = type;
    rec.q = q;
    if (type == "pgl2") {
        rec.enumerated = check_quintic_smooth(QuinticSpec::mu(), k) ? 1 : 0;
        rec.formula = excluded_char ? 0 : 1;
    } else if (type == "ga") {
        if (!check_quintic_smooth(QuinticSpec::ga(k->one()), k)) {
            rec.enumerated = 0;
        } else {
            // size of the unit group modulo fourth powers, by listing cosets
            std::set<std::string> fourth;
            for (mpz_class i = 1; i < q; ++i) fourth.insert(k->element(i).pow(4).str());
            rec.enumerated = (q - 1) / mpz_class(fourth.size());
        }
        rec.formula = excluded_char ? 0 : mpz_class(std::gcd(4L, static_cast<long>(q.get_ui()) - 1));
    } else if (type == "gm") {
        // parameter line minus the four excluded points, counted as a set so
        // that coincidences in small characteristic merge
        std::set<std::string> pts, excluded;
        auto key = [&](const Elem& s, const Elem& t) {
            if (!t.is_zero()) return std::string("a") + (s / t).str();
            return std::string("inf");
        };
        for (mpz_class i = 0; i < q; ++i) pts.insert(key(k->element(i), k->one()));
        pts.insert(key(k->one(), k->zero()));
        excluded.insert(key(k->zero(), k->one()));
        excluded.insert(key(k->one(), k->one()));
        excluded.insert(key(k->one(), k->zero()));
        excluded.insert(key(k->from_int(5), k->from_int(4)));
        for (const auto& e : excluded) pts.erase(e);
        rec.enumerated = 2 * mpz_class(pts.size());
        rec.formula = excluded_char ? 2 * q - 4 : 2 * q - 6;
    } else {
        require(false, "count_v22: unknown type");
    }
    rec.agree = rec.enumerated == rec.formula;
    return rec;
}

bool ga_form_class_equal(const Elem& xi, const Elem& xi2) {
    const FieldPtr& k = xi.field();
    require(k->same(xi2.field()), "ga_form_class_equal: mixed fields");
    std::uint64_t p = k->characteristic();
    require(p != 2 && p != 5, "ga_form_class_equal: no such family in characteristic 2 or 5");
    require(!xi.is_zero() && !xi2.is_zero(), "ga_form_class_equal: zero parameter");
    Elem r = xi / xi2;
    if (k->finite()) {
        mpz_class e = (k->size() - 1) / std::gcd(4L, static_cast<long>(k->size().get_ui()) - 1);
        return r.pow(e).is_one();
    }
    mpq_class v = r.rat();
    if (v <= 0) return false;
    mpz_class num = v.get_num(), den = v.get_den(), root;
    return mpz_root(root.get_mpz_t(), num.get_mpz_t(), 4) != 0 &&
           mpz_root(root.get_mpz_t(), den.get_mpz_t(), 4) != 0;
}

} // namespace fano
