#include "fano/v5model.hpp"

#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::runtime_error(msg);
}

// Parse a polynomial in up to four variables a, b, c, d written like
// "20a3b2c + 10a4bd - 1/2b2c4". Single-digit exponents, rational
// coefficients with optional denominator.
MPoly parse_poly(const FieldPtr& k, int nvars, const std::string& text) {
    MPoly out(k, nvars);
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        long sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (text[i] == '-')
                sign = -1;
            else
                require(text[i] == '+', "parse_poly: expected sign");
            ++i;
            skip_ws();
        }
        first = false;
        mpq_class coef(sign);
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            long num = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) num = num * 10 + (text[i++] - '0');
            long den = 1;
            if (i < text.size() && text[i] == '/') {
                ++i;
                den = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) den = den * 10 + (text[i++] - '0');
            }
            coef *= mpq_class(num, den);
            coef.canonicalize();
        }
        MPoly::Exps e(static_cast<size_t>(nvars), 0);
        while (i < text.size() && text[i] >= 'a' && text[i] <= 'd') {
            int var = text[i++] - 'a';
            require(var < nvars, "parse_poly: variable out of range");
            unsigned exp = 1;
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp = static_cast<unsigned>(text[i++] - '0');
            e[static_cast<size_t>(var)] += exp;
        }
        out.add_term(e, k->from_mpq(coef));
    }
    return out;
}

const char* const kSigmaEntries[7][7] = {
    {"a6", "2a5b", "10a4b2", "20a3b3", "20a2b4", "8ab5", "8b6"},
    {"3a5c", "5a4bc + a5d", "20a3b2c + 10a4bd", "30a2b3c + 30a3b2d", "20ab4c + 40a2b3d", "4b5c + 20ab4d", "24b5d"},
    {"3/2a4c2", "2a3bc2 + a4cd", "6a2b2c2 + 8a3bcd + a4d2", "6ab3c2 + 18a2b2cd + 6a3bd2", "2b4c2 + 16ab3cd + 12a2b2d2",
     "4b4cd + 8ab3d2", "12b4d2"},
    {"a3c3", "a2bc3 + a3c2d", "2ab2c3 + 6a2bc2d + 2a3cd2", "b3c3 + 9ab2c2d + 9a2bcd2 + a3d3", "4b3c2d + 12ab2cd2 + 4a2bd3",
     "4b3cd2 + 4ab2d3", "8b3d3"},
    {"3/4a2c4", "1/2abc4 + a2c3d", "1/2b2c4 + 4abc3d + 3a2c2d2", "3b2c3d + 9abc2d2 + 3a2cd3", "6b2c2d2 + 8abcd3 + a2d4",
     "4b2cd3 + 2abd4", "6b2d4"},
    {"3/4ac5", "1/4bc5 + 5/4ac4d", "5/2bc4d + 5ac3d2", "15/2bc3d2 + 15/2ac2d3", "10bc2d3 + 5acd4", "5bcd4 + ad5", "6bd5"},
    {"1/8c6", "1/4c5d", "5/4c4d2", "5/2c3d3", "5/2c2d4", "cd5", "d6"},
};

const char* const kSigmaPrimeEntries[7][7] = {
    {"a3", "0", "a2b", "0", "ab2", "0", "b3"},
    {"0", "a2", "0", "ab", "0", "b2", "0"},
    {"a2c", "0", "a2d", "0", "b2c", "0", "b2d"},
    {"0", "0", "0", "1", "0", "0", "0"},
    {"ac2", "0", "bc2", "0", "ad2", "0", "bd2"},
    {"0", "c2", "0", "cd", "0", "d2", "0"},
    {"c3", "0", "c2d", "0", "cd2", "0", "d3"},
};

std::vector<std::vector<MPoly>> parse_matrix(const FieldPtr& k, const char* const entries[7][7]) {
    std::vector<std::vector<MPoly>> m(7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) m[static_cast<size_t>(i)].push_back(parse_poly(k, 4, entries[i][j]));
    return m;
}

Mat eval_matrix(const std::vector<std::vector<MPoly>>& sym, const Mat& g) {
    const FieldPtr& k = g.k;
    std::vector<Elem> abcd{g.at(0, 0), g.at(0, 1), g.at(1, 0), g.at(1, 1)};
    Mat m(k, 7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) m.at(i, j) = sym[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(abcd);
    return m;
}

} // namespace

Variety w5_variety(const FieldPtr& k) {
    auto q = [&](int i, int j, int u, int v, int w) {
        // a_i a_j - a_u a_v + a_w^2
        MPoly::Exps e(7, 0);
        MPoly r(k, 7);
        e[static_cast<size_t>(i)] += 1;
        e[static_cast<size_t>(j)] += 1;
        r.add_term(e, k->one());
        MPoly::Exps e2(7, 0);
        e2[static_cast<size_t>(u)] += 1;
        e2[static_cast<size_t>(v)] += 1;
        r.add_term(e2, k->from_int(-1));
        MPoly::Exps e3(7, 0);
        e3[static_cast<size_t>(w)] += 2;
        r.add_term(e3, k->one());
        return r;
    };
    std::vector<MPoly> gens;
    gens.push_back(q(0, 4, 1, 3, 2)); // a0 a4 - a1 a3 + a2^2
    // a0 a5 - a1 a4 + a2 a3
    {
        MPoly r(k, 7);
        r.add_term({1, 0, 0, 0, 0, 1, 0}, k->one());
        r.add_term({0, 1, 0, 0, 1, 0, 0}, k->from_int(-1));
        r.add_term({0, 0, 1, 1, 0, 0, 0}, k->one());
        gens.push_back(r);
    }
    gens.push_back(q(0, 6, 2, 4, 3)); // a0 a6 - a2 a4 + a3^2
    // a1 a6 - a2 a5 + a3 a4
    {
        MPoly r(k, 7);
        r.add_term({0, 1, 0, 0, 0, 0, 1}, k->one());
        r.add_term({0, 0, 1, 0, 0, 1, 0}, k->from_int(-1));
        r.add_term({0, 0, 0, 1, 1, 0, 0}, k->one());
        gens.push_back(r);
    }
    gens.push_back(q(2, 6, 3, 5, 4)); // a2 a6 - a3 a5 + a4^2
    return Variety(6, std::move(gens));
}

MPoly w5_divisor(const FieldPtr& k) {
    MPoly r(k, 7);
    r.add_term({0, 0, 1, 0, 1, 0, 0}, k->from_int(5));
    r.add_term({0, 1, 0, 0, 0, 1, 0}, k->from_int(-4));
    r.add_term({1, 0, 0, 0, 0, 0, 1}, k->from_int(27));
    return r;
}

std::vector<std::vector<MPoly>> sigma_symbolic(const FieldPtr& k) {
    require(k->characteristic() != 2, "sigma_symbolic: characteristic 2 uses the other action");
    return parse_matrix(k, kSigmaEntries);
}

std::vector<std::vector<MPoly>> sigma_prime_symbolic(const FieldPtr& k) { return parse_matrix(k, kSigmaPrimeEntries); }

ProjAction sigma_action(const Mat& g) {
    require(g.k->characteristic() != 2, "sigma_action: characteristic 2 uses the other action");
    return ProjAction(eval_matrix(sigma_symbolic(g.k), g));
}

ProjAction sigma_prime_action(const Mat& g) { return ProjAction(eval_matrix(sigma_prime_symbolic(g.k), g)); }

Mat sigma_plane_matrix(const Mat& g) {
    const FieldPtr& k = g.k;
    require(k->characteristic() != 2, "sigma_plane_matrix: characteristic 2 uses the other action");
    const Elem &a = g.at(0, 0), &b = g.at(0, 1), &c = g.at(1, 0), &d = g.at(1, 1);
    Elem two = k->from_int(2);
    Mat m(k, 3, 3);
    m.at(0, 0) = a * a;
    m.at(0, 1) = two * b * b;
    m.at(0, 2) = -(two * a * b);
    m.at(1, 0) = c * c / two;
    m.at(1, 1) = d * d;
    m.at(1, 2) = -(c * d);
    m.at(2, 0) = -(a * c);
    m.at(2, 1) = -(two * b * d);
    m.at(2, 2) = a * d + b * c;
    return m;
}

Mat sigma_prime_plane_matrix(const Mat& g) {
    const FieldPtr& k = g.k;
    Mat m(k, 3, 3);
    m.at(0, 0) = g.at(0, 0);
    m.at(0, 1) = g.at(0, 1);
    m.at(1, 0) = g.at(1, 0);
    m.at(1, 1) = g.at(1, 1);
    m.at(2, 2) = k->one();
    return m;
}

std::vector<Mat> aut_tangent_generators(const FieldPtr& k) {
    auto sym = (k->characteristic() == 2) ? sigma_prime_symbolic(k) : sigma_symbolic(k);
    std::vector<Elem> id{k->one(), k->zero(), k->zero(), k->one()};
    auto partial = [&](int var) {
        Mat m(k, 7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) m.at(i, j) = sym[static_cast<size_t>(i)][static_cast<size_t>(j)].deriv(var).eval(id);
        return m;
    };
    std::vector<Mat> gens;
    if (k->characteristic() != 2) {
        // Lie algebra of PGL2: diag(1,0) and the two nilpotents
        gens.push_back(partial(0));
        gens.push_back(partial(1));
        gens.push_back(partial(2));
    } else {
        // determinant constraint ties the diagonal entries together; the
        // scalar direction survives because the action is inhomogeneous
        gens.push_back(partial(1));
        gens.push_back(partial(2));
        Mat diag = partial(0);
        Mat dd = partial(3);
        for (size_t i = 0; i < diag.a.size(); ++i) diag.a[i] = diag.a[i] + dd.a[i];
        gens.push_back(std::move(diag));
    }
    return gens;
}

std::vector<MPoly> nu_map(const FieldPtr& k) {
    require(k->characteristic() != 2, "nu_map: characteristic 2 uses the plane normalization");
    // variables (a, b, c, d) = (alpha, beta, gamma, delta)
    const char* comps[7] = {"8ab5",         "4b5c + 20ab4d", "4b4cd + 8ab3d2", "4b3cd2 + 4ab2d3",
                            "4b2cd3 + 2abd4", "5bcd4 + ad5",   "cd5"};
    std::vector<MPoly> out;
    for (const char* s : comps) out.push_back(parse_poly(k, 4, s));
    return out;
}

std::vector<MPoly> nu_prime_map(const FieldPtr& k) {
    // (x, y, z) = variables (a, b, c)
    const char* comps[7] = {"a3", "a2c", "a2b", "0", "ab2", "b2c", "b3"};
    std::vector<MPoly> out;
    for (const char* s : comps) out.push_back(parse_poly(k, 3, s));
    return out;
}

namespace {

CurveMap monomial_curve(const FieldPtr& k, int degree, const std::vector<int>& powers) {
    // powers[i] = exponent of t in coordinate i, or -1 for the zero form
    std::vector<BinaryForm> forms;
    for (int p : powers) {
        BinaryForm f(k, degree);
        if (p >= 0) f.coeff(p) = k->one();
        forms.push_back(std::move(f));
    }
    return CurveMap(std::move(forms));
}

} // namespace

CurveMap twisted_cubic_orbit_closure(const FieldPtr& k) { return monomial_curve(k, 3, {0, -1, 1, -1, 2, -1, 3}); }

CurveMap exceptional_image_line(const FieldPtr& k) { return monomial_curve(k, 2, {-1, 0, -1, -1, -1, 2, -1}); }

std::vector<OrbitPoint> orbit_table(const FieldPtr& k) {
    auto pt = [&](std::initializer_list<long> cs) {
        std::vector<Elem> v;
        for (long c : cs) v.push_back(k->from_int(c));
        return PPoint(k, std::move(v));
    };
    std::vector<OrbitPoint> t;
    if (k->characteristic() != 2) {
        t.push_back({"dense", pt({0, 1, 0, 0, 0, 1, 0}), 3, false, 3, CurveMap()});
        t.push_back({"divisor-open", pt({0, 0, 0, 0, 0, 1, 0}), 2, true, 2, CurveMap()});
        // closure of the closed orbit: the translates of the last coordinate
        // point, read off the last column of the action matrix
        std::vector<BinaryForm> sext;
        for (long c : {8, 24, 12, 8, 6, 6, 1}) {
            BinaryForm f(k, 6);
            f.coeff(static_cast<int>(sext.size())) = k->from_int(c);
            sext.push_back(std::move(f));
        }
        t.push_back({"closed-curve", pt({0, 0, 0, 0, 0, 0, 1}), 1, true, 1, CurveMap(std::move(sext))});
    } else {
        t.push_back({"dense", pt({1, 0, 0, 1, 0, 0, 1}), 3, false, 3, CurveMap()});
        t.push_back({"divisor-open", pt({0, 0, 0, 0, 0, 1, 1}), 2, true, 2, CurveMap()});
        t.push_back({"closed-cubic", pt({0, 0, 0, 0, 0, 0, 1}), 1, true, 1, twisted_cubic_orbit_closure(k)});
        t.push_back({"exceptional-line", pt({0, 0, 0, 0, 0, 1, 0}), 1, true, 2, exceptional_image_line(k)});
    }
    return t;
}

std::vector<NamedLine> named_lines(const FieldPtr& k) {
    auto line = [&](const FieldPtr& kf, std::initializer_list<std::pair<long, long>> coords) {
        std::vector<BinaryForm> forms;
        for (auto [cs, ct] : coords) {
            BinaryForm f(kf, 1);
            f.coeff(0) = kf->from_int(cs);
            f.coeff(1) = kf->from_int(ct);
            forms.push_back(std::move(f));
        }
        return CurveMap(std::move(forms));
    };
    auto plane = [&](const FieldPtr& kf, long x, long y, long z) {
        return std::vector<Elem>{kf->from_int(x), kf->from_int(y), kf->from_int(z)};
    };
    std::vector<NamedLine> t;
    t.push_back({"(0:1:0)", line(k, {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}}), plane(k, 0, 1, 0)});
    t.push_back({"(0:0:1)", line(k, {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}}), plane(k, 0, 0, 1)});
    t.push_back({"(1:0:0)", line(k, {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}), plane(k, 1, 0, 0)});
    if (k->characteristic() != 2) {
        t.push_back({"(2:-1:0)", line(k, {{8, 0}, {0, -4}, {4, 0}, {0, 0}, {-2, 0}, {0, 1}, {-1, 0}}), plane(k, 2, -1, 0)});
        t.push_back({"(2:1:0)", line(k, {{8, 0}, {0, -4}, {-4, 0}, {0, 0}, {-2, 0}, {0, 1}, {1, 0}}), plane(k, 2, 1, 0)});
    } else {
        t.push_back({"(1:1:1)", line(k, {{1, 0}, {0, 1}, {0, 1}, {1, 1}, {0, 1}, {0, 1}, {1, 0}}), plane(k, 1, 1, 1)});
        // conjugate lines through the dense-orbit representative need a cube
        // root of unity
        FieldPtr k4 = (k->size() % 3 == 1) ? k : extension_of(k, 2);
        Elem omega = k4->one();
        {
            // an element of multiplicative order 3
            mpz_class e = (k4->size() - 1) / 3;
            for (mpz_class i = 0; i < k4->size(); ++i) {
                Elem x = k4->element(i);
                if (x.is_zero()) continue;
                Elem y = x.pow(e);
                if (!y.is_one() && y.pow(3).is_one()) {
                    omega = y;
                    break;
                }
            }
        }
        Elem omega2 = omega * omega;
        for (int pick = 0; pick < 2; ++pick) {
            Elem w = pick == 0 ? omega : omega2;
            Elem winv = pick == 0 ? omega2 : omega;
            std::vector<BinaryForm> forms;
            // (s, t, t w^-1, s + t w, t, t w^-1, s) with w^-1 chosen per sign
            std::vector<std::pair<Elem, Elem>> coords = {
                {k4->one(), k4->zero()}, {k4->zero(), k4->one()},  {k4->zero(), winv}, {k4->one(), w},
                {k4->zero(), k4->one()}, {k4->zero(), winv},       {k4->one(), k4->zero()}};
            for (auto& [cs, ct] : coords) {
                BinaryForm f(k4, 1);
                f.coeff(0) = cs;
                f.coeff(1) = ct;
                forms.push_back(std::move(f));
            }
            std::string lbl = pick == 0 ? "(w2:w:1)" : "(w:w2:1)";
            t.push_back({lbl, CurveMap(std::move(forms)), {winv, w, k4->one()}});
        }
    }
    return t;
}

std::vector<Mat> aut_group_elements(const FieldPtr& k) {
    require(k->finite(), "aut_group_elements: finite field required");
    std::vector<Mat> out;
    mpz_class q = k->size();
    bool char2 = k->characteristic() == 2;
    auto push_if = [&](const Elem& a, const Elem& b, const Elem& c, const Elem& d) {
        Elem det = a * d - b * c;
        if (det.is_zero()) return;
        if (char2 && !det.is_one()) return; // SL2 in characteristic 2
        Mat m(k, 2, 2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        m.at(1, 0) = c;
        m.at(1, 1) = d;
        out.push_back(std::move(m));
    };
    if (char2) {
        for (mpz_class i = 0; i < q; ++i)
            for (mpz_class j = 0; j < q; ++j)
                for (mpz_class l = 0; l < q; ++l)
                    for (mpz_class m2 = 0; m2 < q; ++m2)
                        push_if(k->element(i), k->element(j), k->element(l), k->element(m2));
        return out;
    }
    // PGL2: normalize the first nonzero entry to 1
    for (mpz_class j = 0; j < q; ++j)
        for (mpz_class l = 0; l < q; ++l)
            for (mpz_class m2 = 0; m2 < q; ++m2) push_if(k->one(), k->element(j), k->element(l), k->element(m2));
    for (mpz_class l = 0; l < q; ++l)
        for (mpz_class m2 = 0; m2 < q; ++m2) push_if(k->zero(), k->one(), k->element(l), k->element(m2));
    return out;
}

ProjAction apply_aut(const Mat& g) {
    return g.k->characteristic() == 2 ? sigma_prime_action(g) : sigma_action(g);
}

CheckResult verify_action_homomorphism(const FieldPtr& k, std::uint64_t pair_budget, std::uint64_t seed) {
    CheckResult r;
    auto els = aut_group_elements(k);
    auto sym = (k->characteristic() == 2) ? sigma_prime_symbolic(k) : sigma_symbolic(k);
    std::vector<Mat> images;
    images.reserve(els.size());
    for (const auto& g : els) images.push_back(eval_matrix(sym, g));
    std::uint64_t total = static_cast<std::uint64_t>(els.size()) * els.size();
    auto check_pair = [&](size_t i, size_t j) {
        Mat gh = els[i].mul(els[j]);
        Mat lhs = images[i].mul(images[j]);
        Mat rhs = eval_matrix(sym, gh);
        if (!mats_proportional(lhs, rhs)) r.fail("homomorphism fails at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        // the induced plane action must compose the same way
        Mat pl = (k->characteristic() == 2) ? sigma_prime_plane_matrix(els[i]).mul(sigma_prime_plane_matrix(els[j]))
                                            : sigma_plane_matrix(els[i]).mul(sigma_plane_matrix(els[j]));
        Mat pr = (k->characteristic() == 2) ? sigma_prime_plane_matrix(gh) : sigma_plane_matrix(gh);
        if (!mats_proportional(pl, pr)) r.fail("plane action fails at pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    };
    if (total <= pair_budget) {
        for (size_t i = 0; i < els.size() && r.pass; ++i)
            for (size_t j = 0; j < els.size() && r.pass; ++j) check_pair(i, j);
        if (r.pass) r.detail = "exhaustive over " + std::to_string(els.size()) + " elements";
    } else {
        std::mt19937_64 rng(seed);
        for (std::uint64_t n = 0; n < pair_budget && r.pass; ++n) check_pair(rng() % els.size(), rng() % els.size());
        if (r.pass) r.detail = "seeded sample of " + std::to_string(pair_budget) + " pairs";
    }
    return r;
}

namespace {

// (sqrt2)-adic valuation of an element of Q(sqrt2); INT_MAX for zero
int sqrt2_valuation(const Elem& x) {
    auto v2 = [](const mpq_class& q) -> int {
        if (q == 0) return 1 << 28;
        mpz_class n = q.get_num(), d = q.get_den();
        return static_cast<int>(mpz_scan1(n.get_mpz_t(), 0)) - static_cast<int>(mpz_scan1(d.get_mpz_t(), 0));
    };
    const auto& co = x.coords();
    int v0 = 2 * v2(co[0].rat());
    int v1 = 2 * v2(co[1].rat()) + 1;
    return std::min(v0, v1);
}

int sqrt2_valuation_poly(const MPoly& p) {
    int v = 1 << 28;
    for (const auto& [e, c] : p.terms()) v = std::min(v, sqrt2_valuation(c));
    return v;
}

// remainder of f modulo ad - bc - 1 (characteristic 2: ad + bc + 1) by
// division with leading monomial ad; a single generator is a Groebner basis
// of its ideal, so a zero remainder decides membership
MPoly reduce_mod_det(MPoly f) {
    const FieldPtr& k = f.field();
    MPoly rel(k, 4);
    rel.add_term({1, 0, 0, 1}, k->one());
    rel.add_term({0, 1, 1, 0}, k->from_int(-1));
    rel.add_term({0, 0, 0, 0}, k->from_int(-1));
    while (true) {
        const std::map<MPoly::Exps, Elem>* terms = &f.terms();
        bool reduced = false;
        for (auto it = terms->rbegin(); it != terms->rend(); ++it) {
            const auto& e = it->first;
            if (e[0] == 0 || e[3] == 0) continue;
            MPoly quot(k, 4);
            MPoly::Exps q(e);
            q[0] -= 1;
            q[3] -= 1;
            quot.add_term(q, it->second);
            f = f - quot * rel;
            reduced = true;
            break;
        }
        if (!reduced) return f;
    }
}

} // namespace

CheckResult verify_sigma_tilde() {
    CheckResult r;
    FieldPtr Q = Field::rationals();
    std::vector<Elem> mp{Q->from_int(-2), Q->zero(), Q->one()}; // x^2 - 2
    FieldPtr K = Field::extension(Q, mp);
    Elem rt2 = K->gen();
    auto sym = sigma_symbolic(K);
    // conjugation by diag(1, sqrt2): (a, b, c, d) -> (a, b/sqrt2, sqrt2 c, d)
    Mat conj(K, 4, 4);
    conj.at(0, 0) = K->one();
    conj.at(1, 1) = rt2.inv();
    conj.at(2, 2) = rt2;
    conj.at(3, 3) = K->one();
    std::vector<std::vector<MPoly>> tilde(7);
    int minval = 1 << 28;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            MPoly e = sym[static_cast<size_t>(i)][static_cast<size_t>(j)].subst_linear(conj);
            minval = std::min(minval, sqrt2_valuation_poly(e));
            tilde[static_cast<size_t>(i)].push_back(std::move(e));
        }
    // clear the global scalar: all entries must become integral at (sqrt2)
    Elem scale = rt2.pow(-minval);
    FieldPtr F2 = Field::prime(2);
    auto sp = sigma_prime_symbolic(F2);
    // reduction of the cleared symbolic matrix modulo (sqrt2), where each
    // variable reduces to itself; compare against sigma' at squared entries
    for (int i = 0; i < 7 && r.pass; ++i)
        for (int j = 0; j < 7 && r.pass; ++j) {
            MPoly cleared = tilde[static_cast<size_t>(i)][static_cast<size_t>(j)].scale(scale);
            if (sqrt2_valuation_poly(cleared) < 0) {
                r.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is non-integral after clearing");
                continue;
            }
            MPoly red(F2, 4);
            for (const auto& [e, c] : cleared.terms()) {
                if (sqrt2_valuation(c) > 0) continue;
                red.add_term(e, F2->from_mpq(c.coords()[0].rat()));
            }
            // sigma'(F(g)) doubles every exponent
            MPoly expect(F2, 4);
            for (const auto& [e, c] : sp[static_cast<size_t>(i)][static_cast<size_t>(j)].terms()) {
                MPoly::Exps e2(e);
                for (auto& x : e2) x *= 2;
                expect.add_term(e2, c);
            }
            // agreement is required only on the group, i.e. modulo det = 1
            if (!reduce_mod_det(red - expect).is_zero())
                r.fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") reduces incorrectly");
        }
    // enumerated elements of the characteristic-2 automorphism group, lifted
    // to integral matrices
    FieldPtr F2k = Field::prime(2);
    for (const auto& g : aut_group_elements(F2k)) {
        Mat lift(K, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) lift.at(i, j) = K->from_int(static_cast<long>(g.at(i, j).residue()));
        Mat conjg(K, 2, 2);
        conjg.at(0, 0) = lift.at(0, 0);
        conjg.at(0, 1) = lift.at(0, 1) * rt2.inv();
        conjg.at(1, 0) = lift.at(1, 0) * rt2;
        conjg.at(1, 1) = lift.at(1, 1);
        Mat tg = eval_matrix(sym, conjg);
        int mv = 1 << 28;
        for (const Elem& x : tg.a)
            if (!x.is_zero()) mv = std::min(mv, sqrt2_valuation(x));
        Mat red(F2k, 7, 7);
        bool ok = true;
        for (int i = 0; i < 7 && ok; ++i)
            for (int j = 0; j < 7 && ok; ++j) {
                Elem x = tg.at(i, j) * rt2.pow(-mv);
                if (x.is_zero()) continue;
                int v = sqrt2_valuation(x);
                if (v < 0) ok = false;
                if (v == 0) red.at(i, j) = F2k->from_mpq(x.coords()[0].rat());
            }
        if (!ok) {
            r.fail("non-integral entry at an enumerated element");
            continue;
        }
        // Frobenius squares the entries; over F2 squaring is the identity on
        // scalars, so the same matrix is expected
        Mat expect = eval_matrix(sigma_prime_symbolic(F2k), g);
        if (!mats_proportional(red, expect)) r.fail("mod-(sqrt2) reduction mismatch at an enumerated element");
    }
    if (r.pass) r.detail = "symbolic integrality and 6 enumerated reductions";
    return r;
}

namespace {

std::string point_key(std::vector<Elem> c) {
    for (auto& x : c)
        if (!x.is_zero()) {
            Elem inv = x.inv();
            for (auto& y : c) y = y * inv;
            break;
        }
    std::string s;
    for (const auto& x : c) s += x.str() + "|";
    return s;
}

std::vector<std::vector<Elem>> proj_points(const FieldPtr& k, int n) {
    // all points of P^n(k), one representative each (leading 1 normalization)
    std::vector<std::vector<Elem>> pts;
    mpz_class q = k->size();
    std::vector<mpz_class> idx(static_cast<size_t>(n), 0);
    for (int lead = 0; lead <= n; ++lead) {
        size_t free_ct = static_cast<size_t>(n - lead);
        std::vector<mpz_class> cnt(free_ct, 0);
        while (true) {
            std::vector<Elem> p;
            for (int i = 0; i < lead; ++i) p.push_back(k->zero());
            p.push_back(k->one());
            for (size_t i = 0; i < free_ct; ++i) p.push_back(k->element(cnt[i]));
            pts.push_back(std::move(p));
            size_t pos = 0;
            while (pos < free_ct) {
                cnt[pos] += 1;
                if (cnt[pos] < q) break;
                cnt[pos] = 0;
                ++pos;
            }
            if (pos == free_ct) break;
            if (free_ct == 0) break;
        }
    }
    return pts;
}

} // namespace

CheckResult verify_orbit_table(const FieldPtr& k) {
    CheckResult r;
    Variety y = w5_variety(k);
    MPoly dv = w5_divisor(k);
    auto gens = aut_tangent_generators(k);
    for (const auto& o : orbit_table(k)) {
        if (!point_on_variety(o.rep, y)) r.fail(o.label + ": not on the variety");
        bool on_d = dv.eval(o.rep.c).is_zero();
        if (on_d != o.in_divisor) r.fail(o.label + ": divisor membership mismatch");
        int dim = tangent_orbit_dimension(gens, o.rep);
        if (dim == o.dim) continue;
        if (dim > o.dim || o.dim != 1 || o.closure.forms.empty() || !k->finite()) {
            r.fail(o.label + ": orbit dimension " + std::to_string(dim) + " expected " + std::to_string(o.dim));
            continue;
        }
        // the orbit parametrization is inseparable here and the tangent map
        // undershoots; certify dimension 1 directly. The group is connected,
        // so an orbit with two points inside a curve is the whole curve
        // minus lower strata, hence one-dimensional.
        std::set<std::string> translates;
        bool contained = true;
        for (const auto& g : aut_group_elements(k)) {
            PPoint q = act_point(apply_aut(g), o.rep);
            translates.insert(point_key(q.c));
            if (point_preimage_on_curve(q, o.closure).empty()) contained = false;
        }
        if (!contained) r.fail(o.label + ": a translate leaves the claimed closure");
        if (translates.size() < 2) r.fail(o.label + ": orbit not visibly positive-dimensional");
    }
    if (r.pass) r.detail = "orbit table verified";
    return r;
}

CheckResult verify_normalization(const FieldPtr& k, std::uint64_t seed) {
    CheckResult r;
    Variety y = w5_variety(k);
    MPoly dv = w5_divisor(k);
    if (k->characteristic() != 2) {
        auto nu = nu_map(k);
        // (i) identical vanishing of the quadrics and the divisor on the image
        for (const auto& g : y.gens)
            if (!g.subst(nu).is_zero()) r.fail("a quadric does not vanish on the normalization image");
        if (!dv.subst(nu).is_zero()) r.fail("the divisor form does not vanish on the normalization image");
        // (ii) equivariance at sampled group elements, fully symbolically
        if (k->finite()) {
            auto els = aut_group_elements(k);
            std::mt19937_64 rng(seed);
            size_t samples = std::min<size_t>(els.size(), 8);
            for (size_t n = 0; n < samples && r.pass; ++n) {
                const Mat& g = els[n == 0 ? 0 : rng() % els.size()];
                Mat big(k, 4, 4);
                big.at(0, 0) = g.at(0, 0);
                big.at(0, 2) = g.at(0, 1);
                big.at(2, 0) = g.at(1, 0);
                big.at(2, 2) = g.at(1, 1);
                big.at(1, 1) = g.at(0, 0);
                big.at(1, 3) = g.at(0, 1);
                big.at(3, 1) = g.at(1, 0);
                big.at(3, 3) = g.at(1, 1);
                std::vector<MPoly> lhs;
                for (const auto& comp : nu) lhs.push_back(comp.subst_linear(big));
                Mat sg = sigma_action(g).m;
                std::vector<MPoly> rhs;
                for (int i = 0; i < 7; ++i) {
                    MPoly acc(k, 4);
                    for (int j = 0; j < 7; ++j) acc = acc + nu[static_cast<size_t>(j)].scale(sg.at(i, j));
                    rhs.push_back(std::move(acc));
                }
                for (int i = 0; i < 7 && r.pass; ++i)
                    for (int j = i + 1; j < 7 && r.pass; ++j)
                        if (!(lhs[static_cast<size_t>(i)] * rhs[static_cast<size_t>(j)] ==
                              lhs[static_cast<size_t>(j)] * rhs[static_cast<size_t>(i)]))
                            r.fail("equivariance fails at a sampled element");
            }
        }
        // (iii) pointwise surjectivity over small fields
        if (k->finite() && k->size() <= 7) {
            std::set<std::string> image;
            auto p1 = proj_points(k, 1);
            for (const auto& xy : p1)
                for (const auto& uv : p1) {
                    std::vector<Elem> args{xy[0], uv[0], xy[1], uv[1]};
                    std::vector<Elem> img;
                    bool zero = true;
                    for (const auto& comp : nu) {
                        img.push_back(comp.eval(args));
                        zero = zero && img.back().is_zero();
                    }
                    if (!zero) image.insert(point_key(img));
                }
            std::set<std::string> target;
            for (const auto& p : proj_points(k, 6)) {
                bool on = dv.eval(p).is_zero();
                for (const auto& g : y.gens) on = on && g.eval(p).is_zero();
                if (on) target.insert(point_key(p));
            }
            if (image != target) r.fail("normalization image does not match the divisor point set");
        }
    } else {
        auto nu2 = nu_prime_map(k);
        for (const auto& g : y.gens)
            if (!g.subst(nu2).is_zero()) r.fail("a quadric does not vanish on the plane normalization image");
        if (!dv.subst(nu2).is_zero()) r.fail("the divisor form does not vanish on the plane normalization image");
        if (!curve_on_variety(twisted_cubic_orbit_closure(k), y)) r.fail("twisted-cubic stratum not on the variety");
        if (!curve_on_variety(exceptional_image_line(k), y)) r.fail("exceptional-image line not on the variety");
        if (k->finite() && k->size() <= 4) {
            // bijectivity on rational points: plane points away from the
            // center plus the exceptional curve
            std::vector<std::string> images;
            for (const auto& p : proj_points(k, 2)) {
                if (p[0].is_zero() && p[1].is_zero()) continue; // blowup center
                std::vector<Elem> img;
                for (const auto& comp : nu2) img.push_back(comp.eval(p));
                images.push_back(point_key(img));
            }
            CurveMap exc = exceptional_image_line(k);
            for (const auto& xy : proj_points(k, 1)) images.push_back(point_key(exc.eval(xy[0], xy[1])));
            std::set<std::string> image_set(images.begin(), images.end());
            if (image_set.size() != images.size()) r.fail("plane normalization not injective on rational points");
            std::set<std::string> target;
            for (const auto& p : proj_points(k, 6)) {
                bool on = dv.eval(p).is_zero();
                for (const auto& g : y.gens) on = on && g.eval(p).is_zero();
                if (on) target.insert(point_key(p));
            }
            if (image_set != target) r.fail("plane normalization not surjective on rational points");
        }
    }
    if (r.pass) r.detail = "normalization battery passed";
    return r;
}

CheckResult verify_named_lines_and_counts(const FieldPtr& k, unsigned ext_bound) {
    CheckResult r;
    Variety y = w5_variety(k);
    auto named = named_lines(k);
    for (const auto& nl : named) {
        if (nl.line.d != 1) {
            r.fail(nl.label + ": parametrization degree is not 1");
            continue;
        }
        Variety yk = nl.line.field()->same(k) ? y : y.convert(nl.line.field());
        if (!curve_on_variety(nl.line, yk)) r.fail(nl.label + ": line not on the variety");
    }
    for (const auto& o : orbit_table(k)) {
        auto found = lines_through_point(y, o.rep, ext_bound);
        if (static_cast<int>(found.size()) != o.line_count) {
            r.fail(o.label + ": found " + std::to_string(found.size()) + " lines, expected " + std::to_string(o.line_count));
            continue;
        }
        for (const auto& fl : found) {
            PPoint rep = o.rep.convert(fl.line.field());
            bool through = !point_preimage_on_curve(rep, fl.line).empty();
            Variety yk = fl.line.field()->same(k) ? y : y.convert(fl.line.field());
            if (!through || !curve_on_variety(fl.line, yk)) r.fail(o.label + ": a found line fails incidence");
        }
        // named-line matching at the representatives where the table applies
        for (const auto& nl : named) {
            PPoint rep = o.rep.convert(nl.line.field());
            if (point_preimage_on_curve(rep, nl.line).empty()) continue; // named line misses this point
            bool matched = false;
            for (const auto& fl : found) {
                if (!fl.line.field()->same(nl.line.field())) continue;
                if (curves_same_image(fl.line, nl.line)) matched = true;
            }
            if (!matched) r.fail(o.label + ": named line " + nl.label + " through the point was not found");
        }
    }
    if (r.pass) r.detail = "line table and counts verified";
    return r;
}

CheckResult verify_y_smooth(const FieldPtr& k) {
    CheckResult r;
    require(k->finite(), "verify_y_smooth: finite field required");
    Variety y = w5_variety(k);
    std::vector<std::vector<MPoly>> jac(5);
    for (size_t i = 0; i < 5; ++i)
        for (int j = 0; j < 7; ++j) jac[i].push_back(y.gens[i].deriv(j));
    for (const auto& p : proj_points(k, 6)) {
        bool on = true;
        for (const auto& g : y.gens) on = on && g.eval(p).is_zero();
        if (!on) continue;
        Mat m(k, 5, 7);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 7; ++j) m.at(i, j) = jac[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(p);
        if (kernel_and_rank(m).rank != 3) {
            r.fail("Jacobian rank != 3 at a rational point");
            return r;
        }
    }
    r.detail = "Jacobian rank 3 at every rational point";
    return r;
}

} // namespace fano
