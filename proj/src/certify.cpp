#include "fano/certify.hpp"

#include "fano/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fano {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::runtime_error(msg);
}

} // namespace

int quadratic_normality(const CurveMap& c) {
    const FieldPtr& k = c.field();
    int nv = c.n + 1;
    std::vector<BinaryForm> rows;
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j)
            rows.push_back(c.forms[static_cast<size_t>(i)] * c.forms[static_cast<size_t>(j)]);
    Mat m(k, static_cast<int>(rows.size()), 2 * c.d + 1);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j <= 2 * c.d; ++j) m.at(static_cast<int>(r), j) = rows[r].coeff(j);
    return static_cast<int>(rows.size()) - kernel_and_rank(m).rank;
}

bool quadric_smoothness(const Variety& v) {
    require(v.gens.size() == 1 && v.degs[0] == 2, "quadric_smoothness: need a single quadric");
    const MPoly& q = v.gens[0];
    const FieldPtr& k = q.field();
    int nv = v.n + 1;
    if (k->characteristic() != 2) {
        Mat gram(k, nv, nv);
        Elem half = k->from_int(2).inv();
        for (const auto& [e, coef] : q.terms()) {
            int i = -1, j = -1;
            for (int t = 0; t < nv; ++t) {
                for (unsigned rep = 0; rep < e[static_cast<size_t>(t)]; ++rep) {
                    if (i < 0)
                        i = t;
                    else
                        j = t;
                }
            }
            if (i == j || j < 0) {
                gram.at(i, i) = gram.at(i, i) + coef;
            } else {
                gram.at(i, j) = gram.at(i, j) + coef * half;
                gram.at(j, i) = gram.at(j, i) + coef * half;
            }
        }
        return !mat_det(std::move(gram)).is_zero();
    }
    // characteristic 2: partials are linear; the singular candidate locus is
    // their common projective zero set
    Mat sys(k, nv, nv);
    for (int i = 0; i < nv; ++i) {
        MPoly di = q.deriv(i);
        for (const auto& [e, coef] : di.terms())
            for (int j = 0; j < nv; ++j)
                if (e[static_cast<size_t>(j)] == 1) sys.at(i, j) = coef;
    }
    auto kr = kernel_and_rank(sys);
    int kdim = nv - kr.rank;
    if (kdim == 0) return true;
    // a positive-dimensional candidate locus always meets the quadric over
    // the algebraic closure
    if (kdim >= 2) return false;
    return !q.eval(kr.kernel.front()).is_zero();
}

// ---------------------------------------------------------------------------
// integer binary forms: coefficient index = second-variable power

namespace {

using ZForm = std::vector<mpz_class>; // size = declared degree + 1

ZForm zf_mul(const ZForm& a, const ZForm& b) {
    ZForm r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

bool zf_zero(const ZForm& a) {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

// d/ds and d/dt of sum c_i s^(d-i) t^i
ZForm zf_ds(const ZForm& f) {
    int d = static_cast<int>(f.size()) - 1;
    ZForm r(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] * (d - i);
    return r;
}

ZForm zf_dt(const ZForm& f) {
    int d = static_cast<int>(f.size()) - 1;
    ZForm r(static_cast<size_t>(d), 0);
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = f[static_cast<size_t>(i + 1)] * (i + 1);
    return r;
}

ZForm zf_sub(const ZForm& a, const ZForm& b) {
    ZForm r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

BinaryForm zf_to_bf(const ZForm& f, const FieldPtr& k) {
    BinaryForm r(k, static_cast<int>(f.size()) - 1);
    for (size_t i = 0; i < f.size(); ++i) r.coeff(static_cast<int>(i)) = k->from_mpz(f[i]);
    return r;
}

// bihomogeneous integer form in (s,t) x (u,v); entry [a][b] holds the
// coefficient of s^(d1-a) t^a u^(d2-b) v^b
using ZBiForm = std::vector<ZForm>;

// exact division of g (bidegree (d,d), vanishing on the diagonal) by sv - tu
ZBiForm divide_by_diagonal(const ZBiForm& g) {
    int d = static_cast<int>(g.size()) - 1;
    ZBiForm q(static_cast<size_t>(d), ZForm(static_cast<size_t>(d), 0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            mpz_class acc = 0;
            for (int i = 0; i <= a && b + 1 + i <= d; ++i) acc += g[static_cast<size_t>(a - i)][static_cast<size_t>(b + 1 + i)];
            q[static_cast<size_t>(a)][static_cast<size_t>(b)] = acc;
        }
    // verify q * (sv - tu) == g
    ZBiForm chk(static_cast<size_t>(d) + 1, ZForm(static_cast<size_t>(d) + 1, 0));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            chk[static_cast<size_t>(a)][static_cast<size_t>(b) + 1] += q[static_cast<size_t>(a)][static_cast<size_t>(b)];
            chk[static_cast<size_t>(a) + 1][static_cast<size_t>(b)] -= q[static_cast<size_t>(a)][static_cast<size_t>(b)];
        }
    for (int a = 0; a <= d; ++a)
        for (int b = 0; b <= d; ++b)
            require(chk[static_cast<size_t>(a)][static_cast<size_t>(b)] == g[static_cast<size_t>(a)][static_cast<size_t>(b)],
                    "collision form not divisible by the diagonal");
    return q;
}

bool zbi_zero(const ZBiForm& h) {
    for (const auto& row : h)
        if (!zf_zero(row)) return false;
    return true;
}

// specialize the first parameter pair of h at (s0:t0) over a field
BinaryForm specialize_first(const ZBiForm& h, const Elem& s0, const Elem& t0) {
    const FieldPtr& k = s0.field();
    int d1 = static_cast<int>(h.size()) - 1;
    int d2 = static_cast<int>(h.front().size()) - 1;
    std::vector<Elem> spow(static_cast<size_t>(d1) + 1, k->one()), tpow(static_cast<size_t>(d1) + 1, k->one());
    for (int i = 1; i <= d1; ++i) {
        spow[static_cast<size_t>(i)] = spow[static_cast<size_t>(i - 1)] * s0;
        tpow[static_cast<size_t>(i)] = tpow[static_cast<size_t>(i - 1)] * t0;
    }
    BinaryForm out(k, d2);
    for (int b = 0; b <= d2; ++b) {
        Elem acc = k->zero();
        for (int a = 0; a <= d1; ++a)
            acc = acc + k->from_mpz(h[static_cast<size_t>(a)][static_cast<size_t>(b)]) * spow[static_cast<size_t>(d1 - a)] * tpow[static_cast<size_t>(a)];
        out.coeff(b) = acc;
    }
    return out;
}

// integer resultant of two integer binary forms with their declared degrees
mpz_class zf_resultant(const ZForm& f, const ZForm& g) {
    zp::ZPoly pf(f.begin(), f.end()), pg(g.begin(), g.end());
    return zp::sylvester_resultant(pf, pg, static_cast<int>(f.size()) - 1, static_cast<int>(g.size()) - 1);
}

// evaluate h at integer (1, t0) in the first pair, producing an integer form in (u,v)
ZForm specialize_first_int(const ZBiForm& h, long t0) {
    int d1 = static_cast<int>(h.size()) - 1;
    int d2 = static_cast<int>(h.front().size()) - 1;
    std::vector<mpz_class> tpow(static_cast<size_t>(d1) + 1, 1);
    for (int i = 1; i <= d1; ++i) tpow[static_cast<size_t>(i)] = tpow[static_cast<size_t>(i - 1)] * t0;
    ZForm out(static_cast<size_t>(d2) + 1, 0);
    for (int b = 0; b <= d2; ++b)
        for (int a = 0; a <= d1; ++a) out[static_cast<size_t>(b)] += h[static_cast<size_t>(a)][static_cast<size_t>(b)] * tpow[static_cast<size_t>(a)];
    return out;
}

// Res_{(u,v)}(h1, h2) as an integer binary form of degree 2 d2 (d1 + ... ),
// computed by evaluation of the first pair and exact interpolation
ZForm resultant_in_second(const ZBiForm& h1, const ZBiForm& h2) {
    int d1 = static_cast<int>(h1.size()) - 1;
    int d2a = static_cast<int>(h1.front().size()) - 1;
    int d2b = static_cast<int>(h2.front().size()) - 1;
    int deg = d1 * (d2a + d2b); // degree of the resultant in (s,t)
    std::vector<mpq_class> ts, ys;
    for (int m = 0; m <= deg; ++m) {
        long t0 = m - deg / 2;
        mpz_class val = zf_resultant(specialize_first_int(h1, t0), specialize_first_int(h2, t0));
        ts.emplace_back(t0);
        ys.emplace_back(val);
    }
    // Newton interpolation over Q
    std::vector<mpq_class> coef(ys); // divided differences
    for (size_t j = 1; j < coef.size(); ++j)
        for (size_t i = coef.size() - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (ts[i] - ts[i - j]);
            coef[i].canonicalize();
            if (i == j) break;
        }
    // expand to monomial coefficients
    std::vector<mpq_class> poly{coef.back()};
    for (size_t i = coef.size() - 1; i-- > 0;) {
        // poly = poly * (t - ts[i]) + coef[i]
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * ts[i];
        }
        next[0] += coef[i];
        for (auto& c : next) c.canonicalize();
        poly = std::move(next);
    }
    ZForm out(static_cast<size_t>(deg) + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
        require(poly[i].get_den() == 1, "resultant interpolation produced a non-integer");
        out[i] = poly[i].get_num();
    }
    return out;
}

// degrees e such that the squarefree part of f has an irreducible factor of
// degree e over its (finite) coefficient field
std::vector<unsigned> factor_degrees(const FieldPtr& k, up::Poly f) {
    std::vector<unsigned> out;
    f = up::monic(f);
    // remove repeated factors degree by degree instead of a derivative-based
    // squarefree step (safe in small characteristic)
    up::Poly x = up::x_power(k, 1);
    unsigned e = 0;
    while (up::deg(f) > 0) {
        ++e;
        if (static_cast<int>(e) > up::deg(f)) break;
        mpz_class qe = 1;
        for (unsigned i = 0; i < e; ++i) qe *= k->size();
        up::Poly frob = up::powmod(k, x, qe, f);
        up::Poly g = up::gcd_monic(k, up::sub(k, frob, x), f);
        if (up::deg(g) > 0) {
            out.push_back(e);
            while (true) {
                auto [q, r] = up::divmod(k, f, g);
                if (!up::is_zero(r)) break;
                f = up::trim(std::move(q));
                if (up::deg(f) < up::deg(g)) break;
            }
        }
    }
    return out;
}

// all roots of a binary form over a finite field in extensions listed by
// factor_degrees, with a scan cap; sets ok=false when the cap is exceeded
struct ExtRoot {
    FieldPtr field;
    Elem s, t;
    unsigned ext = 1;
};

std::vector<ExtRoot> roots_all_extensions(const BinaryForm& g, unsigned ext_degree_cap, bool& ok) {
    ok = true;
    const FieldPtr& k = g.field();
    std::vector<ExtRoot> out;
    int d = g.degree();
    // coordinate-point roots come from the extreme coefficients
    if (g.coeff(0).is_zero()) out.push_back({k, k->one(), k->zero(), 1});
    if (g.coeff(d).is_zero()) out.push_back({k, k->zero(), k->one(), 1});
    // dehomogenized polynomial in x = s/t: coefficient of x^j is coeff(d - j)
    up::Poly core;
    {
        int b = 0;
        while (g.coeff(b).is_zero()) ++b;
        int a = 0;
        while (g.coeff(d - a).is_zero()) ++a;
        for (int i = d - a; i >= b; --i) core.push_back(g.coeff(i));
    }
    if (up::deg(core) <= 0) return out;
    for (Elem x0 : up::roots_in_field(k, core)) out.push_back({k, x0, k->one(), 1});
    for (unsigned e : factor_degrees(k, core)) {
        if (e == 1) continue;
        if (e > ext_degree_cap) {
            ok = false;
            continue;
        }
        FieldPtr kf = extension_of(k, e);
        up::Poly lifted;
        for (const auto& c : core) lifted.push_back(kf->embed(c));
        for (Elem x0 : up::roots_in_field(kf, lifted)) {
            // report each root once, in its minimal extension level
            bool minimal = true;
            for (unsigned f = 1; f < e && minimal; ++f) {
                if (e % f != 0) continue;
                mpz_class qf = 1;
                for (unsigned i = 0; i < f; ++i) qf *= k->size();
                if (x0.pow(qf) == x0) minimal = false;
            }
            if (minimal) out.push_back({kf, x0, kf->one(), e});
        }
    }
    return out;
}

std::string point_pair_str(const Elem& s0, const Elem& t0, const Elem& u0, const Elem& v0) {
    std::ostringstream os;
    os << "(" << s0.str() << ":" << t0.str() << ") and (" << u0.str() << ":" << v0.str() << ")";
    return os.str();
}

} // namespace

SmoothCertificate certify_curve_smooth_general(const CurveMap& c) {
    SmoothCertificate cert;
    require(c.field()->kind() == Field::Kind::Rationals, "certify_curve_smooth_general: curve must be given over Q");
    if (c.d == 1) {
        cert.status = rnc_rank(c) == 2 ? SmoothCertificate::Status::Pass : SmoothCertificate::Status::Fail;
        cert.detail = "degree 1";
        return cert;
    }

    // clear denominators and integer content
    int nf = c.n + 1, d = c.d;
    std::vector<ZForm> F(static_cast<size_t>(nf), ZForm(static_cast<size_t>(d) + 1, 0));
    {
        mpz_class den = 1;
        for (const auto& f : c.forms)
            for (int i = 0; i <= d; ++i) den = lcm(den, f.coeff(i).rat().get_den());
        mpz_class cont = 0;
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j <= d; ++j) {
                mpq_class v = c.forms[static_cast<size_t>(i)].coeff(j).rat() * den;
                v.canonicalize();
                F[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.get_num();
                cont = gcd(cont, v.get_num());
            }
        for (auto& f : F)
            for (auto& x : f) x /= cont;
    }
    FieldPtr Q = Field::rationals();

    // ---- part (i): immersion --------------------------------------------------
    // the pure derivative minors vanish identically mod p whenever p divides
    // the degree (Euler relation), so ramification is tested with the forms
    // f_j df_i - f_i df_j in each variable, which work in every characteristic
    std::vector<ZForm> minors;
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            ZForm ws = zf_sub(zf_mul(zf_ds(F[static_cast<size_t>(i)]), F[static_cast<size_t>(j)]),
                              zf_mul(F[static_cast<size_t>(i)], zf_ds(F[static_cast<size_t>(j)])));
            if (!zf_zero(ws)) minors.push_back(std::move(ws));
            ZForm wt = zf_sub(zf_mul(zf_dt(F[static_cast<size_t>(i)]), F[static_cast<size_t>(j)]),
                              zf_mul(F[static_cast<size_t>(i)], zf_dt(F[static_cast<size_t>(j)])));
            if (!zf_zero(wt)) minors.push_back(std::move(wt));
        }
    if (minors.empty()) {
        cert.detail = "derivative matrix has rank <= 1 identically";
        cert.status = SmoothCertificate::Status::Fail;
        return cert;
    }
    {
        BinaryForm g;
        for (const auto& m : minors) {
            BinaryForm bm = zf_to_bf(m, Q);
            g = g.valid() ? bf_gcd(g, bm) : bm;
            if (g.degree() == 0) break;
        }
        if (g.degree() > 0) {
            cert.status = SmoothCertificate::Status::Fail;
            cert.detail = "critical parameter over Q: common factor " + g.str();
            return cert;
        }
    }
    // candidate primes for immersion and base-point freeness
    std::vector<mpz_class> candidates;
    auto add_candidates_from = [&](const mpz_class& r) -> bool {
        auto fac = zp::factor_for_candidates(r, 1000000);
        if (!fac.complete) return false;
        for (const auto& p : fac.primes) candidates.push_back(p);
        return true;
    };
    {
        mpz_class r = 0;
        for (size_t a = 0; a < minors.size() && r == 0; ++a)
            for (size_t b = a + 1; b < minors.size() && r == 0; ++b) r = zf_resultant(minors[a], minors[b]);
        if (r == 0) {
            cert.detail = "all pairwise minor resultants vanish";
            return cert;
        }
        if (!add_candidates_from(r)) {
            cert.detail = "minor resultant does not factor within the trial bound";
            return cert;
        }
        mpz_class rf = 0;
        for (int a = 0; a < nf && rf == 0; ++a)
            for (int b = a + 1; b < nf && rf == 0; ++b) rf = zf_resultant(F[static_cast<size_t>(a)], F[static_cast<size_t>(b)]);
        if (rf == 0) {
            cert.detail = "all pairwise coordinate resultants vanish";
            return cert;
        }
        if (!add_candidates_from(rf)) {
            cert.detail = "coordinate resultant does not factor within the trial bound";
            return cert;
        }
    }

    // ---- part (ii): injectivity via the collision system -------------------
    std::vector<ZBiForm> H;
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            ZBiForm g(static_cast<size_t>(d) + 1, ZForm(static_cast<size_t>(d) + 1, 0));
            for (int a = 0; a <= d; ++a)
                for (int b = 0; b <= d; ++b)
                    g[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                        F[static_cast<size_t>(i)][static_cast<size_t>(a)] * F[static_cast<size_t>(j)][static_cast<size_t>(b)] -
                        F[static_cast<size_t>(j)][static_cast<size_t>(a)] * F[static_cast<size_t>(i)][static_cast<size_t>(b)];
            if (!zbi_zero(g)) H.push_back(divide_by_diagonal(g));
        }
    if (H.empty()) {
        cert.status = SmoothCertificate::Status::Fail;
        cert.detail = "all coordinates proportional";
        return cert;
    }
    ZForm R1, R2;
    mpz_class rr = 0;
    for (size_t a = 0; a < H.size() && rr == 0; ++a) {
        ZForm Ra = resultant_in_second(H[a], H[(a + 1) % H.size()]);
        if (zf_zero(Ra)) continue;
        for (size_t b = 0; b < H.size() && rr == 0; ++b) {
            if (b == a || b == (a + 1) % H.size()) continue;
            ZForm Rb = resultant_in_second(H[a], H[b]);
            if (zf_zero(Rb)) continue;
            rr = zf_resultant(Ra, Rb);
            if (rr != 0) {
                R1 = Ra;
                R2 = Rb;
            }
        }
        if (rr == 0 && !zf_zero(Ra)) {
            R1 = Ra; // keep one nonzero eliminant for the failure analysis
        }
    }
    const unsigned ext_degree_cap = 24;
    if (rr == 0) {
        // collisions exist over the closure of Q, or the eliminants are too
        // degenerate to bound primes; look for a rational witness
        if (!zf_zero(R1)) {
            BinaryForm r1q = zf_to_bf(R1, Q);
            for (const auto& root : bf_roots(r1q)) {
                BinaryForm spec;
                bool first = true;
                for (const auto& h : H) {
                    BinaryForm s = specialize_first(h, root.s, root.t);
                    if (s.is_zero()) continue;
                    spec = first ? s : bf_gcd(spec, s);
                    first = false;
                    if (spec.degree() == 0) break;
                }
                if (first || !spec.valid() || spec.degree() == 0) continue;
                for (const auto& part : bf_roots(spec)) {
                    if (vectors_proportional({root.s, root.t}, {part.s, part.t})) continue;
                    cert.status = SmoothCertificate::Status::Fail;
                    cert.detail = "collision over Q at " + point_pair_str(root.s, root.t, part.s, part.t);
                    return cert;
                }
            }
        }
        cert.detail = "collision eliminants vanish; no rational witness found";
        return cert;
    }
    if (!add_candidates_from(rr)) {
        cert.detail = "collision resultant does not factor within the trial bound";
        return cert;
    }

    // ---- per-prime explicit checks ------------------------------------------
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const mpz_class& pz : candidates) {
        if (pz.fits_ulong_p() == 0) {
            cert.detail = "candidate prime exceeds the machine-word bound: " + pz.get_str();
            return cert;
        }
        FieldPtr kp = Field::prime(pz.get_ui());
        // base-point freeness and immersion mod p
        {
            BinaryForm g;
            bool all_zero = true;
            for (const auto& f : F) {
                BinaryForm bf = zf_to_bf(f, kp);
                if (bf.is_zero()) continue;
                all_zero = false;
                g = g.valid() ? bf_gcd(g, bf) : bf;
                if (g.degree() == 0) break;
            }
            if (all_zero || g.degree() > 0) {
                cert.status = SmoothCertificate::Status::Fail;
                cert.detail = "base point mod " + pz.get_str();
                return cert;
            }
        }
        {
            BinaryForm g;
            bool all_zero = true;
            for (const auto& m : minors) {
                BinaryForm bm = zf_to_bf(m, kp);
                if (bm.is_zero()) continue;
                all_zero = false;
                g = g.valid() ? bf_gcd(g, bm) : bm;
                if (g.degree() == 0) break;
            }
            if (all_zero || g.degree() > 0) {
                cert.status = SmoothCertificate::Status::Fail;
                cert.detail = "critical parameter mod " + pz.get_str();
                return cert;
            }
        }
        // collision search mod p
        BinaryForm r1p = zf_to_bf(R1, kp), r2p = zf_to_bf(R2, kp);
        BinaryForm gp;
        if (r1p.is_zero() && r2p.is_zero()) {
            cert.detail = "both eliminants vanish mod " + pz.get_str();
            return cert;
        }
        if (r1p.is_zero())
            gp = r2p;
        else if (r2p.is_zero())
            gp = r1p;
        else
            gp = bf_gcd(r1p, r2p);
        if (gp.degree() == 0) continue;
        bool cap_ok = true;
        auto roots = roots_all_extensions(gp, ext_degree_cap, cap_ok);
        if (!cap_ok) {
            cert.detail = "collision locus mod " + pz.get_str() + " needs an extension beyond the scan cap";
            return cert;
        }
        for (const auto& root : roots) {
            const FieldPtr& kf = root.field;
            BinaryForm spec;
            bool first = true;
            for (const auto& h : H) {
                BinaryForm s = specialize_first(h, root.s, root.t);
                if (s.is_zero()) continue;
                spec = first ? s : bf_gcd(spec, s);
                first = false;
                if (spec.degree() == 0) break;
            }
            if (first) {
                // every h vanishes at this parameter: either a base point or a
                // globally collapsing map; both contradict the checks above
                cert.status = SmoothCertificate::Status::Fail;
                cert.detail = "degenerate collision fiber mod " + pz.get_str();
                return cert;
            }
            if (!spec.valid() || spec.degree() == 0) continue;
            bool cap2 = true;
            auto partners = roots_all_extensions(spec, ext_degree_cap, cap2);
            if (!cap2) {
                cert.detail = "collision partner mod " + pz.get_str() + " needs an extension beyond the scan cap";
                return cert;
            }
            for (const auto& part : partners) {
                // work in the larger of the two fields
                const FieldPtr& kk = part.field;
                Elem s0 = kk->same(kf) ? root.s : kk->embed(root.s);
                Elem t0 = kk->same(kf) ? root.t : kk->embed(root.t);
                if (vectors_proportional({s0, t0}, {part.s, part.t})) continue;
                std::vector<Elem> va, vb;
                for (const auto& f : F) {
                    BinaryForm bf = zf_to_bf(f, kk);
                    va.push_back(bf.eval(s0, t0));
                    vb.push_back(bf.eval(part.s, part.t));
                }
                if (vectors_proportional(va, vb)) {
                    cert.status = SmoothCertificate::Status::Fail;
                    cert.detail = "collision mod " + pz.get_str() + " at " + point_pair_str(s0, t0, part.s, part.t);
                    return cert;
                }
            }
        }
    }
    cert.status = SmoothCertificate::Status::Pass;
    cert.candidate_primes = candidates;
    return cert;
}

CurveMap integral_model_sextic(const FieldPtr& k) {
    auto bf = [&](std::vector<long> coeffs) {
        BinaryForm f(k, 6);
        for (int i = 0; i <= 6; ++i) f.coeff(i) = k->from_int(coeffs[static_cast<size_t>(i)]);
        return f;
    };
    return CurveMap({bf({0, 0, 0, 0, 0, 0, -1}), bf({1, 1, 0, 2, 0, 0, 1}), bf({0, 0, -1, 0, 0, 0, 0}),
                     bf({1, 0, 2, 0, 0, 1, 0}), bf({0, 1, 0, 1, 0, 0, 1})});
}

Variety integral_model_quadric(const FieldPtr& k) {
    MPoly q(k, 5);
    q.add_term({1, 1, 0, 0, 0}, k->one());
    q.add_term({0, 0, 1, 1, 0}, k->one());
    q.add_term({0, 0, 0, 0, 2}, k->one());
    return Variety(4, {q});
}

} // namespace fano
