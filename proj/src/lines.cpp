#include "fano/lines.hpp"

#include <stdexcept>

namespace fano {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::runtime_error(msg);
}

Elem eval_quadric(const MPoly& q, const std::vector<Elem>& x) { return q.eval(x); }

std::vector<Elem> add_vecs(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

std::vector<Elem> scale_vec(const std::vector<Elem>& a, const Elem& c) {
    std::vector<Elem> r(a);
    for (auto& x : r) x = x * c;
    return r;
}

// polarization, valid in all characteristics
Elem polar(const MPoly& q, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    return eval_quadric(q, add_vecs(a, b)) - eval_quadric(q, a) - eval_quadric(q, b);
}

// true iff x is fixed by the Frobenius of the degree-f subextension of kf
// over the base field of order q0
bool in_subfield(const Elem& x, const mpz_class& q0, unsigned f) {
    mpz_class e = 1;
    for (unsigned i = 0; i < f; ++i) e *= q0;
    return x.pow(e) == x;
}

bool point_in_subfield(std::vector<Elem> coords, const mpz_class& q0, unsigned f) {
    // normalize the representative so membership is coordinatewise
    for (size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) {
            Elem inv = coords[i].inv();
            for (auto& c : coords) c = c * inv;
            break;
        }
    for (const Elem& c : coords)
        if (!in_subfield(c, q0, f)) return false;
    return true;
}

std::vector<Elem> wconvert(const std::vector<Elem>& w, const FieldPtr& kf) {
    std::vector<Elem> r;
    r.reserve(w.size());
    for (const Elem& x : w) r.push_back(convert_elem(x, kf));
    return r;
}

FoundLine make_line(const PPoint& p, const std::vector<Elem>& second, const FieldPtr& kf) {
    std::vector<BinaryForm> forms;
    PPoint pk = p.convert(kf);
    for (size_t i = 0; i < second.size(); ++i) {
        BinaryForm f(kf, 1);
        f.coeff(0) = pk.c[i];
        f.coeff(1) = second[i];
        forms.push_back(std::move(f));
    }
    return {CurveMap(std::move(forms)), kf};
}

} // namespace

std::vector<FoundLine> lines_through_point(const Variety& v, const PPoint& p, unsigned ext_bound) {
    require(point_on_variety(p, v), "lines_through_point: point not on the variety");
    for (int d : v.degs) require(d == 2, "lines_through_point: generators must be quadrics");
    const FieldPtr& k = p.k;
    int n = v.n;

    // linear system B_q(P, .) = 0; row entries via q(P + e_j) - q(e_j)
    Mat sys(k, static_cast<int>(v.gens.size()), n + 1);
    for (size_t qi = 0; qi < v.gens.size(); ++qi)
        for (int j = 0; j <= n; ++j) {
            std::vector<Elem> ej(static_cast<size_t>(n) + 1, k->zero());
            ej[static_cast<size_t>(j)] = k->one();
            sys.at(static_cast<int>(qi), j) = eval_quadric(v.gens[qi], add_vecs(p.c, ej)) - eval_quadric(v.gens[qi], ej);
        }
    auto kr = kernel_and_rank(sys);

    // basis of the kernel modulo the direction of P
    int j0 = 0;
    while (p.c[static_cast<size_t>(j0)].is_zero()) ++j0;
    Elem pj0inv = p.c[static_cast<size_t>(j0)].inv();
    std::vector<std::vector<Elem>> ws;
    for (const auto& b : kr.kernel) {
        std::vector<Elem> w = add_vecs(b, scale_vec(p.c, -(b[static_cast<size_t>(j0)] * pj0inv)));
        bool zero = true;
        for (const Elem& x : w) zero = zero && x.is_zero();
        if (!zero) ws.push_back(std::move(w));
    }
    if (!ws.empty()) {
        // keep an independent subset
        Mat wm(k, static_cast<int>(ws.size()), n + 1);
        for (size_t i = 0; i < ws.size(); ++i)
            for (int j = 0; j <= n; ++j) wm.at(static_cast<int>(i), j) = ws[i][static_cast<size_t>(j)];
        std::vector<std::vector<Elem>> indep;
        int rank_so_far = 0;
        for (size_t i = 0; i < ws.size(); ++i) {
            Mat head(k, static_cast<int>(i) + 1, n + 1);
            for (size_t r = 0; r <= i; ++r)
                for (int j = 0; j <= n; ++j) head.at(static_cast<int>(r), j) = ws[r][static_cast<size_t>(j)];
            int rk = kernel_and_rank(head).rank;
            if (rk > rank_so_far) {
                indep.push_back(ws[i]);
                rank_so_far = rk;
            }
        }
        ws = std::move(indep);
    }

    std::vector<FoundLine> out;
    size_t c = ws.size();
    if (c == 0) return out;

    if (c == 1) {
        for (const MPoly& q : v.gens)
            if (!eval_quadric(q, ws[0]).is_zero()) return out;
        out.push_back(make_line(p, ws[0], k));
        return out;
    }

    if (c == 2) {
        // per quadric, a binary quadratic in the complement coordinates
        BinaryForm g;
        bool all_zero = true;
        for (const MPoly& q : v.gens) {
            BinaryForm bq(k, 2);
            bq.coeff(0) = eval_quadric(q, ws[0]);
            bq.coeff(1) = polar(q, ws[0], ws[1]);
            bq.coeff(2) = eval_quadric(q, ws[1]);
            if (bq.is_zero()) continue;
            all_zero = false;
            g = g.valid() ? bf_gcd(g, bq) : bq;
            if (g.degree() == 0) return out;
        }
        require(!all_zero, "lines_through_point: a whole plane of lines through the point");
        unsigned bound = k->finite() ? ext_bound : 1;
        for (unsigned e = 1; e <= bound; ++e) {
            FieldPtr kf = (e == 1) ? k : extension_of(k, e);
            BinaryForm ge = (e == 1) ? g : g.convert(kf);
            for (const auto& r : bf_roots(ge)) {
                if (e > 1) {
                    // skip roots already defined over a proper subextension
                    bool sub = false;
                    for (unsigned f = 1; f < e && !sub; ++f)
                        if (e % f == 0) sub = point_in_subfield({r.s, r.t}, k->size(), f);
                    if (sub) continue;
                }
                std::vector<Elem> second = add_vecs(scale_vec(wconvert(ws[0], kf), r.s), scale_vec(wconvert(ws[1], kf), r.t));
                out.push_back(make_line(p, second, kf));
            }
        }
        return out;
    }

    require(c == 3, "lines_through_point: candidate space too large");
    require(k->finite(), "lines_through_point: 3-dimensional candidate space needs a finite field");
    // Restricted quadrics cut conics on the candidate plane. Mix the basis so
    // that some conic is a unit at the third basis direction, then eliminate
    // the third coordinate by pairwise resultants and solve the remaining
    // quadratics; this keeps the work polynomial in the field size.
    {
        std::vector<std::vector<Elem>> cands = {{k->zero(), k->zero(), k->one()}};
        mpz_class cap = std::min(mpz_class(12), k->size());
        for (mpz_class j = 0; j < cap; ++j) cands.push_back({k->zero(), k->one(), k->element(j)});
        for (mpz_class i = 0; i < cap; ++i)
            for (mpz_class j = 0; j < cap; ++j) cands.push_back({k->one(), k->element(i), k->element(j)});
        std::vector<Elem> mix;
        for (const auto& cand : cands) {
            std::vector<Elem> w = add_vecs(add_vecs(scale_vec(ws[0], cand[0]), scale_vec(ws[1], cand[1])),
                                           scale_vec(ws[2], cand[2]));
            for (const MPoly& q : v.gens)
                if (!eval_quadric(q, w).is_zero()) {
                    mix = cand;
                    break;
                }
            if (!mix.empty()) break;
        }
        require(!mix.empty(), "lines_through_point: the candidate plane lies on the variety");
        // replace a basis vector carried with a nonzero weight in the mix
        size_t rep = !mix[2].is_zero() ? 2 : (!mix[1].is_zero() ? 1 : 0);
        std::vector<Elem> wmix = add_vecs(add_vecs(scale_vec(ws[0], mix[0]), scale_vec(ws[1], mix[1])),
                                          scale_vec(ws[2], mix[2]));
        if (rep != 2) std::swap(ws[rep], ws[2]);
        ws[2] = std::move(wmix);
    }
    // per quadric: a z2^2 + b(z0,z1) z2 + c(z0,z1)
    struct PlaneConic {
        Elem a;
        BinaryForm b, c;
    };
    std::vector<PlaneConic> conics;
    int pivot = -1;
    for (const MPoly& q : v.gens) {
        PlaneConic pc;
        pc.a = eval_quadric(q, ws[2]);
        pc.b = BinaryForm(k, 1);
        pc.b.coeff(0) = polar(q, ws[0], ws[2]);
        pc.b.coeff(1) = polar(q, ws[1], ws[2]);
        pc.c = BinaryForm(k, 2);
        pc.c.coeff(0) = eval_quadric(q, ws[0]);
        pc.c.coeff(1) = polar(q, ws[0], ws[1]);
        pc.c.coeff(2) = eval_quadric(q, ws[1]);
        if (pivot < 0 && !pc.a.is_zero()) pivot = static_cast<int>(conics.size());
        conics.push_back(std::move(pc));
    }
    require(pivot >= 0, "lines_through_point: no conic survives the basis mix");
    const PlaneConic& q1 = conics[static_cast<size_t>(pivot)];
    BinaryForm g;
    for (size_t i = 0; i < conics.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        const PlaneConic& q2 = conics[i];
        // resultant of two quadratics in z2 with binary-form coefficients
        BinaryForm ac = q2.c.scale(q1.a) - q1.c.scale(q2.a);
        BinaryForm ab = q2.b.scale(q1.a) - q1.b.scale(q2.a);
        BinaryForm bc = q1.b * q2.c - q2.b * q1.c;
        BinaryForm r = ac * ac - ab * bc;
        if (r.is_zero()) continue;
        g = g.valid() ? bf_gcd(g, r) : r;
        if (g.degree() == 0) return out;
    }
    require(g.valid(), "lines_through_point: every conic pair shares a component");
    for (unsigned e = 1; e <= ext_bound; ++e) {
        FieldPtr kf = (e == 1) ? k : extension_of(k, e);
        BinaryForm ge = (e == 1) ? g : g.convert(kf);
        std::vector<std::vector<Elem>> wk;
        for (const auto& w : ws) wk.push_back(wconvert(w, kf));
        for (const auto& r : bf_roots(ge)) {
            Elem a2 = convert_elem(q1.a, kf);
            Elem b2 = q1.b.convert(kf).eval(r.s, r.t);
            Elem c2 = q1.c.convert(kf).eval(r.s, r.t);
            for (const Elem& z2 : up::roots_in_field(kf, {c2, b2, a2})) {
                bool good = true;
                for (const PlaneConic& pc : conics) {
                    Elem val = convert_elem(pc.a, kf) * z2 * z2 + pc.b.convert(kf).eval(r.s, r.t) * z2 +
                               pc.c.convert(kf).eval(r.s, r.t);
                    if (!val.is_zero()) good = false;
                }
                if (!good) continue;
                if (e > 1) {
                    bool sub = false;
                    for (unsigned f = 1; f < e && !sub; ++f)
                        if (e % f == 0) sub = point_in_subfield({r.s, r.t, z2}, k->size(), f);
                    if (sub) continue;
                }
                std::vector<Elem> second = add_vecs(add_vecs(scale_vec(wk[0], r.s), scale_vec(wk[1], r.t)),
                                                    scale_vec(wk[2], z2));
                out.push_back(make_line(p, second, kf));
            }
        }
    }
    return out;
}

} // namespace fano
