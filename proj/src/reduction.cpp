#include "fano/reduction.hpp"

#include "fano/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fano {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::runtime_error(msg);
}

long mpz_valuation(const mpz_class& x, unsigned long p) {
    mpz_class rem;
    return static_cast<long>(mpz_remove(rem.get_mpz_t(), x.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

bool is_prime(unsigned long p) {
    return mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) != 0;
}

// residue of a p-integral rational mod m (the denominator must be prime to m)
mpz_class residue_mod(const mpq_class& x, const mpz_class& m) {
    mpz_class num = x.get_num() % m, den = x.get_den() % m, inv;
    if (num < 0) num += m;
    require(mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) != 0, "residue_mod: denominator not invertible");
    return num * inv % m;
}

int legendre(const mpq_class& u, unsigned long p) {
    mpz_class m(p);
    mpz_class r = residue_mod(u, m);
    mpz_class e = (m - 1) / 2, v;
    mpz_powm(v.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return v == 1 ? 1 : -1;
}

// strip all powers of p from a rational; returns the unit part
mpq_class unit_part(const mpq_class& x, unsigned long p, long& val) {
    mpz_class num, den;
    long vn = static_cast<long>(mpz_remove(num.get_mpz_t(), x.get_num().get_mpz_t(), mpz_class(p).get_mpz_t()));
    long vd = static_cast<long>(mpz_remove(den.get_mpz_t(), x.get_den().get_mpz_t(), mpz_class(p).get_mpz_t()));
    val = vn - vd;
    mpq_class u(num, den);
    u.canonicalize();
    return u;
}

bool is_s_unit(const mpq_class& x, const std::vector<unsigned long>& s) {
    if (x == 0) return false;
    mpz_class num = abs(x.get_num()), den = x.get_den(), rem;
    for (unsigned long p : s) {
        mpz_remove(rem.get_mpz_t(), num.get_mpz_t(), mpz_class(p).get_mpz_t());
        num = rem;
        mpz_remove(rem.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
        den = rem;
    }
    return num == 1 && den == 1;
}

} // namespace

long padic_valuation(const mpq_class& x, unsigned long p) {
    require(x != 0, "padic_valuation: zero input");
    return mpz_valuation(x.get_num(), p) - mpz_valuation(x.get_den(), p);
}

ReductionOutcome classify_ga_reduction(const mpq_class& xi, unsigned long p) {
    require(xi != 0, "classify_ga_reduction: the zero parameter is the dense-orbit family");
    ReductionOutcome out;
    if (p == 2 || p == 5) return out;
    long v = padic_valuation(xi, p);
    if (v < 0) return out;
    FieldPtr kp = Field::prime(p);
    if (v > 0)
        out.standard = Fiber{FiberKind::MU, Elem{}};
    else
        out.standard = Fiber{FiberKind::Ga, kp->from_mpq(xi)};
    return out;
}

ReductionOutcome classify_split_gm_reduction(const mpq_class& u, unsigned long p) {
    require(u != 0 && u != 1 && u != mpq_class(5, 4), "classify_split_gm_reduction: excluded parameter");
    ReductionOutcome out;
    FieldPtr kp = Field::prime(p);
    if (padic_valuation(u, p) == 0 && padic_valuation(u - 1, p) == 0) {
        Elem ub = kp->from_mpq(u);
        // the coincidence ubar = 5/4 is tested multiplicatively so that
        // characteristic 2 never divides by 4
        if (kp->from_int(4) * ub == kp->from_int(5))
            out.standard = Fiber{FiberKind::MU, Elem{}};
        else
            out.standard = Fiber{FiberKind::Gm, ub};
    }
    if (p != 2 && p != 5) {
        long c = padic_valuation(u - mpq_class(5, 4), p);
        if (c >= 4) {
            for (long vb = -1; vb >= -(c / 4); --vb) out.twisted_witness_vals.push_back(vb);
            long vb = -(c / 4);
            out.twisted_default_witness = vb;
            if (c == -4 * vb) {
                // xi = 16 b^4 (u - 5/4) with b = p^vb
                mpq_class b = 1;
                for (long i = 0; i < -vb; ++i) b /= static_cast<long>(p);
                mpq_class xi = 16 * b * b * b * b * (u - mpq_class(5, 4));
                out.twisted = Fiber{FiberKind::Ga, kp->from_mpq(xi)};
            } else {
                out.twisted = Fiber{FiberKind::MU, Elem{}};
            }
        }
    }
    return out;
}

namespace {

// scale the tuple so the minimal p-adic valuation over all coefficients is 0,
// then reduce mod p
std::vector<BinaryForm> reduce_primitive(const std::vector<BinaryForm>& forms, unsigned long p,
                                         const FieldPtr& kp) {
    const FieldPtr& q = forms[0].field();
    long m = 0;
    bool first = true;
    for (const auto& f : forms)
        for (const Elem& e : f.coeffs())
            if (!e.is_zero()) {
                long v = padic_valuation(e.rat(), p);
                m = first ? v : std::min(m, v);
                first = false;
            }
    require(!first, "flat_limit: zero curve");
    mpq_class scale = 1;
    for (long i = 0; i < (m > 0 ? m : -m); ++i)
        if (m > 0)
            scale /= static_cast<long>(p);
        else
            scale *= static_cast<long>(p);
    std::vector<BinaryForm> out;
    for (const auto& f : forms) out.push_back(f.scale(q->from_mpq(scale)).convert(kp));
    return out;
}

// The naive reduction of the parametrization can collapse even though the
// scheme closure stays a quintic: the limit of the map differs from the
// limit of the image. Reparametrizing the source over Q leaves the curve
// unchanged, so we zoom toward a common root of the reduced tuple until the
// reduction becomes primitive; a primitive reduction of full degree and span
// is the special fiber of the closure.
bool limit_search(const std::vector<BinaryForm>& forms, unsigned long p, const FieldPtr& kp,
                  int depth, CurveMap& out) {
    if (depth <= 0) return false;
    std::vector<BinaryForm> red = reduce_primitive(forms, p, kp);
    BinaryForm common = red[0];
    for (size_t i = 1; i < red.size(); ++i) common = bf_gcd(common, red[i]);
    if (common.degree() == 0 || common.is_zero()) {
        CurveMap c(std::move(red));
        if (c.stripped_degree > 0 || c.d != 5 || rnc_rank(c) < 6) return false;
        out = std::move(c);
        return true;
    }
    const FieldPtr& q = forms[0].field();
    for (const BFRoot& r : bf_roots(common)) {
        // substitute (s, t) -> (p s + a t, t) for a root (a : 1), or
        // (s, t) -> (s, p t) for the root at infinity
        std::vector<BinaryForm> next;
        Elem a = q->zero();
        if (!r.t.is_zero()) {
            Elem root = r.s / r.t;
            for (mpz_class i = 0; i < kp->size(); ++i)
                if (kp->from_mpz(i) == root) {
                    a = q->from_mpz(i);
                    break;
                }
        }
        Elem pp = q->from_int(static_cast<long>(p));
        for (const auto& f : forms)
            next.push_back(r.t.is_zero() ? f.compose(q->one(), q->zero(), q->zero(), pp)
                                         : f.compose(pp, a, q->zero(), q->one()));
        if (limit_search(next, p, kp, depth - 1, out)) return true;
    }
    return false;
}

} // namespace

FlatLimit flat_limit(const QuinticSpec& spec, const Mat& g, unsigned long p) {
    require(p != 2, "flat_limit: the odd-characteristic action is used for the translation");
    FieldPtr q = Field::rationals();
    CurveMap c = build_quintic(spec, q);
    c = act_curve(apply_aut(g.convert(q)), c);
    FieldPtr kp = Field::prime(p);
    FlatLimit out;
    if (limit_search(c.forms, p, kp, 40, out.curve)) {
        out.degenerate = false;
        return out;
    }
    out.curve = CurveMap(reduce_primitive(c.forms, p, kp));
    out.degenerate = true;
    return out;
}

SUnitSolutionSet s_unit_equation(const std::vector<unsigned long>& s, long bound) {
    require(bound >= 1, "s_unit_equation: bound must be positive");
    SUnitSolutionSet out;
    out.s = s;
    out.bound = bound;
    std::vector<long> exps(s.size(), -bound);
    auto value = [&](int sign) {
        mpq_class u = sign;
        for (size_t i = 0; i < s.size(); ++i)
            for (long e = 0; e < std::abs(exps[i]); ++e)
                if (exps[i] > 0)
                    u *= static_cast<long>(s[i]);
                else
                    u /= static_cast<long>(s[i]);
        return u;
    };
    while (true) {
        for (int sign : {1, -1}) {
            mpq_class u = value(sign);
            if (u != 1 && is_s_unit(u, s) && is_s_unit(1 - u, s)) out.solutions.push_back(u);
        }
        size_t i = 0;
        while (i < exps.size() && exps[i] == bound) exps[i++] = -bound;
        if (i == exps.size()) break;
        ++exps[i];
    }
    if (s.empty()) {
        // the loop above ran once with the empty product
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());
    return out;
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, unsigned long p) {
    require(a != 0 && b != 0, "hilbert_symbol: zero argument");
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    require(is_prime(p), "hilbert_symbol: place must be a prime or 0");
    long alpha, beta;
    mpq_class u = unit_part(a, p, alpha), v = unit_part(b, p, beta);
    if (p != 2) {
        int r = 1;
        if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 == 1) r = -r;
        if (beta % 2 != 0 && legendre(u, p) == -1) r = -r;
        if (alpha % 2 != 0 && legendre(v, p) == -1) r = -r;
        return r;
    }
    auto eps = [](const mpq_class& x) { return residue_mod(x, 4) == 3 ? 1 : 0; };
    auto omg = [](const mpq_class& x) {
        mpz_class r = residue_mod(x, 8);
        return (r == 3 || r == 5) ? 1 : 0;
    };
    long e = eps(u) * eps(v) + (alpha % 2 != 0 ? omg(v) : 0) + (beta % 2 != 0 ? omg(u) : 0);
    return e % 2 == 0 ? 1 : -1;
}

BrauerClasses brauer_two_torsion_count(const std::vector<unsigned long>& s) {
    // square-class representatives supported on S, with sign
    std::vector<mpq_class> reps;
    size_t n = s.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask)
        for (int sign : {1, -1}) {
            mpq_class v = sign;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t{1} << i)) v *= static_cast<long>(s[i]);
            reps.push_back(v);
        }
    std::vector<unsigned long> places = s;
    if (std::find(places.begin(), places.end(), 2UL) == places.end()) places.push_back(2);
    std::set<std::vector<unsigned long>> seen;
    for (const mpq_class& a : reps)
        for (const mpq_class& b : reps) {
            std::vector<unsigned long> ram;
            for (unsigned long v : places)
                if (hilbert_symbol(a, b, v) == -1) ram.push_back(v);
            if (hilbert_symbol(a, b, 0) == -1) ram.push_back(0);
            std::sort(ram.begin(), ram.end());
            // keep classes unramified outside S and the real place
            bool inside = true;
            for (unsigned long v : ram)
                if (v != 0 && std::find(s.begin(), s.end(), v) == s.end()) inside = false;
            if (inside) seen.insert(std::move(ram));
        }
    // the distinct ramification sets must be exactly the even-cardinality
    // subsets of S together with the real place
    std::set<std::vector<unsigned long>> expected;
    std::vector<unsigned long> full = s;
    std::sort(full.begin(), full.end());
    full.push_back(0);
    std::sort(full.begin(), full.end());
    for (size_t mask = 0; mask < (size_t{1} << full.size()); ++mask) {
        std::vector<unsigned long> sub;
        for (size_t i = 0; i < full.size(); ++i)
            if (mask & (size_t{1} << i)) sub.push_back(full[i]);
        if (sub.size() % 2 == 0) expected.insert(std::move(sub));
    }
    require(seen == expected, "brauer_two_torsion_count: witness enumeration does not match the even subsets");
    BrauerClasses out;
    out.count = static_cast<long>(seen.size());
    out.ramification_sets.assign(seen.begin(), seen.end());
    return out;
}

long shaf_pgl2_count(const std::vector<unsigned long>& s) {
    bool has2 = std::find(s.begin(), s.end(), 2UL) != s.end();
    bool has5 = std::find(s.begin(), s.end(), 5UL) != s.end();
    if (!has2 || !has5) return 0;
    long formula = 1L << s.size();
    require(brauer_two_torsion_count(s).count == formula, "shaf_pgl2_count: Brauer witness count disagrees");
    return formula;
}

mpz_class shaf_ga_prime_count(const std::vector<unsigned long>& s) {
    bool has2 = std::find(s.begin(), s.end(), 2UL) != s.end();
    bool has5 = std::find(s.begin(), s.end(), 5UL) != s.end();
    if (!has2 || !has5) return 0;
    mpz_class formula = 2;
    for (size_t i = 0; i < s.size(); ++i) formula *= 4;
    // units modulo fourth powers: {+-1} x Z^{#S} written additively
    AbelianQuotient qo = smith_quotient(true, static_cast<int>(s.size()), 4);
    require(qo.order == formula, "shaf_ga_prime_count: invariant-factor cross-check failed");
    return formula;
}

std::vector<GmCandidate> shaf_gm_candidates(const std::vector<unsigned long>& s, long bound,
                                            unsigned long report_prime_bound) {
    std::vector<GmCandidate> out;
    for (const mpq_class& u : s_unit_equation(s, bound).solutions) {
        if (u == 0 || u == 1 || u == mpq_class(5, 4)) continue;
        GmCandidate c;
        c.u = u;
        for (unsigned long p = 2; p <= report_prime_bound; ++p) {
            if (!is_prime(p) || std::find(s.begin(), s.end(), p) != s.end()) continue;
            ReductionOutcome ro = classify_split_gm_reduction(u, p);
            c.outcomes.push_back({p, ro.standard.has_value(), ro.twisted.has_value()});
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace fano
