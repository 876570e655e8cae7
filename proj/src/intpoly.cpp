#include "fano/intpoly.hpp"

#include <stdexcept>

namespace fano::zp {

namespace {
void require(bool cond, const char* msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_of(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}
} // namespace

ZPoly trim(ZPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int deg(const ZPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

bool is_zero(const ZPoly& f) { return deg(f) < 0; }

ZPoly add(const ZPoly& f, const ZPoly& g) {
    ZPoly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] += g[i];
    return trim(std::move(r));
}

ZPoly sub(const ZPoly& f, const ZPoly& g) {
    ZPoly r(std::max(f.size(), g.size()), 0);
    for (size_t i = 0; i < f.size(); ++i) r[i] += f[i];
    for (size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
    return trim(std::move(r));
}

ZPoly mul(const ZPoly& f, const ZPoly& g) {
    if (is_zero(f) || is_zero(g)) return {};
    ZPoly r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j)
            if (g[j] != 0) r[i + j] += f[i] * g[j];
    }
    return trim(std::move(r));
}

ZPoly scale(const ZPoly& f, const mpz_class& c) {
    if (c == 0) return {};
    ZPoly r = f;
    for (auto& x : r) x *= c;
    return trim(std::move(r));
}

mpz_class content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f)
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(const ZPoly& f) {
    mpz_class c = content(f);
    if (c == 0) return {};
    ZPoly r = trim(f);
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (r.back() < 0)
        for (auto& x : r) x = -x;
    return r;
}

mpz_class eval(const ZPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) r = r * x + f[static_cast<size_t>(i)];
    return r;
}

namespace {
// pseudo-remainder: lb^(da-db+1) * a mod b
ZPoly prem(ZPoly a, const ZPoly& b) {
    int db = deg(b);
    const mpz_class& lb = b[static_cast<size_t>(db)];
    int da = deg(a);
    while (da >= db && !is_zero(a)) {
        mpz_class lead = a[static_cast<size_t>(da)];
        for (auto& x : a) x *= lb;
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(da - db + j)] -= lead * b[static_cast<size_t>(j)];
        a = trim(std::move(a));
        da = deg(a);
    }
    return a;
}
} // namespace

ZPoly gcd(ZPoly f, ZPoly g) {
    f = trim(std::move(f));
    g = trim(std::move(g));
    if (is_zero(f)) return primitive(g);
    if (is_zero(g)) return primitive(f);
    mpz_class cf = content(f), cg = content(g), cc;
    mpz_gcd(cc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    ZPoly a = primitive(f), b = primitive(g);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!is_zero(b)) {
        ZPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return trim(scale(primitive(a), cc));
}

mpz_class sylvester_resultant(const ZPoly& f, const ZPoly& g, int m, int n) {
    require(m >= 0 && n >= 0 && deg(f) <= m && deg(g) <= n, "sylvester_resultant: bad declared degrees");
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    // Hadamard bound on |det|
    mpz_class bound = 1;
    auto row_bound = [&](const ZPoly& h, int declared) {
        mpz_class s = 0;
        for (int i = 0; i <= declared; ++i) {
            mpz_class c = static_cast<size_t>(i) < h.size() ? h[static_cast<size_t>(i)] : mpz_class(0);
            s += c * c;
        }
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
        return r + 1;
    };
    mpz_class rf = row_bound(f, m), rg = row_bound(g, n);
    for (int i = 0; i < n; ++i) bound *= rf;
    for (int i = 0; i < m; ++i) bound *= rg;
    bound = 2 * bound + 1;

    // modular determinants + CRT
    mpz_class modulus = 1, result = 0;
    mpz_class pz = (mpz_class(1) << 62);
    while (modulus < bound) {
        mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
        std::uint64_t p = pz.get_ui();
        // build Sylvester matrix mod p
        std::vector<std::vector<std::uint64_t>> a(static_cast<size_t>(size), std::vector<std::uint64_t>(static_cast<size_t>(size), 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= m; ++i)
                a[static_cast<size_t>(j)][static_cast<size_t>(i + j)] = static_cast<size_t>(i) < f.size() ? mod_of(f[static_cast<size_t>(i)], p) : 0;
        for (int j = 0; j < m; ++j)
            for (int i = 0; i <= n; ++i)
                a[static_cast<size_t>(n + j)][static_cast<size_t>(i + j)] = static_cast<size_t>(i) < g.size() ? mod_of(g[static_cast<size_t>(i)], p) : 0;
        // determinant mod p
        std::uint64_t det = 1;
        bool zero = false;
        for (int col = 0; col < size && !zero; ++col) {
            int piv = -1;
            for (int r = col; r < size; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
            if (piv < 0) { zero = true; break; }
            if (piv != col) {
                std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
                det = p - det;
                if (det == p) det = 0;
            }
            std::uint64_t pv = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            det = mulmod(det, pv, p);
            std::uint64_t inv = powmod(pv, p - 2, p);
            for (int r = col + 1; r < size; ++r) {
                std::uint64_t fmul = mulmod(a[static_cast<size_t>(r)][static_cast<size_t>(col)], inv, p);
                if (fmul == 0) continue;
                for (int j = col; j < size; ++j) {
                    std::uint64_t sub = mulmod(fmul, a[static_cast<size_t>(col)][static_cast<size_t>(j)], p);
                    std::uint64_t& x = a[static_cast<size_t>(r)][static_cast<size_t>(j)];
                    x = x >= sub ? x - sub : x + p - sub;
                }
            }
        }
        std::uint64_t dp = zero ? 0 : det;
        // CRT combine
        mpz_class pm(static_cast<unsigned long>(p));
        mpz_class inv_mod;
        mpz_class mm = modulus % pm;
        mpz_invert(inv_mod.get_mpz_t(), mm.get_mpz_t(), pm.get_mpz_t());
        mpz_class diff = (mpz_class(static_cast<unsigned long>(dp)) - result % pm) % pm;
        if (diff < 0) diff += pm;
        result += modulus * ((diff * inv_mod) % pm);
        modulus *= pm;
    }
    // symmetric remainder
    if (result * 2 > modulus) result -= modulus;
    return result;
}

Factorization factor_for_candidates(const mpz_class& n_in, unsigned long trial_bound) {
    Factorization out;
    mpz_class n = abs(n_in);
    require(n != 0, "factor_for_candidates: zero");
    for (mpz_class d = 2; d * d <= n && d <= static_cast<unsigned long>(trial_bound); d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
            out.primes.push_back(n);
        } else if (n <= mpz_class(trial_bound) * trial_bound) {
            out.primes.push_back(n); // below bound^2 with no divisor <= bound: prime
        } else {
            out.complete = false;
            out.cofactor = n;
        }
    }
    return out;
}

} // namespace fano::zp
