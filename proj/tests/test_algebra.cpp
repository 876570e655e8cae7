#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/binary_form.hpp"
#include "fano/field.hpp"
#include "fano/intpoly.hpp"
#include "fano/linalg.hpp"
#include "fano/multipoly.hpp"
#include "fano/smith.hpp"
#include "fano/upoly.hpp"

#include <random>

using namespace fano;

TEST_CASE("rational field basics") {
    FieldPtr q = Field::rationals();
    Elem a = q->from_mpq(mpq_class(5, 4));
    Elem b = q->from_int(3);
    CHECK((a * b).rat() == mpq_class(15, 4));
    CHECK((a - a).is_zero());
    CHECK((a / a).is_one());
    CHECK(a.inv().rat() == mpq_class(4, 5));
}

TEST_CASE("prime field arithmetic") {
    FieldPtr f7 = Field::prime(7);
    Elem x = f7->from_int(3);
    CHECK((x * x).residue() == 2);
    CHECK(x.inv().residue() == 5); // 3*5 = 15 = 1 mod 7
    CHECK(x.pow(6).is_one());
    CHECK(f7->from_int(-1).residue() == 6);
    CHECK(f7->from_mpq(mpq_class(5, 4)).residue() == 3); // 5 * 4^{-1} = 5*2 = 10 = 3
}

TEST_CASE("extension construction matches pinned minimal polynomials") {
    // F49 arrives via x^2 - 3 (squares mod 7 are {0,1,2,4})
    FieldPtr f49 = construct_extension(7, 2);
    REQUIRE(f49->kind() == Field::Kind::Ext);
    const auto& mp = f49->minpoly();
    CHECK(mp[0].residue() == 4); // -3 mod 7
    CHECK(mp[1].residue() == 0);
    CHECK(mp[2].residue() == 1);
    CHECK(f49->size() == 49);

    // F4 via x^2 + x + 1, the only irreducible monic quadratic over F2
    FieldPtr f4 = construct_extension(2, 2);
    const auto& mp4 = f4->minpoly();
    CHECK(mp4[0].residue() == 1);
    CHECK(mp4[1].residue() == 1);
    CHECK(mp4[2].residue() == 1);

    // d = 1 is the identity case
    FieldPtr f5 = construct_extension(5, 1);
    CHECK(f5->kind() == Field::Kind::Prime);
}

TEST_CASE("extension field arithmetic and towers") {
    FieldPtr f49 = construct_extension(7, 2);
    Elem g = f49->gen(); // sqrt(3)
    CHECK((g * g) == f49->from_int(3));
    CHECK((g.inv() * g).is_one());
    // Fermat: x^(q-1) = 1 for all nonzero x
    for (mpz_class i = 1; i < 49; ++i) CHECK(f49->element(i).pow(48).is_one());

    // tower: degree-2 extension of F4 is F16
    FieldPtr f4 = construct_extension(2, 2);
    FieldPtr f16 = extension_of(f4, 2);
    CHECK(f16->size() == 16);
    Elem w = f4->gen();
    Elem we = f16->embed(w);
    CHECK((we * we * we).is_one()); // omega has order 3
    for (mpz_class i = 1; i < 16; ++i) CHECK(f16->element(i).pow(15).is_one());
}

TEST_CASE("roots in extension") {
    // x^2 - 3 over F7 has two roots in F49
    FieldPtr f7 = Field::prime(7);
    BinaryForm f = BinaryForm::from_coeffs(f7, {f7->from_int(-3), f7->zero(), f7->one()});
    // as univariate in t: -3 + t^2, i.e. binary s^2*(-3)... use coeffs (1,0,-3): t^2 - 3 s^2
    BinaryForm form = BinaryForm::from_coeffs(f7, {f7->from_int(-3), f7->zero(), f7->one()});
    auto roots = bf_roots_in_extension(form, 2);
    CHECK(roots.size() == 2);
    // x - 1 over F5, d = 1
    FieldPtr f5 = Field::prime(5);
    BinaryForm lin = BinaryForm::from_coeffs(f5, {f5->from_int(-1), f5->one()});
    auto r5 = bf_roots_in_extension(lin, 1);
    REQUIRE(r5.size() == 1);
    CHECK(r5[0].t == r5[0].s); // root (1 : 1)
    // x^2 + x + 1 over F2, no roots in F2
    FieldPtr f2 = Field::prime(2);
    BinaryForm q2 = BinaryForm::from_coeffs(f2, {f2->one(), f2->one(), f2->one()});
    CHECK(bf_roots_in_extension(q2, 1).empty());
    CHECK(bf_roots_in_extension(q2, 2).size() == 2);
}

TEST_CASE("binary gcd") {
    FieldPtr q = Field::rationals();
    auto bf = [&](std::vector<long> c) {
        std::vector<Elem> e;
        for (long v : c) e.push_back(q->from_int(v));
        return BinaryForm::from_coeffs(q, std::move(e));
    };
    // gcd(s^2 t, s t^2) = s t
    BinaryForm f = bf({0, 1, 0, 0}); // s^2 t
    BinaryForm g = bf({0, 0, 1, 0}); // s t^2
    BinaryForm d = bf_gcd(f, g);
    CHECK(d.degree() == 2);
    CHECK(d.coeff(1).is_one()); // st
    CHECK(d.coeff(0).is_zero());
    CHECK(d.coeff(2).is_zero());
    // gcd(s^2 - t^2, s - t) is s - t up to scalar; normalized monic in t
    BinaryForm f2 = bf({1, 0, -1});
    BinaryForm g2 = bf({1, -1});
    BinaryForm d2 = bf_gcd(f2, g2);
    CHECK(d2.degree() == 1);
    CHECK(d2.coeff(1).is_one());
    CHECK(d2.coeff(0).rat() == -1);
}

TEST_CASE("resultants") {
    FieldPtr q = Field::rationals();
    // Res(x^2+1, x-1) = 2
    BinaryForm f = BinaryForm::from_coeffs(q, {q->one(), q->zero(), q->one()});
    BinaryForm g = BinaryForm::from_coeffs(q, {q->from_int(-1), q->one()});
    CHECK(bf_resultant(f, g).rat() == 2);
    // Res(f, c) = c^deg f
    BinaryForm c = BinaryForm::from_coeffs(q, {q->from_int(3)});
    CHECK(bf_resultant(f, c).rat() == 9);
    // integer CRT version agrees
    CHECK(zp::sylvester_resultant({1, 0, 1}, {-1, 1}, 2, 1) == 2);
}

TEST_CASE("resultant vanishes iff gcd nonconstant, random pairs") {
    std::mt19937_64 rng(42);
    for (auto p : {5ull, 7ull, 13ull}) {
        FieldPtr k = Field::prime(p);
        for (int iter = 0; iter < 100; ++iter) {
            auto rand_form = [&](int d) {
                BinaryForm f(k, d);
                for (int i = 0; i <= d; ++i) f.coeff(i) = k->from_int(static_cast<long>(rng() % p));
                return f;
            };
            BinaryForm f = rand_form(3), g = rand_form(3);
            if (f.is_zero() || g.is_zero()) continue;
            bool res_zero = bf_resultant(f, g).is_zero();
            bool gcd_pos = bf_gcd(f, g).degree() > 0;
            // declared-degree resultant also vanishes when both leading
            // coefficients vanish (common root at infinity is a gcd factor)
            CHECK(res_zero == gcd_pos);
        }
    }
}

TEST_CASE("binary gcd divides both inputs") {
    std::mt19937_64 rng(7);
    FieldPtr k = Field::prime(11);
    for (int iter = 0; iter < 100; ++iter) {
        BinaryForm f(k, 4), g(k, 4);
        for (int i = 0; i <= 4; ++i) {
            f.coeff(i) = k->from_int(static_cast<long>(rng() % 11));
            g.coeff(i) = k->from_int(static_cast<long>(rng() % 11));
        }
        if (f.is_zero() || g.is_zero()) continue;
        BinaryForm d = bf_gcd(f, g);
        if (d.degree() == 0) continue;
        for (const BinaryForm* h : {&f, &g}) {
            // check divisibility via roots of d: every root of d (over the
            // splitting field) must be a root of h; cheaper: polynomial division
            // in the dehomogenized variable both ways
            // use resultant-free check: gcd(h, d) == d up to scalar
            BinaryForm dd = bf_gcd(*h, d);
            CHECK(dd.degree() == d.degree());
        }
    }
}

TEST_CASE("kernel and rank") {
    FieldPtr q = Field::rationals();
    Mat id = Mat::identity(q, 3);
    auto kr = kernel_and_rank(id);
    CHECK(kr.rank == 3);
    CHECK(kr.kernel.empty());

    Mat m(q, 2, 3);
    m.at(0, 0) = q->one();
    m.at(0, 1) = q->from_int(2);
    m.at(0, 2) = q->from_int(3);
    m.at(1, 0) = q->from_int(2);
    m.at(1, 1) = q->from_int(4);
    m.at(1, 2) = q->from_int(6);
    auto kr2 = kernel_and_rank(m);
    CHECK(kr2.rank == 1);
    CHECK(kr2.kernel.size() == 2);
    for (const auto& v : kr2.kernel) {
        auto mv = m.apply(v);
        for (const auto& e : mv) CHECK(e.is_zero());
    }
}

TEST_CASE("bareiss determinant and minors gcd") {
    ZMat m = {{2, 0}, {0, 2}};
    CHECK(bareiss_det(m) == 4);
    ZMat r = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(bareiss_det(r) == 0);
    CHECK(minors_gcd(r, 2) == 3);
}

TEST_CASE("smith quotient") {
    auto q1 = smith_quotient(false, 1, 4);
    CHECK(q1.order == 4);
    REQUIRE(q1.invariants.size() == 1);
    CHECK(q1.invariants[0] == 4);
    auto q2 = smith_quotient(true, 2, 4);
    CHECK(q2.order == 32);
    auto q3 = smith_quotient(true, 0, 4);
    CHECK(q3.order == 2);
}

TEST_CASE("smith quotient equals brute-force coset count for small cases") {
    for (int r = 0; r <= 2; ++r)
        for (long n = 1; n <= 4; ++n)
            for (int tor = 0; tor <= 1; ++tor) {
                auto sq = smith_quotient(tor != 0, r, n);
                // brute force in (Z/2)^tor x (Z/(n*L))^r with L large enough:
                // quotient (Z/2 x Z^r)/n-th powers is (Z/(2,n)) x (Z/n)^r
                long t = tor ? (n % 2 == 0 ? 2 : 1) : 1;
                mpz_class expect = t;
                for (int i = 0; i < r; ++i) expect *= n;
                CHECK(sq.order == expect);
            }
}

TEST_CASE("valuation via rationals") {
    // valuation handled as mpq arithmetic helpers in the reduction module;
    // here check mpq plumbing of lowest terms
    mpq_class x(50, 20);
    x.canonicalize();
    CHECK(x.get_num() == 5);
    CHECK(x.get_den() == 2);
}

TEST_CASE("multipoly basics") {
    FieldPtr q = Field::rationals();
    MPoly x = MPoly::variable(q, 2, 0);
    MPoly y = MPoly::variable(q, 2, 1);
    MPoly p = x * x - y * y;
    CHECK(p.homogeneous(2));
    CHECK(p.eval({q->from_int(3), q->from_int(2)}).rat() == 5);
    MPoly d = p.deriv(0);
    CHECK(d.eval({q->from_int(3), q->from_int(2)}).rat() == 6);
    FieldPtr f3 = Field::prime(3);
    MPoly pm = p.convert(f3);
    CHECK(pm.eval({f3->from_int(3), f3->from_int(2)}).residue() == 2); // -4 mod 3
}

TEST_CASE("integer polynomial gcd (primitive PRS)") {
    using namespace fano::zp;
    // (x^2 - 1) and (x - 1): gcd x - 1
    ZPoly g = gcd({-1, 0, 1}, {-1, 1});
    REQUIRE(deg(g) == 1);
    CHECK(g[0] == -1);
    CHECK(g[1] == 1);
    // coprime
    CHECK(deg(gcd({1, 0, 1}, {-1, 1})) == 0);
    // content handling
    ZPoly g2 = gcd({-4, 0, 4}, {-6, 6});
    REQUIRE(deg(g2) == 1);
    CHECK(g2[1] == 2); // content gcd(4,6)=2 times primitive x-1
}

TEST_CASE("large sylvester resultant via CRT matches field computation mod p") {
    std::mt19937_64 rng(99);
    zp::ZPoly f(21), g(21);
    for (auto& c : f) c = static_cast<long>(rng() % 2001) - 1000;
    for (auto& c : g) c = static_cast<long>(rng() % 2001) - 1000;
    mpz_class r = zp::sylvester_resultant(f, g, 20, 20);
    FieldPtr f101 = Field::prime(101);
    std::vector<Elem> fc, gc;
    for (auto& c : f) fc.push_back(f101->from_mpz(c));
    for (auto& c : g) gc.push_back(f101->from_mpz(c));
    Elem rf = bf_resultant(BinaryForm::from_coeffs(f101, fc), BinaryForm::from_coeffs(f101, gc));
    CHECK(f101->from_mpz(r) == rf);
}
