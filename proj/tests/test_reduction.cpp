#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/reduction.hpp"

#include <algorithm>
#include <random>

using namespace fano;

namespace {

Mat mat2q(const FieldPtr& k, mpq_class a, mpq_class b, mpq_class c, mpq_class d) {
    Mat m(k, 2, 2);
    m.at(0, 0) = k->from_mpq(a);
    m.at(0, 1) = k->from_mpq(b);
    m.at(1, 0) = k->from_mpq(c);
    m.at(1, 1) = k->from_mpq(d);
    return m;
}

QuinticSpec fiber_spec(const Fiber& f, const FieldPtr& k) {
    switch (f.kind) {
    case FiberKind::MU: return QuinticSpec::mu();
    case FiberKind::Ga: return QuinticSpec::ga(f.param);
    case FiberKind::Gm: return QuinticSpec::gm(f.param);
    }
    return QuinticSpec::mu();
}

bool has_solution(const SUnitSolutionSet& s, const mpq_class& u) {
    return std::find(s.solutions.begin(), s.solutions.end(), u) != s.solutions.end();
}

} // namespace

TEST_CASE("valuations") {
    CHECK(padic_valuation(mpq_class(8), 2) == 3);
    CHECK(padic_valuation(mpq_class(1, 9), 3) == -2);
    CHECK(padic_valuation(mpq_class(5, 4), 7) == 0);
}

TEST_CASE("unipotent-family reduction") {
    auto r1 = classify_ga_reduction(1, 7);
    REQUIRE(r1.standard.has_value());
    CHECK(r1.standard->kind == FiberKind::Ga);
    CHECK(r1.standard->param.is_one());

    auto r7 = classify_ga_reduction(7, 7);
    REQUIRE(r7.standard.has_value());
    CHECK(r7.standard->kind == FiberKind::MU);

    CHECK(classify_ga_reduction(1, 5).bad());
    CHECK(classify_ga_reduction(1, 2).bad());
    CHECK(classify_ga_reduction(mpq_class(1, 7), 7).bad());
    CHECK_THROWS(classify_ga_reduction(0, 7));
}

TEST_CASE("split torus reduction") {
    auto r3 = classify_split_gm_reduction(3, 11);
    REQUIRE(r3.standard.has_value());
    CHECK(r3.standard->kind == FiberKind::Gm);
    CHECK(r3.standard->param == Field::prime(11)->from_int(3));
    CHECK_FALSE(r3.twisted.has_value());

    // 3 = 5/4 in F7, so at p = 7 the fiber is the dense-orbit curve
    auto r37 = classify_split_gm_reduction(3, 7);
    REQUIRE(r37.standard.has_value());
    CHECK(r37.standard->kind == FiberKind::MU);
    CHECK_FALSE(r37.twisted.has_value());

    // u = 5/4 + 3^4: both flavors at p = 3
    mpq_class u = mpq_class(5, 4) + 81;
    auto rb = classify_split_gm_reduction(u, 3);
    REQUIRE(rb.standard.has_value());
    // u is congruent to 5/4 mod 3^4, so the standard fiber is the
    // dense-orbit curve
    CHECK(rb.standard->kind == FiberKind::MU);
    REQUIRE(rb.twisted.has_value());
    CHECK(rb.twisted->kind == FiberKind::Ga);
    CHECK(rb.twisted->param == Field::prime(3)->from_int(16));
    CHECK(rb.twisted_witness_vals == std::vector<long>{-1});
    CHECK(rb.twisted_default_witness == -1);

    // c = 5 not a multiple of 4: the extreme witness gives the MU fiber
    auto rc = classify_split_gm_reduction(mpq_class(5, 4) + 243, 3);
    REQUIRE(rc.twisted.has_value());
    CHECK(rc.twisted->kind == FiberKind::MU);
    CHECK(rc.twisted_default_witness == -1);

    CHECK(classify_split_gm_reduction(mpq_class(1, 2), 2).bad());
    CHECK_THROWS(classify_split_gm_reduction(1, 7));
    CHECK_THROWS(classify_split_gm_reduction(mpq_class(5, 4), 7));

    // the reduction at 5/4-mod-p sends the curve to the dense-orbit one
    auto r54 = classify_split_gm_reduction(mpq_class(5, 4) + 7, 7);
    REQUIRE(r54.standard.has_value());
    CHECK(r54.standard->kind == FiberKind::MU);
}

TEST_CASE("standard reduction is symmetric under u to 1-u") {
    for (mpq_class u : {mpq_class(3), mpq_class(1, 2), mpq_class(14), mpq_class(9, 7), mpq_class(-6)})
        for (unsigned long p : {3UL, 7UL, 11UL}) {
            if (u == 0 || u == 1 || u == mpq_class(5, 4)) continue;
            mpq_class w = 1 - u;
            if (w == 0 || w == 1 || w == mpq_class(5, 4)) continue;
            CHECK(classify_split_gm_reduction(u, p).standard.has_value() ==
                  classify_split_gm_reduction(w, p).standard.has_value());
        }
}

TEST_CASE("reduction fibers are smooth curves") {
    std::vector<std::pair<mpq_class, unsigned long>> cases = {
        {mpq_class(3), 7}, {mpq_class(5, 4) + 81, 3}, {mpq_class(-1), 11}, {mpq_class(2), 13}};
    for (auto& [u, p] : cases) {
        auto r = classify_split_gm_reduction(u, p);
        FieldPtr kp = Field::prime(p);
        if (r.standard) CHECK(check_quintic_smooth(fiber_spec(*r.standard, kp), kp));
        if (r.twisted) CHECK(check_quintic_smooth(fiber_spec(*r.twisted, kp), kp));
    }
    auto g = classify_ga_reduction(1, 7);
    CHECK(check_quintic_smooth(fiber_spec(*g.standard, Field::prime(7)), Field::prime(7)));
}

TEST_CASE("flat limits of the torus family") {
    FieldPtr q = Field::rationals();
    FieldPtr f3 = Field::prime(3);

    QuinticSpec zu = QuinticSpec::gm(q->from_mpq(mpq_class(5, 4) + 81));
    Mat g = mat2q(q, 1, mpq_class(1, 3), 0, 1);
    auto lim = flat_limit(zu, g, 3);
    CHECK_FALSE(lim.degenerate);
    CHECK(curve_on_variety(lim.curve, w5_variety(f3)));
    CurveMap xi1 = build_quintic(QuinticSpec::ga(f3->one()), f3);
    CHECK(curves_same_image(lim.curve, xi1));

    // one more power of p drops the unipotent parameter to zero
    QuinticSpec zu5 = QuinticSpec::gm(q->from_mpq(mpq_class(5, 4) + 243));
    auto lim5 = flat_limit(zu5, g, 3);
    CHECK_FALSE(lim5.degenerate);
    CHECK(curves_same_image(lim5.curve, build_quintic(QuinticSpec::mu(), f3)));

    // all-unit data commutes with coefficient-wise reduction
    FieldPtr f7 = Field::prime(7);
    auto id = flat_limit(QuinticSpec::gm(q->from_int(3)), Mat::identity(q, 2), 7);
    CHECK_FALSE(id.degenerate);
    CurveMap direct = build_quintic(QuinticSpec::gm(f7->from_int(3)), f7);
    CHECK(curves_same_image(id.curve, direct));
    for (size_t i = 0; i < direct.forms.size(); ++i)
        for (int j = 0; j <= 5; ++j) CHECK(id.curve.forms[i].coeff(j) == direct.forms[i].coeff(j));
}

TEST_CASE("s-unit equation search") {
    CHECK(s_unit_equation({}, 4).solutions.empty());

    auto s2 = s_unit_equation({2}, 5);
    CHECK(s2.solutions.size() == 3);
    CHECK(has_solution(s2, 2));
    CHECK(has_solution(s2, -1));
    CHECK(has_solution(s2, mpq_class(1, 2)));

    auto s23 = s_unit_equation({2, 3}, 6);
    for (mpq_class u : {mpq_class(2), mpq_class(-1), mpq_class(1, 2), mpq_class(3), mpq_class(-2), mpq_class(4),
                        mpq_class(-3), mpq_class(9), mpq_class(-8), mpq_class(1, 9), mpq_class(8, 9), mpq_class(3, 4)})
        CHECK(has_solution(s23, u));
    for (const mpq_class& u : s23.solutions) CHECK(has_solution(s23, 1 - u));
}

TEST_CASE("hilbert symbol values") {
    CHECK(hilbert_symbol(-1, -1, 0) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL})
        for (long b : {-6L, -1L, 2L, 15L}) CHECK(hilbert_symbol(1, b, p) == 1);
    CHECK(hilbert_symbol(2, 7, 7) == 1);  // 2 is a square mod 7
    CHECK(hilbert_symbol(3, 7, 7) == -1); // 3 is not
    CHECK_THROWS(hilbert_symbol(0, 1, 3));
}

TEST_CASE("hilbert symbol is bimultiplicative") {
    std::mt19937_64 rng(11);
    auto rnd = [&]() {
        long v = static_cast<long>(rng() % 61) - 30;
        return v == 0 ? 1 : v;
    };
    for (unsigned long p : {0UL, 2UL, 3UL, 5UL, 7UL, 13UL})
        for (int n = 0; n < 200; ++n) {
            mpq_class a = rnd(), a2 = rnd(), b = rnd();
            CHECK(hilbert_symbol(a * a2, b, p) == hilbert_symbol(a, b, p) * hilbert_symbol(a2, b, p));
        }
}

TEST_CASE("hilbert symbol product formula") {
    std::mt19937_64 rng(13);
    std::vector<unsigned long> places = {0, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (int n = 0; n < 100; ++n) {
        long a = static_cast<long>(rng() % 99) - 49;
        long b = static_cast<long>(rng() % 99) - 49;
        if (a == 0) a = 1;
        if (b == 0) b = 1;
        int prod = 1;
        for (unsigned long v : places) prod *= hilbert_symbol(a, b, v);
        CHECK(prod == 1);
    }
}

TEST_CASE("quaternion class enumeration") {
    auto b25 = brauer_two_torsion_count({2, 5});
    CHECK(b25.count == 4);
    std::vector<std::vector<unsigned long>> expect = {{}, {0, 2}, {0, 5}, {2, 5}};
    for (auto& s : expect)
        CHECK(std::find(b25.ramification_sets.begin(), b25.ramification_sets.end(), s) != b25.ramification_sets.end());

    CHECK(brauer_two_torsion_count({}).count == 1);
    CHECK(brauer_two_torsion_count({2}).count == 2);
    CHECK(brauer_two_torsion_count({2, 5, 7}).count == 8);
}

TEST_CASE("shafarevich counting formulas") {
    CHECK(shaf_pgl2_count({2, 5}) == 4);
    CHECK(shaf_pgl2_count({2}) == 0);
    CHECK(shaf_pgl2_count({2, 5, 7}) == 8);
    CHECK(shaf_ga_prime_count({2, 5}) == 32);
    CHECK(shaf_ga_prime_count({5}) == 0);
    CHECK(shaf_ga_prime_count({2, 5, 7}) == 128);
}

TEST_CASE("torus-family candidate layer") {
    CHECK(shaf_gm_candidates({}, 5, 20).empty());

    auto c2 = shaf_gm_candidates({2}, 5, 20);
    CHECK(c2.size() == 3);
    for (auto& c : c2) {
        CHECK((c.u == 2 || c.u == -1 || c.u == mpq_class(1, 2)));
        for (auto& o : c.outcomes) {
            CHECK(o.p % 2 == 1);
            auto r = classify_split_gm_reduction(c.u, o.p);
            CHECK(o.std_present == r.standard.has_value());
            CHECK(o.tw_present == r.twisted.has_value());
        }
    }

    // 5/4 solves the S-unit equation for S = {2,5} but is not a parameter
    auto c25 = shaf_gm_candidates({2, 5}, 6, 20);
    CHECK(has_solution(s_unit_equation({2, 5}, 6), mpq_class(5, 4)));
    for (auto& c : c25) CHECK(c.u != mpq_class(5, 4));
}
