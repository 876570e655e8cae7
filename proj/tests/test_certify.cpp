#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/certify.hpp"

#include <random>

using namespace fano;

namespace {

BinaryForm bf(const FieldPtr& k, int deg, std::vector<long> coeffs) {
    BinaryForm f(k, deg);
    for (int i = 0; i <= deg; ++i) f.coeff(i) = k->from_int(coeffs[static_cast<size_t>(i)]);
    return f;
}

// sextic in P^4 lying on the quadric xy + zw + u^2, an integral model that
// stays smooth after reduction at every prime
CurveMap gamma_sextic(const FieldPtr& k) {
    return CurveMap({bf(k, 6, {0, 0, 0, 0, 0, 0, -1}), bf(k, 6, {1, 1, 0, 2, 0, 0, 1}), bf(k, 6, {0, 0, -1, 0, 0, 0, 0}),
                     bf(k, 6, {1, 0, 2, 0, 0, 1, 0}), bf(k, 6, {0, 1, 0, 1, 0, 0, 1})});
}

Variety quadric(const FieldPtr& k, std::vector<std::pair<std::vector<unsigned>, long>> terms, int n) {
    MPoly q(k, n + 1);
    for (auto& [e, c] : terms) q.add_term(e, k->from_int(c));
    return Variety(n, {q});
}

} // namespace

TEST_CASE("quadratic normality kernel dimensions") {
    FieldPtr q = Field::rationals();
    CHECK(quadratic_normality(gamma_sextic(q)) == 2);
    CHECK(quadratic_normality(gamma_sextic(Field::prime(2))) == 2);
    // a sextic inside a hyperplane picks up extra quadric relations
    CurveMap flat({bf(q, 6, {1, 0, 0, 0, 0, 0, 0}), bf(q, 6, {0, 1, 0, 0, 0, 0, 0}), bf(q, 6, {0, 0, 1, 0, 0, 0, 0}),
                   bf(q, 6, {0, 0, 0, 1, 0, 0, 0}), bf(q, 6, {0, 0, 0, 1, 0, 0, 0})});
    CHECK(quadratic_normality(flat) >= 3);
}

TEST_CASE("quadratic normality kernel is at least two on random sextics") {
    FieldPtr f101 = Field::prime(101);
    std::mt19937_64 rng(5);
    for (int n = 0; n < 25; ++n) {
        std::vector<BinaryForm> fs;
        for (int i = 0; i < 5; ++i) {
            BinaryForm f(f101, 6);
            for (int j = 0; j <= 6; ++j) f.coeff(j) = f101->from_int(static_cast<long>(rng() % 101));
            fs.push_back(std::move(f));
        }
        CurveMap c(std::move(fs));
        if (c.d != 6) continue; // a stripped common factor changes the shape
        CHECK(quadratic_normality(c) >= 2);
    }
}

TEST_CASE("quadric smoothness") {
    auto xyzwu = [](const FieldPtr& k) {
        return quadric(k, {{{1, 1, 0, 0, 0}, 1}, {{0, 0, 1, 1, 0}, 1}, {{0, 0, 0, 0, 2}, 1}}, 4);
    };
    CHECK(quadric_smoothness(xyzwu(Field::rationals())));
    CHECK(quadric_smoothness(xyzwu(Field::prime(2))));
    CHECK(quadric_smoothness(xyzwu(Field::prime(7))));
    // rank-one form is singular everywhere on its zero locus
    CHECK_FALSE(quadric_smoothness(quadric(Field::rationals(), {{{2, 0, 0, 0, 0}, 1}}, 4)));
    CHECK_FALSE(quadric_smoothness(quadric(Field::prime(2), {{{2, 0, 0, 0, 0}, 1}}, 4)));
}

TEST_CASE("smoothness certificate passes on the integral sextic") {
    auto cert = certify_curve_smooth_general(gamma_sextic(Field::rationals()));
    INFO(cert.detail);
    CHECK(cert.status == SmoothCertificate::Status::Pass);
    CHECK_FALSE(cert.candidate_primes.empty());
}

TEST_CASE("smoothness certificate rejects a forced double point") {
    FieldPtr q = Field::rationals();
    // even forms glue (s:t) with (s:-t); columns share the images of (1:1)
    // and (1:-1)
    CurveMap doubled({bf(q, 6, {1, 0, 0, 0, 0, 0, 0}), bf(q, 6, {0, 0, 1, 0, 0, 0, 0}), bf(q, 6, {0, 0, 0, 0, 1, 0, 0}),
                      bf(q, 6, {0, 0, 0, 0, 0, 0, 1}), bf(q, 6, {0, 1, 0, -1, 0, 0, 0})});
    auto cert = certify_curve_smooth_general(doubled);
    INFO(cert.detail);
    CHECK(cert.status == SmoothCertificate::Status::Fail);
}

TEST_CASE("degree one maps are immediately certified") {
    FieldPtr q = Field::rationals();
    CurveMap line({bf(q, 1, {1, 0}), bf(q, 1, {0, 1}), bf(q, 1, {2, 3}), bf(q, 1, {0, 0}), bf(q, 1, {5, -1})});
    CHECK(certify_curve_smooth_general(line).pass());
}
