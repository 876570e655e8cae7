#pragma once
#include "fano/projective.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fano {

// kernel dimension of the map sending degree-2 monomials of P^4 to degree-12
// binary forms along a sextic curve; value 2 means the restriction map on
// quadrics is surjective with the expected kernel
int quadratic_normality(const CurveMap& c);

// smoothness of a quadric hypersurface; Gram determinant away from
// characteristic 2, partial-derivative linear solve plus evaluation in
// characteristic 2
bool quadric_smoothness(const Variety& v);

struct SmoothCertificate {
    enum class Status { Pass, Fail, Inconclusive };
    Status status = Status::Inconclusive;
    std::vector<mpz_class> candidate_primes; // primes that needed an explicit check
    std::string detail;                      // failing prime and point, or the reason

    bool pass() const { return status == Status::Pass; }
};

// Two-part smoothness certificate for a parametrized curve with integer
// coefficients, valid over Q and over every prime field simultaneously:
// immersion via derivative minors and injectivity via the collision system
// h_ij = (f_i(s,t) f_j(u,v) - f_j(s,t) f_i(u,v)) / (sv - tu).
// Candidate primes come from integer resultants; each candidate gets an
// explicit finite check. Degenerate resultants yield Inconclusive, never Pass.
SmoothCertificate certify_curve_smooth_general(const CurveMap& c);

// integral model of the anticanonically embedded sextic in P^4, lying on the
// quadric xy + zw + u^2; its coefficients keep it smooth at every prime
CurveMap integral_model_sextic(const FieldPtr& k);

// the ambient quadric xy + zw + u^2 = 0 in P^4
Variety integral_model_quadric(const FieldPtr& k);

} // namespace fano
