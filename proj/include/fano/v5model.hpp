#pragma once
#include "fano/lines.hpp"
#include "fano/projective.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fano {

// the five quadrics cutting the quintic del Pezzo threefold in P^6
Variety w5_variety(const FieldPtr& k);
// the invariant divisor 5 a2 a4 - 4 a1 a5 + 27 a0 a6
MPoly w5_divisor(const FieldPtr& k);

// symbolic 7x7 action matrices, entries polynomial in the 2x2 entries
// (a, b, c, d) = variables 0..3; sigma needs characteristic != 2
std::vector<std::vector<MPoly>> sigma_symbolic(const FieldPtr& k);
std::vector<std::vector<MPoly>> sigma_prime_symbolic(const FieldPtr& k);

// evaluation at a concrete 2x2 matrix
ProjAction sigma_action(const Mat& g);
ProjAction sigma_prime_action(const Mat& g);

// induced 3x3 action on the plane parametrizing lines
Mat sigma_plane_matrix(const Mat& g);       // characteristic != 2
Mat sigma_prime_plane_matrix(const Mat& g); // characteristic 2

// tangent directions of the automorphism group at the identity, as 7x7
// matrices suitable for tangent_orbit_dimension
std::vector<Mat> aut_tangent_generators(const FieldPtr& k);

// normalization of the divisor: characteristic != 2 yields a bidegree-(1,5)
// map from P^1 x P^1, variables ordered (alpha, beta, gamma, delta) with the
// group acting on (alpha:gamma) and (beta:delta)
std::vector<MPoly> nu_map(const FieldPtr& k);
// characteristic 2: the plane map (x:y:z) -> (x^3:x^2z:x^2y:0:xy^2:y^2z:y^3)
std::vector<MPoly> nu_prime_map(const FieldPtr& k);
// distinguished curves inside the characteristic-2 divisor
CurveMap twisted_cubic_orbit_closure(const FieldPtr& k); // (s^3:0:s^2t:0:st^2:0:t^3)
CurveMap exceptional_image_line(const FieldPtr& k);      // (0:s^2:0:0:0:t^2:0)

struct OrbitPoint {
    std::string label;
    PPoint rep;
    int dim = 0;
    bool in_divisor = false;
    int line_count = 0; // lines through any point of the stratum
    // closure of the stratum for the curve strata; the first-order tangent
    // computation can degenerate there (inseparable orbit parametrization),
    // so dimension 1 is certified by containment in this curve plus a
    // two-point orbit instead
    CurveMap closure;
};
std::vector<OrbitPoint> orbit_table(const FieldPtr& k);

struct NamedLine {
    std::string label;          // plane coordinates of the line, e.g. "(0:1:0)"
    CurveMap line;              // degree-1 parametrization
    std::vector<Elem> plane_pt; // the three plane coordinates over line.field()
};
// base-field table; characteristic selects the entries. In characteristic 2
// the two conjugate lines through the dense-orbit representative live over
// the degree-2 extension and are included only when the field contains it.
std::vector<NamedLine> named_lines(const FieldPtr& k);

struct CheckResult {
    bool pass = true;
    std::string detail;
    void fail(const std::string& msg) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

// enumeration of the automorphism group of the split model over a finite
// field: PGL2 away from characteristic 2, SL2 in characteristic 2
std::vector<Mat> aut_group_elements(const FieldPtr& k);
ProjAction apply_aut(const Mat& g); // dispatches on the characteristic

CheckResult verify_action_homomorphism(const FieldPtr& k, std::uint64_t pair_budget, std::uint64_t seed);
CheckResult verify_sigma_tilde();
CheckResult verify_orbit_table(const FieldPtr& k);
CheckResult verify_normalization(const FieldPtr& k, std::uint64_t seed);
CheckResult verify_named_lines_and_counts(const FieldPtr& k, unsigned ext_bound);
CheckResult verify_y_smooth(const FieldPtr& k); // full point enumeration

} // namespace fano
