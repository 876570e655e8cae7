#pragma once
#include "fano/projective.hpp"
#include "fano/v5model.hpp"

#include <string>
#include <vector>

namespace fano {

// The rational quintic families on the quintic threefold with a
// positive-dimensional stabilizer, plus their group translates.
struct QuinticSpec {
    enum class Kind { MU, Ga, Gm, GmPrime };
    Kind kind = Kind::MU;
    Elem param; // xi for Ga, u for Gm / GmPrime; converted into the build field
    bool translated = false;
    Mat g; // 2x2 translation applied through the group action

    static QuinticSpec mu();
    static QuinticSpec ga(Elem xi);
    static QuinticSpec gm(Elem u);
    static QuinticSpec gm_prime(Elem u);
    QuinticSpec translate(const Mat& m) const;
};

// u avoids 0, 1 and 5/4; in characteristic 2 the third excluded value is the
// point at infinity of the parameter line, so only 0 and 1 constrain u
bool gm_param_valid(const Elem& u);

CurveMap build_quintic(const QuinticSpec& spec, const FieldPtr& k);

// degree 5, no common factor, coefficient rank 6, and contained in the
// quintic threefold
bool check_quintic_smooth(const QuinticSpec& spec, const FieldPtr& k);

enum class StabTag { Borel, GaMu4, Torus, TorusByTwo, Other };

struct StabilizerReport {
    long order = 0;
    StabTag tag = StabTag::Other;
    std::vector<Mat> elements; // every member maps the curve onto itself
};

// exact point stabilizer of the curve inside PGL2(F_q) (SL2 in
// characteristic 2); the tag is decided from the order together with
// unipotent / semisimple element counts
StabilizerReport stabilizer_exhaustive(const QuinticSpec& spec, const FieldPtr& k);

// true iff no group element carries Z_u onto Z_{u2}; u == u2 gives false
bool verify_gm_rigidity(const Elem& u, const Elem& u2, const FieldPtr& k);

struct CountRecord {
    std::string type; // "pgl2", "ga", "gm"
    mpz_class q;
    mpz_class enumerated;
    mpz_class formula;
    bool agree = false;
};

// isomorphism-class counts over F_q by direct enumeration next to the
// closed-form count
CountRecord count_v22(const std::string& type, const mpz_class& q);

// same class in k^x modulo fourth powers; both elements over one field,
// which must be Q or finite of characteristic not 2 or 5
bool ga_form_class_equal(const Elem& xi, const Elem& xi2);

} // namespace fano
