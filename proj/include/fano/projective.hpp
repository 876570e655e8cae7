#pragma once
#include "fano/binary_form.hpp"
#include "fano/field.hpp"
#include "fano/linalg.hpp"
#include "fano/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

// Point of P^n; equality is projective (up to a global scalar).
struct PPoint {
    FieldPtr k;
    std::vector<Elem> c; // n+1 coordinates, not all zero

    PPoint() = default;
    PPoint(FieldPtr field, std::vector<Elem> coords);
    int dim() const { return static_cast<int>(c.size()) - 1; }
    PPoint convert(const FieldPtr& target) const;
    std::string str() const;
};

bool points_equal(const PPoint& p, const PPoint& q);

// Subvariety of P^n cut out by homogeneous forms.
struct Variety {
    int n = 0; // ambient dimension
    std::vector<MPoly> gens;
    std::vector<int> degs;

    Variety() = default;
    Variety(int ambient, std::vector<MPoly> generators);
    const FieldPtr& field() const { return gens.front().field(); }
    Variety convert(const FieldPtr& target) const;
};

// Parametrized rational curve P^1 -> P^n given by n+1 forms of one degree.
// Construction strips any common binary-form factor and records its degree.
struct CurveMap {
    int n = 0;
    int d = 0;
    std::vector<BinaryForm> forms;
    int stripped_degree = 0; // degree of the common factor removed

    CurveMap() = default;
    explicit CurveMap(std::vector<BinaryForm> fs);
    const FieldPtr& field() const { return forms.front().field(); }
    std::vector<Elem> eval(const Elem& s, const Elem& t) const;
    CurveMap convert(const FieldPtr& target) const;
    std::string str() const;
};

// Invertible (n+1) x (n+1) matrix acting on P^n, compared modulo scalars.
struct ProjAction {
    Mat m;

    ProjAction() = default;
    explicit ProjAction(Mat matrix);
    ProjAction inverse() const { return ProjAction(mat_inverse(m)); }
    ProjAction convert(const FieldPtr& target) const { return ProjAction(m.convert(target)); }
};

bool actions_equal(const ProjAction& a, const ProjAction& b);

bool point_on_variety(const PPoint& p, const Variety& v);
bool curve_on_variety(const CurveMap& c, const Variety& v);

// rank of the (n+1) x (d+1) coefficient matrix; rank d+1 certifies a
// rational normal curve of degree d in a linear P^d (smooth, embedded)
int rnc_rank(const CurveMap& c);
bool is_smooth_rnc(const CurveMap& c);

PPoint act_point(const ProjAction& a, const PPoint& p);
CurveMap act_curve(const ProjAction& a, const CurveMap& c);

// true iff every pulled-back generator lies in the linear span of the
// generators; requires all generators of one degree
bool action_preserves_variety(const ProjAction& a, const Variety& v);

// parameter values (s:t) with C(s:t) = P projectively, searched over the
// degree-ext extension of a finite coefficient field (ext = 1: base field)
std::vector<BFRoot> point_preimage_on_curve(const PPoint& p, const CurveMap& c, unsigned ext = 1);

// image equality for embedded rational normal curves: solve for a Moebius
// reparametrization from three point preimages, then verify coefficientwise
bool curves_same_image(const CurveMap& c1, const CurveMap& c2);

// rank of the tangent vectors {G p} modulo the Euler direction p
int tangent_orbit_dimension(const std::vector<Mat>& generators, const PPoint& p);

// degree of the scheme intersection of a line with the image of C: gcd degree
// of the line's linear forms pulled back along C
int line_curve_intersection_degree(const CurveMap& line, const CurveMap& c);

} // namespace fano
