#pragma once
#include "fano/projective.hpp"

namespace fano {

struct FoundLine {
    CurveMap line;   // degree-1 parametrization over `field`
    FieldPtr field;  // minimal field of definition found (base or an extension)
};

// All lines on a quadric-cut variety through a point of it, searched over
// extensions of degree <= ext_bound of a finite base field (over Q: rational
// solutions only). Uses the polarization B_q(P,Q) = q(P+Q) - q(P) - q(Q),
// which is valid in every characteristic.
std::vector<FoundLine> lines_through_point(const Variety& v, const PPoint& p, unsigned ext_bound = 2);

} // namespace fano
