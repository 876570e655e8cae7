#pragma once
#include "fano/quintics.hpp"

namespace fano {

// Decomposition of the plane curve parametrizing lines that meet the quintic:
// a line component plus one or two conics, with prescribed tangencies, and a
// unique bisecant of intersection degree 2.
struct SigmaZReport {
    bool pass = true;
    std::string detail;
    FieldPtr working_field;        // base field or the extension carrying the
                                   // auxiliary root (fourth root, Artin-Schreier
                                   // root, or a cube root of unity)
    std::vector<MPoly> components; // [0] the line, then the conic(s), in (x, y, z)
    int bisecant_degree = 0;

    void fail(const std::string& msg) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

// verifies, over a finite field:
//  (i)  the lines through sampled orbit points match group translates of the
//       named lines, and their plane coordinates satisfy the claimed
//       component equations;
//  (ii) pairwise intersection multiplicities of the components at the claimed
//       points (tangency 2, or 4 for the unipotent family);
//  (iii) the bisecant meets the curve with degree 2 and is the only traced
//       line doing so, and a traced line meets the bisecant exactly when its
//       plane point lies on the line component.
SigmaZReport verify_sigma_z_decomposition(const QuinticSpec& spec, const FieldPtr& k);

} // namespace fano
