#pragma once
#include "fano/report.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fano {

// structural battery for the quintic threefold model: smoothness, action
// homomorphism and preservation, integral action matrix reduction, orbit
// table, divisor normalization, named lines
ReportBundle checks_verify_v5(const RunConfig& cfg);

// quintic families: smoothness criteria, stabilizers, rigidity, plane
// decompositions
ReportBundle checks_verify_quintics(const RunConfig& cfg);

// counting records; empty type runs all three, q = 0 runs every prime power
// up to qmax
ReportBundle checks_count(const RunConfig& cfg, const std::string& type, long q, long qmax);

// reduction classifiers at one prime, for a torus parameter u or a unipotent
// parameter xi
ReportBundle checks_reduce(const RunConfig& cfg, const std::optional<mpq_class>& u,
                           const std::optional<mpq_class>& xi, unsigned long p);

// counting formulas over Q for a set of good-reduction primes S
ReportBundle checks_shafarevich(const RunConfig& cfg, const std::vector<unsigned long>& s);

// certificate battery for the integral sextic model on its quadric
ReportBundle checks_verify_v22_over_z(const RunConfig& cfg);

// torus-family rigidity over F_q in one bulk pass over the group; returns
// true when no element maps Z_u onto Z_{u2} for valid u != u2
bool rigidity_all_pairs(unsigned long q, std::string* witness);

} // namespace fano
