#pragma once
#include "fano/quintics.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace fano {

// p-adic valuation of a nonzero rational
long padic_valuation(const mpq_class& x, unsigned long p);

enum class FiberKind { MU, Ga, Gm };

struct Fiber {
    FiberKind kind = FiberKind::MU;
    Elem param; // over F_p; unset for the MU fiber
};

struct ReductionOutcome {
    std::optional<Fiber> standard;
    std::optional<Fiber> twisted;
    // admissible valuations of the twisting element b; the recorded twisted
    // fiber uses the largest admissible valuation (the most negative power
    // still compatible with both inequalities)
    std::vector<long> twisted_witness_vals;
    long twisted_default_witness = 0;
    bool bad() const { return !standard && !twisted; }
};

// unipotent family: good reduction iff p is not 2 or 5 and the parameter is
// p-integral; the fiber degenerates to the MU curve when the parameter
// vanishes mod p
ReductionOutcome classify_ga_reduction(const mpq_class& xi, unsigned long p);

// split torus family: standard good reduction iff u and u - 1 are p-units;
// twisted good reduction iff p is odd, not 5, and v_p(u - 5/4) >= 4
ReductionOutcome classify_split_gm_reduction(const mpq_class& u, unsigned long p);

struct FlatLimit {
    CurveMap curve; // over F_p, coefficients cleared of the minimal power of p
    bool degenerate = false;
};

// exact coordinates of the translated curve over Q, scaled to p-integral
// coefficients with a unit somewhere, then reduced mod p
FlatLimit flat_limit(const QuinticSpec& spec, const Mat& g, unsigned long p);

struct SUnitSolutionSet {
    std::vector<unsigned long> s;
    long bound = 0;
    std::vector<mpq_class> solutions; // u with u and 1 - u both S-units
};

// brute-force search over u = +- prod p^e, |e| <= bound; completeness is
// relative to the bound
SUnitSolutionSet s_unit_equation(const std::vector<unsigned long>& s, long bound);

// local Hilbert symbol at an odd prime, at 2, or at the real place (p = 0)
int hilbert_symbol(const mpq_class& a, const mpq_class& b, unsigned long p);

struct BrauerClasses {
    long count = 0;
    // each class recorded by its ramification set; 0 stands for the real place
    std::vector<std::vector<unsigned long>> ramification_sets;
};

// quaternion classes supported on S, deduplicated by ramification set and
// checked against the even-subset description of S together with the real
// place
BrauerClasses brauer_two_torsion_count(const std::vector<unsigned long>& s);

// counting formulas over Q: zero unless both 2 and 5 are in S
long shaf_pgl2_count(const std::vector<unsigned long>& s);
mpz_class shaf_ga_prime_count(const std::vector<unsigned long>& s);

struct GmCandidate {
    mpq_class u;
    struct PrimeOutcome {
        unsigned long p = 0;
        bool std_present = false;
        bool tw_present = false;
    };
    std::vector<PrimeOutcome> outcomes; // primes outside S up to the report bound
};

std::vector<GmCandidate> shaf_gm_candidates(const std::vector<unsigned long>& s, long bound,
                                            unsigned long report_prime_bound);

} // namespace fano
