#pragma once

#include <map>
#include <string>
#include <vector>

#include "zgu/chartable.hpp"

namespace zgu {

/// Partial augmentations of a hypothetical torsion unit of a given order.
/// Invariants: entries sum to 1; no entry at class "1" for order > 1;
/// support only on classes whose element order divides the unit order.
struct PAVector {
    long unit_order = 1;
    std::map<std::string, long> eps; // class label -> partial augmentation

    void validate(const ClassTable& classes) const;
};

/// For each divisor e > 1 of n, the PAVector of the power u^(n/e) of
/// order e.
struct UnitChain {
    long n = 1;
    std::map<long, PAVector> pa;
};

/// Linear extension chi(u) = sum over classes of eps_C(u) * chi(C).
Cyclo extended_value(const std::map<std::string, Cyclo>& chi_values, const PAVector& pa);

struct Verdict {
    bool pass = false;
    std::string witness;
};

/// The Cohn-Livingstone instance the proof uses: a unit of order 4 has
/// even partial augmentation at every order-2 class. Other prime-power
/// orders raise UnsupportedInstance.
Verdict cl_divisibility_check(const PAVector& pa, long p2, const ClassTable& classes);

/// Eigenvalue multiplicity mu_l = (1/n) sum_j chi(u^j) zeta_n^(-jl) with
/// chi(u^j) taken at the chain's PAVector for the order of u^j.
/// Throws NotRational on an inconsistent chain.
Rational lp_multiplicity(const UnitChain& chain, const std::map<std::string, Cyclo>& chi_values,
                         long chi_degree, long l, const ClassTable& classes,
                         const CharTable& table);

struct HelpOptions {
    long box = 10;
    long cap = 10'000'000;
};

struct HelpSolution {
    UnitChain chain;
    bool trivial = false;
};

struct HelpResult {
    long q = 0;
    long n = 0;
    std::vector<HelpSolution> solutions;
    bool complete = true; // false when the candidate cap was hit
};

/// All unit chains for order n with entries in [-B, B] surviving the
/// augmentation, Berman-Higman, support, Cohn-Livingstone, and
/// Luthar-Passi nonnegative-integer constraints. For powers of order
/// coprime to p the Luthar-Passi step runs over the ordinary characters
/// and the defining-characteristic Brauer characters.
HelpResult help_enumerate(long q, long n, const HelpOptions& opts = {});

} // namespace zgu
