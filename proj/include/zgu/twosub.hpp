#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgu/chartable.hpp"
#include "zgu/rational.hpp"

namespace zgu {

/// Outcome of one scalar-product obstruction. raw_sum is either an exact
/// rational or a residue class mod `modulus` (modulus = 0 means exact).
struct ObstructionReport {
    std::string test;
    long q = 0;
    int eps = 0;
    Rational raw_sum;
    long modulus = 0;
    Rational scalar_product; // meaningful only for exact sums
    std::string verdict;     // "Contradiction", "Vacuous", "Pass"
    std::string witness;
};

struct Precondition {
    int eps = 0;
    bool eight_divides = false;
    std::string note;
};

/// eps with q = eps mod 4, and whether 8 | q - eps (|H| >= 8 is possible
/// only in that case).
Precondition precondition_8_divides(long q);

ObstructionReport obstruction_E8(long q, const CharRow& xi);
ObstructionReport obstruction_C4xC2(long q, const CharRow& xi);
ObstructionReport obstruction_Q8(long q, const CharRow& xi, const CharTable& table,
                                 const ClassTable& classes);

struct Theorem21Report {
    long q = 0;
    int eps = 0;
    std::string verdict; // "cyclic or dihedral", "vacuous", ...
    std::string note;
    std::vector<ObstructionReport> obstructions;
};

Theorem21Report theorem21_verdict(long q);

} // namespace zgu
