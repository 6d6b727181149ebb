#pragma once

#include <map>
#include <string>
#include <vector>

#include "zgu/cyclo.hpp"
#include "zgu/psl2.hpp"

namespace zgu {

struct CharRow {
    std::string label;                   // "1", "psi", "chi_i", "theta_j", "eta_1", "eta_2"
    long degree = 0;
    std::map<std::string, Cyclo> values; // class label -> value
};

struct CharTable {
    long q = 0;
    int eps = 0;
    std::vector<CharRow> rows;

    const CharRow& row(const std::string& label) const;
};

/// Ordinary character table of PSL(2,q), odd q >= 5, with the class labels
/// of conjugacy_classes(q).
CharTable build_char_table(long q);

/// Irreducible Brauer characters of PSL(2,q) in the defining
/// characteristic: Steinberg tensor products of Frobenius twists of
/// symmetric powers of the natural module, one per restricted weight
/// (l_0,...,l_{f-1}) with even coordinate sum. Values are defined on the
/// p-regular classes only (the maps carry no entry at "c" or "d").
std::vector<CharRow> brauer_characters(long q);

/// The distinguished degree-(q+eps) character: chi_1 if eps = 1, theta_1 if
/// eps = -1. Checks xi(1) = q+eps and xi(s) = -2*eps. Rejects q = 5.
const CharRow& test_character(const CharTable& table, const ClassTable& classes);

struct OrthFailure {
    std::string kind; // "row" or "column"
    std::string first, second;
    std::string got;
};

struct OrthReport {
    bool ok = true;
    std::vector<OrthFailure> failures;
};

/// First orthogonality on all row pairs and second orthogonality against
/// centralizer orders, all in exact arithmetic. Collects failures instead
/// of throwing.
OrthReport verify_orthogonality(const CharTable& table, const ClassTable& classes);

/// Frobenius-Schur indicator (1/|G|) sum over g of chi(g^2), computed
/// class-wise through the squaring power map. Must land in {-1, 0, 1}.
int fs_indicator(const CharTable& table, const ClassTable& classes, const std::string& char_label);

/// Decomposition of the restriction of a G-character to an explicit tiny
/// subgroup H: multiplicity of every irreducible of H. Supported shapes:
/// cyclic, dihedral, four-group, elementary abelian 8, C4xC2, Q8.
std::map<std::string, Rational> restrict_multiplicities(
    const std::map<std::string, Cyclo>& xi_values, const std::vector<PSL2Elem>& subgroup,
    const ClassTable& classes);

/// Irreducible characters of a small group given as an explicit element
/// list (for the supported shapes), as per-element value vectors.
struct SmallGroupChar {
    std::string label;
    long degree = 0;
    std::vector<Cyclo> values; // indexed like the element list
};

std::vector<SmallGroupChar> small_group_characters(const std::vector<PSL2Elem>& subgroup,
                                                   const FieldSpec& spec);

} // namespace zgu
