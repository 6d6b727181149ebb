#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zgu/field.hpp"

namespace zgu {

/// Element of PSL(2,q): 2x2 determinant-1 matrix stored as the canonical
/// representative of the pair {M, -M}. Canonical form: the first nonzero
/// entry e in scan order (a, b, c, d) satisfies fq_index(e) < fq_index(-e).
struct PSL2Elem {
    FqElem a, b, c, d;

    bool operator==(const PSL2Elem&) const = default;
    bool operator<(const PSL2Elem& o) const;
};

PSL2Elem psl2_make(const FieldSpec& spec, const FqElem& a, const FqElem& b,
                   const FqElem& c, const FqElem& d);
PSL2Elem psl2_identity(const FieldSpec& spec);
PSL2Elem psl2_mul(const PSL2Elem& x, const PSL2Elem& y, const FieldSpec& spec);
PSL2Elem psl2_inv(const PSL2Elem& x, const FieldSpec& spec);
PSL2Elem psl2_pow(const PSL2Elem& x, long e, const FieldSpec& spec);
long psl2_order(const PSL2Elem& x, const FieldSpec& spec);

/// |PSL(2,q)| = q(q^2-1)/gcd(2,q-1). Rejects q < 4 (non-simple inputs).
long group_order(long q);

/// Default cap on explicit enumeration (|G| <= 9828 at q = 27).
/// Overridable through the ZGU_BRUTE_BOUND environment variable.
long brute_bound();

std::vector<PSL2Elem> enumerate_group(const FieldSpec& spec, long bound = 0);

struct ClassInfo {
    std::string label;      // "1", "c", "d", "a^l", "b^m"
    PSL2Elem rep;
    long size = 0;
    long element_order = 0;
};

struct ClassTable {
    long q = 0;
    int eps = 0;             // q = eps mod 4 (0 for brute-force even-q tables)
    FieldSpec spec;
    std::vector<ClassInfo> classes;
    bool structured = false; // symbolic class labels vs. brute-force labels

    // brute-force tables carry the full element -> class index map
    std::map<PSL2Elem, int> element_class;

    const ClassInfo& info(const std::string& label) const;
    const std::string& involution_label() const;
};

/// Structured class data (labels 1, c, d, a^l, b^m) for odd q >= 5.
ClassTable conjugacy_classes(long q);

/// Orbit partition of the enumerated group (any q within the brute bound).
ClassTable conjugacy_classes_brute(long q, long bound = 0);

std::string class_of(const PSL2Elem& x, const ClassTable& table);

std::map<std::string, std::string> power_map(const ClassTable& table, long k);

std::set<std::string> real_classes(const ClassTable& table);

/// 2 if r = p, (r-1)/2 if r != p, for odd primes r dividing the group order.
long count_classes_of_order_r(long q, long r);

long centralizer_order(const ClassTable& table, const std::string& label);

enum class SubgroupShape { Cyclic, Dihedral, FourGroup, ElementaryAbelian8, Quaternion8 };

/// Exhaustive subgroup search in the enumerated group. `n` is the subgroup
/// order for Cyclic/Dihedral and ignored for the fixed-order shapes.
std::optional<std::vector<PSL2Elem>> find_subgroup(long q, SubgroupShape shape, long n = 0,
                                                   long bound = 0);

/// Factor q as p^f; throws UnsupportedQ when q is not a prime power.
std::pair<int, int> prime_power(long q);

} // namespace zgu
