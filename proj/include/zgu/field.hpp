#pragma once

#include <vector>

#include "zgu/errors.hpp"

namespace zgu {

/// An element of GF(p^f) in polynomial residue representation:
/// coeffs[i] is the coefficient of x^i, reduced into [0, p).
struct FqElem {
    std::vector<int> coeffs;

    bool operator==(const FqElem&) const = default;
};

/// Deterministic description of GF(p^f). The modulus is the
/// lexicographically smallest monic irreducible of degree f over Z/p
/// under coefficient order (c_0, c_1, ...). For f = 1 the modulus is x.
struct FieldSpec {
    int p = 0;
    int f = 0;
    long q = 0;                // p^f
    std::vector<int> modulus;  // constant term first, length f+1, top coeff 1
};

FieldSpec build_field(int p, int f);

FqElem fq_zero(const FieldSpec& spec);
FqElem fq_one(const FieldSpec& spec);
FqElem fq_from_int(const FieldSpec& spec, long n);

FqElem fq_add(const FqElem& a, const FqElem& b, const FieldSpec& spec);
FqElem fq_sub(const FqElem& a, const FqElem& b, const FieldSpec& spec);
FqElem fq_neg(const FqElem& a, const FieldSpec& spec);
FqElem fq_mul(const FqElem& a, const FqElem& b, const FieldSpec& spec);
FqElem fq_inv(const FqElem& a, const FieldSpec& spec);
FqElem fq_pow(const FqElem& a, long e, const FieldSpec& spec);

bool fq_is_zero(const FqElem& a);

/// Position of an element in the deterministic enumeration order
/// (coefficient-vector lexicographic, constant term fastest-varying),
/// i.e. idx = sum coeffs[i] * p^i. Zero has index 0.
long fq_index(const FqElem& a, const FieldSpec& spec);
FqElem fq_element(const FieldSpec& spec, long index);

/// Multiplicative order of a nonzero element.
long fq_order(const FqElem& a, const FieldSpec& spec);

/// First element in enumeration order with multiplicative order q-1.
FqElem primitive_element(const FieldSpec& spec);

/// True iff x = y^2 for some y; 0 counts as a square. Requires q odd.
bool is_square(const FqElem& x, const FieldSpec& spec);

} // namespace zgu
