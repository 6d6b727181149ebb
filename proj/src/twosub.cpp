#include "zgu/twosub.hpp"

namespace zgu {

namespace {

std::string involution_label_for(long q, int eps) {
    if (eps == 1) return "a^" + std::to_string((q - 1) / 4);
    return "b^" + std::to_string((q + 1) / 4);
}

Rational xi_at_involution(long q, int eps, const CharRow& xi) {
    auto v = xi.values.at(involution_label_for(q, eps)).as_rational();
    if (!v || *v != Rational(-2 * eps))
        throw Error("obstruction: xi(s) != -2*eps, table inconsistent");
    return *v;
}

} // namespace

Precondition precondition_8_divides(long q) {
    auto [p, f] = prime_power(q);
    (void)f;
    if (p == 2 || q < 7) throw UnsupportedQ("precondition_8_divides: need odd q >= 7");
    Precondition pre;
    pre.eps = (q % 4 == 1) ? 1 : -1;
    pre.eight_divides = ((q - pre.eps) % 8 == 0);
    pre.note = pre.eight_divides
                   ? "8 | q - eps: 2-subgroups of order >= 8 are conceivable"
                   : "8 does not divide q - eps: |H| >= 8 is impossible, theorem vacuous";
    return pre;
}

ObstructionReport obstruction_E8(long q, const CharRow& xi) {
    Precondition pre = precondition_8_divides(q);
    if (!pre.eight_divides) throw PreconditionFailed("obstruction_E8: 8 does not divide q - eps");
    const int eps = pre.eps;
    Rational xs = xi_at_involution(q, eps, xi);
    // sum_{x in H} lambda(x) xi(x^-1) = xi(1) + xi(s) * (3 - 4) for nonprincipal lambda
    Rational sum = Rational(xi.degree) - xs;
    ObstructionReport rep;
    rep.test = "E8";
    rep.q = q;
    rep.eps = eps;
    rep.raw_sum = sum;
    rep.scalar_product = sum / 8;
    if (sum != Rational(q + 3 * eps)) throw Error("obstruction_E8: sum != q + 3*eps");
    if (is_integer(rep.scalar_product))
        throw Error("obstruction_E8: (q+3eps)/8 unexpectedly integral");
    rep.verdict = "Contradiction";
    rep.witness = "sum = q+3eps = " + sum.str() + "; scalar product " +
                  rep.scalar_product.str() + " is not a nonnegative integer";
    return rep;
}

ObstructionReport obstruction_C4xC2(long q, const CharRow& xi) {
    Precondition pre = precondition_8_divides(q);
    if (!pre.eight_divides)
        throw PreconditionFailed("obstruction_C4xC2: 8 does not divide q - eps");
    const int eps = pre.eps;
    (void)xi_at_involution(q, eps, xi);
    // sum = (q+eps) + 3(-2eps) + 2 xi(u) + 2 xi(v); xi(u), xi(v) = 0 mod 4,
    // so the last two terms vanish mod 8 and sum = q - 5 eps = q + 3 eps mod 8
    long residue = ((q - 5 * eps) % 8 + 8) % 8;
    if (residue != ((q + 3 * eps) % 8 + 8) % 8)
        throw Error("obstruction_C4xC2: residue bookkeeping failed");
    ObstructionReport rep;
    rep.test = "C4xC2";
    rep.q = q;
    rep.eps = eps;
    rep.raw_sum = Rational(residue);
    rep.modulus = 8;
    if (residue == 0) throw Error("obstruction_C4xC2: q+3eps = 0 mod 8, no contradiction");
    rep.verdict = "Contradiction";
    rep.witness = "sum = q+3eps = " + std::to_string(residue) +
                  " mod 8, nonzero, so <lambda, xi_H> is not an integer";
    return rep;
}

ObstructionReport obstruction_Q8(long q, const CharRow& xi, const CharTable& table,
                                 const ClassTable& classes) {
    Precondition pre = precondition_8_divides(q);
    if (!pre.eight_divides) throw PreconditionFailed("obstruction_Q8: 8 does not divide q - eps");
    const int eps = pre.eps;
    if (fs_indicator(table, classes, xi.label) != 1)
        throw IndicatorNotOne("obstruction_Q8: Frobenius-Schur indicator of xi is not 1");
    Rational xs = xi_at_involution(q, eps, xi);
    // sum = 2 xi(1) + (-2) xi(s) = 2(q+eps) + 4 eps = 2(q-eps) + 8 eps
    Rational sum = Rational(2) * Rational(xi.degree) - Rational(2) * xs;
    if (sum != Rational(2 * (q - eps) + 8 * eps)) throw Error("obstruction_Q8: sum mismatch");
    ObstructionReport rep;
    rep.test = "Q8";
    rep.q = q;
    rep.eps = eps;
    rep.raw_sum = sum;
    rep.scalar_product = sum / 8; // = (q + 3 eps)/4
    if (!is_integer(rep.scalar_product) || rat_num(rep.scalar_product) % 2 == 0)
        throw Error("obstruction_Q8: (q+3eps)/4 is not an odd integer");
    rep.verdict = "Contradiction";
    rep.witness = "sum = 2(q-eps)+8eps = " + sum.str() + "; scalar product " +
                  rep.scalar_product.str() +
                  " is odd, but real realizability of xi forces an even value";
    return rep;
}

Theorem21Report theorem21_verdict(long q) {
    auto [p, f] = prime_power(q);
    (void)f;
    Theorem21Report rep;
    rep.q = q;
    if (p == 2) {
        if (q < 4) throw UnsupportedQ("theorem21_verdict: q < 4");
        rep.eps = 0;
        rep.verdict = "elementary abelian";
        rep.note = "q even: Sylow 2-subgroups of G have exponent 2, hence so does every "
                   "finite 2-subgroup of V(ZG), which is therefore elementary abelian";
        return rep;
    }
    if (q < 5) throw UnsupportedQ("theorem21_verdict: odd q must be >= 5");
    if (q == 5) {
        rep.eps = 1;
        rep.verdict = "cyclic or dihedral";
        rep.note = "q = 5: G is isomorphic to A5 and the statement is known externally; "
                   "no computation performed";
        return rep;
    }
    Precondition pre = precondition_8_divides(q);
    rep.eps = pre.eps;
    if (!pre.eight_divides) {
        rep.verdict = "cyclic or dihedral";
        rep.note = pre.note + " (2-groups of order <= 4 are cyclic or a four-group)";
        return rep;
    }
    ClassTable classes = conjugacy_classes(q);
    CharTable table = build_char_table(q);
    const CharRow& xi = test_character(table, classes);
    rep.obstructions.push_back(obstruction_E8(q, xi));
    rep.obstructions.push_back(obstruction_C4xC2(q, xi));
    rep.obstructions.push_back(obstruction_Q8(q, xi, table, classes));
    rep.verdict = "cyclic or dihedral";
    rep.note = "maximal abelian subgroups are cyclic or four-groups; semidihedral groups "
               "contain C4 x C2 and generalized quaternion groups contain Q8, so the three "
               "obstructions leave only cyclic and dihedral 2-groups";
    return rep;
}

} // namespace zgu
