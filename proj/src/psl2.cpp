#include "zgu/psl2.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <tuple>

namespace zgu {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::array<long, 4> idx4(const PSL2Elem& x, const FieldSpec& spec) {
    return {fq_index(x.a, spec), fq_index(x.b, spec), fq_index(x.c, spec), fq_index(x.d, spec)};
}

} // namespace

bool PSL2Elem::operator<(const PSL2Elem& o) const {
    // coefficient vectors compare lexicographically; enough for set ordering
    return std::tie(a.coeffs, b.coeffs, c.coeffs, d.coeffs) <
           std::tie(o.a.coeffs, o.b.coeffs, o.c.coeffs, o.d.coeffs);
}

std::pair<int, int> prime_power(long q) {
    if (q < 2) throw UnsupportedQ("q must be >= 2");
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    if (p == 0) return {static_cast<int>(q), 1};
    int f = 0;
    long t = q;
    while (t % p == 0) { t /= p; ++f; }
    if (t != 1) throw UnsupportedQ("q = " + std::to_string(q) + " is not a prime power");
    return {static_cast<int>(p), f};
}

long group_order(long q) {
    if (q < 4) throw UnsupportedQ("group_order: q < 4 rejected (PSL(2,q) not simple)");
    auto [p, f] = prime_power(q);
    (void)f;
    long n = (q - 1) * q * (q + 1);
    return (p == 2) ? n : n / 2;
}

long brute_bound() {
    if (const char* s = std::getenv("ZGU_BRUTE_BOUND")) {
        long v = std::atol(s);
        if (v >= 4) return v;
    }
    return 27;
}

PSL2Elem psl2_make(const FieldSpec& spec, const FqElem& a, const FqElem& b,
                   const FqElem& c, const FqElem& d) {
    FqElem det = fq_sub(fq_mul(a, d, spec), fq_mul(b, c, spec), spec);
    if (!(det == fq_one(spec))) throw Error("psl2_make: determinant is not 1");
    PSL2Elem m{a, b, c, d};
    if (spec.p == 2) return m;
    for (const FqElem* e : {&m.a, &m.b, &m.c, &m.d}) {
        if (fq_is_zero(*e)) continue;
        if (fq_index(*e, spec) > fq_index(fq_neg(*e, spec), spec)) {
            m = PSL2Elem{fq_neg(m.a, spec), fq_neg(m.b, spec), fq_neg(m.c, spec), fq_neg(m.d, spec)};
        }
        break;
    }
    return m;
}

PSL2Elem psl2_identity(const FieldSpec& spec) {
    return psl2_make(spec, fq_one(spec), fq_zero(spec), fq_zero(spec), fq_one(spec));
}

PSL2Elem psl2_mul(const PSL2Elem& x, const PSL2Elem& y, const FieldSpec& spec) {
    return psl2_make(spec,
        fq_add(fq_mul(x.a, y.a, spec), fq_mul(x.b, y.c, spec), spec),
        fq_add(fq_mul(x.a, y.b, spec), fq_mul(x.b, y.d, spec), spec),
        fq_add(fq_mul(x.c, y.a, spec), fq_mul(x.d, y.c, spec), spec),
        fq_add(fq_mul(x.c, y.b, spec), fq_mul(x.d, y.d, spec), spec));
}

PSL2Elem psl2_inv(const PSL2Elem& x, const FieldSpec& spec) {
    // inverse of (a,b;c,d) with det 1 is (d,-b;-c,a)
    return psl2_make(spec, x.d, fq_neg(x.b, spec), fq_neg(x.c, spec), x.a);
}

PSL2Elem psl2_pow(const PSL2Elem& x, long e, const FieldSpec& spec) {
    PSL2Elem acc = psl2_identity(spec);
    PSL2Elem base = (e < 0) ? psl2_inv(x, spec) : x;
    if (e < 0) e = -e;
    while (e > 0) {
        if (e & 1) acc = psl2_mul(acc, base, spec);
        base = psl2_mul(base, base, spec);
        e >>= 1;
    }
    return acc;
}

long psl2_order(const PSL2Elem& x, const FieldSpec& spec) {
    const PSL2Elem id = psl2_identity(spec);
    PSL2Elem y = x;
    long ord = 1;
    while (!(y == id)) {
        y = psl2_mul(y, x, spec);
        ++ord;
    }
    return ord;
}

std::vector<PSL2Elem> enumerate_group(const FieldSpec& spec, long bound) {
    if (bound <= 0) bound = brute_bound();
    if (spec.q > bound)
        throw BoundExceeded("enumerate_group: q = " + std::to_string(spec.q) +
                            " exceeds bound " + std::to_string(bound));
    std::set<PSL2Elem> out;
    const FqElem zero = fq_zero(spec), one = fq_one(spec);
    // a != 0: d = (1 + bc)/a, b and c free
    for (long ia = 1; ia < spec.q; ++ia) {
        FqElem a = fq_element(spec, ia);
        FqElem ainv = fq_inv(a, spec);
        for (long ib = 0; ib < spec.q; ++ib) {
            FqElem b = fq_element(spec, ib);
            for (long ic = 0; ic < spec.q; ++ic) {
                FqElem c = fq_element(spec, ic);
                FqElem d = fq_mul(fq_add(one, fq_mul(b, c, spec), spec), ainv, spec);
                out.insert(psl2_make(spec, a, b, c, d));
            }
        }
    }
    // a = 0: bc = -1, d free
    for (long ib = 1; ib < spec.q; ++ib) {
        FqElem b = fq_element(spec, ib);
        FqElem c = fq_neg(fq_inv(b, spec), spec);
        for (long id = 0; id < spec.q; ++id)
            out.insert(psl2_make(spec, zero, b, c, fq_element(spec, id)));
    }
    return {out.begin(), out.end()};
}

const ClassInfo& ClassTable::info(const std::string& label) const {
    for (const auto& ci : classes)
        if (ci.label == label) return ci;
    throw Error("ClassTable: unknown label " + label);
}

const std::string& ClassTable::involution_label() const {
    for (const auto& ci : classes)
        if (ci.element_order == 2) return ci.label;
    throw Error("ClassTable: no involution class");
}

ClassTable conjugacy_classes(long q) {
    auto [p, f] = prime_power(q);
    if (p == 2 || q < 5) throw UnsupportedQ("conjugacy_classes: structured path needs odd q >= 5");
    ClassTable t;
    t.q = q;
    t.eps = (q % 4 == 1) ? 1 : -1;
    t.spec = build_field(p, f);
    t.structured = true;
    const FieldSpec& spec = t.spec;

    const FqElem one = fq_one(spec), zero = fq_zero(spec);
    FqElem alpha = primitive_element(spec);
    PSL2Elem A = psl2_make(spec, alpha, zero, zero, fq_inv(alpha, spec));

    FqElem nu = zero;
    for (long i = 1; i < q; ++i) {
        FqElem e = fq_element(spec, i);
        if (!is_square(e, spec)) { nu = e; break; }
    }

    // nonsplit torus generator: companion matrix (0,-1;1,t), first trace t
    // with irreducible characteristic polynomial and PSL order (q+1)/2
    PSL2Elem B = psl2_identity(spec);
    bool found_b = false;
    for (long i = 0; i < q && !found_b; ++i) {
        FqElem tr = fq_element(spec, i);
        FqElem disc = fq_sub(fq_mul(tr, tr, spec), fq_from_int(spec, 4), spec);
        if (fq_is_zero(disc) || is_square(disc, spec)) continue;
        PSL2Elem cand = psl2_make(spec, zero, fq_neg(one, spec), one, tr);
        if (psl2_order(cand, spec) == (q + 1) / 2) { B = cand; found_b = true; }
    }
    if (!found_b) throw Error("conjugacy_classes: no nonsplit torus generator");

    t.classes.push_back({"1", psl2_identity(spec), 1, 1});
    t.classes.push_back({"c", psl2_make(spec, one, one, zero, one), (q * q - 1) / 2, p});
    t.classes.push_back({"d", psl2_make(spec, one, nu, zero, one), (q * q - 1) / 2, p});

    const long L = (t.eps == 1) ? (q - 1) / 4 : (q - 3) / 4;
    const long M = (t.eps == 1) ? (q - 1) / 4 : (q + 1) / 4;
    const long ord_a = (q - 1) / 2, ord_b = (q + 1) / 2;
    for (long l = 1; l <= L; ++l) {
        long eo = ord_a / std::gcd(l, ord_a);
        long size = (eo == 2) ? q * (q + 1) / 2 : q * (q + 1);
        t.classes.push_back({"a^" + std::to_string(l), psl2_pow(A, l, spec), size, eo});
    }
    for (long m = 1; m <= M; ++m) {
        long eo = ord_b / std::gcd(m, ord_b);
        long size = (eo == 2) ? q * (q - 1) / 2 : q * (q - 1);
        t.classes.push_back({"b^" + std::to_string(m), psl2_pow(B, m, spec), size, eo});
    }

    long total = 0;
    for (const auto& ci : t.classes) total += ci.size;
    if (total != group_order(q)) throw Error("conjugacy_classes: class equation failed");
    return t;
}

namespace {

// Conjugation generating set: unipotent generators over an F_p-basis.
std::vector<PSL2Elem> sl2_generators(const FieldSpec& spec) {
    std::vector<PSL2Elem> gens;
    const FqElem one = fq_one(spec), zero = fq_zero(spec);
    FqElem x = one;
    FqElem alpha = (spec.f > 1) ? fq_element(spec, spec.p) : one; // the class of X
    for (int i = 0; i < spec.f; ++i) {
        gens.push_back(psl2_make(spec, one, x, zero, one));
        gens.push_back(psl2_make(spec, one, zero, x, one));
        x = fq_mul(x, alpha, spec);
    }
    return gens;
}

} // namespace

ClassTable conjugacy_classes_brute(long q, long bound) {
    auto [p, f] = prime_power(q);
    ClassTable t;
    t.q = q;
    t.eps = (p == 2) ? 0 : ((q % 4 == 1) ? 1 : -1);
    t.spec = build_field(p, f);
    t.structured = false;
    const FieldSpec& spec = t.spec;

    std::vector<PSL2Elem> elems = enumerate_group(spec, bound);
    std::vector<PSL2Elem> gens = sl2_generators(spec);
    std::vector<std::vector<PSL2Elem>> orbits;
    std::set<PSL2Elem> seen;
    for (const auto& x : elems) {
        if (seen.count(x)) continue;
        std::set<PSL2Elem> orbit{x};
        std::deque<PSL2Elem> work{x};
        while (!work.empty()) {
            PSL2Elem y = work.front();
            work.pop_front();
            for (const auto& g : gens) {
                PSL2Elem z = psl2_mul(psl2_mul(g, y, spec), psl2_inv(g, spec), spec);
                if (orbit.insert(z).second) work.push_back(z);
            }
        }
        seen.insert(orbit.begin(), orbit.end());
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    std::stable_sort(orbits.begin(), orbits.end(), [&](const auto& u, const auto& v) {
        long ou = psl2_order(u.front(), spec), ov = psl2_order(v.front(), spec);
        return std::tie(ou, u.front()) < std::tie(ov, v.front());
    });
    for (size_t i = 0; i < orbits.size(); ++i) {
        ClassInfo ci;
        ci.label = "C" + std::to_string(i + 1);
        ci.rep = orbits[i].front();
        ci.size = static_cast<long>(orbits[i].size());
        ci.element_order = psl2_order(ci.rep, spec);
        t.classes.push_back(ci);
        for (const auto& x : orbits[i]) t.element_class[x] = static_cast<int>(i);
    }
    long total = 0;
    for (const auto& ci : t.classes) total += ci.size;
    if (total != group_order(q)) throw Error("conjugacy_classes_brute: class equation failed");
    return t;
}

std::string class_of(const PSL2Elem& x, const ClassTable& table) {
    const FieldSpec& spec = table.spec;
    if (!table.structured) {
        auto it = table.element_class.find(x);
        if (it == table.element_class.end()) throw Error("class_of: element not in group");
        return table.classes[it->second].label;
    }
    if (x == psl2_identity(spec)) return "1";
    FqElem tr = fq_add(x.a, x.d, spec);
    FqElem two = fq_from_int(spec, 2);
    if (tr == two || tr == fq_neg(two, spec)) {
        // unipotent: normalize the lift to trace 2, extract the square class
        PSL2Elem m = x;
        if (!(tr == two))
            m = PSL2Elem{fq_neg(x.a, spec), fq_neg(x.b, spec), fq_neg(x.c, spec), fq_neg(x.d, spec)};
        // N = m - I; pick e with Ne != 0; invariant u = det([Ne | e])
        FqElem n00 = fq_sub(m.a, fq_one(spec), spec);
        FqElem n10 = m.c;
        FqElem n01 = m.b;
        FqElem n11 = fq_sub(m.d, fq_one(spec), spec);
        FqElem w0, w1, e0, e1;
        if (!fq_is_zero(n00) || !fq_is_zero(n10)) {
            w0 = n00; w1 = n10; e0 = fq_one(spec); e1 = fq_zero(spec);
        } else {
            w0 = n01; w1 = n11; e0 = fq_zero(spec); e1 = fq_one(spec);
        }
        FqElem u = fq_sub(fq_mul(w0, e1, spec), fq_mul(w1, e0, spec), spec);
        return is_square(u, spec) ? "c" : "d";
    }
    // semisimple: trace up to sign identifies the class
    long key = std::min(fq_index(tr, spec), fq_index(fq_neg(tr, spec), spec));
    for (const auto& ci : table.classes) {
        if (ci.label == "1" || ci.label == "c" || ci.label == "d") continue;
        FqElem rt = fq_add(ci.rep.a, ci.rep.d, spec);
        long rkey = std::min(fq_index(rt, spec), fq_index(fq_neg(rt, spec), spec));
        if (rkey == key) return ci.label;
    }
    throw Error("class_of: no class matched (element not in group?)");
}

std::map<std::string, std::string> power_map(const ClassTable& table, long k) {
    std::map<std::string, std::string> out;
    for (const auto& ci : table.classes)
        out[ci.label] = class_of(psl2_pow(ci.rep, k, table.spec), table);
    return out;
}

std::set<std::string> real_classes(const ClassTable& table) {
    std::set<std::string> out;
    for (const auto& ci : table.classes)
        if (class_of(psl2_inv(ci.rep, table.spec), table) == ci.label)
            out.insert(ci.label);
    return out;
}

long count_classes_of_order_r(long q, long r) {
    auto [p, f] = prime_power(q);
    (void)f;
    if (r < 3 || !is_prime(r)) throw NotADivisor("count_classes_of_order_r: r must be an odd prime");
    if (group_order(q) % r != 0)
        throw NotADivisor("count_classes_of_order_r: r does not divide |G|");
    return (r == p) ? 2 : (r - 1) / 2;
}

long centralizer_order(const ClassTable& table, const std::string& label) {
    return group_order(table.q) / table.info(label).size;
}

namespace {

std::optional<std::vector<PSL2Elem>> closure_if_order(const std::vector<PSL2Elem>& gens,
                                                      const FieldSpec& spec, size_t want) {
    std::set<PSL2Elem> h{psl2_identity(spec)};
    std::deque<PSL2Elem> work(gens.begin(), gens.end());
    for (const auto& g : gens) h.insert(g);
    while (!work.empty()) {
        PSL2Elem y = work.front();
        work.pop_front();
        for (const auto& g : gens) {
            PSL2Elem z = psl2_mul(y, g, spec);
            if (h.size() > want) return std::nullopt;
            if (h.insert(z).second) work.push_back(z);
        }
    }
    if (h.size() != want) return std::nullopt;
    return std::vector<PSL2Elem>(h.begin(), h.end());
}

} // namespace

std::optional<std::vector<PSL2Elem>> find_subgroup(long q, SubgroupShape shape, long n,
                                                   long bound) {
    auto [p, f] = prime_power(q);
    FieldSpec spec = build_field(p, f);
    std::vector<PSL2Elem> elems = enumerate_group(spec, bound);
    std::vector<long> orders(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) orders[i] = psl2_order(elems[i], spec);

    auto commute = [&](const PSL2Elem& x, const PSL2Elem& y) {
        return psl2_mul(x, y, spec) == psl2_mul(y, x, spec);
    };

    switch (shape) {
    case SubgroupShape::Cyclic: {
        if (n < 1) throw Error("find_subgroup: cyclic shape needs n >= 1");
        for (size_t i = 0; i < elems.size(); ++i) {
            if (orders[i] != n) continue;
            std::vector<PSL2Elem> h;
            PSL2Elem x = psl2_identity(spec);
            for (long k = 0; k < n; ++k) { h.push_back(x); x = psl2_mul(x, elems[i], spec); }
            std::sort(h.begin(), h.end());
            return h;
        }
        return std::nullopt;
    }
    case SubgroupShape::FourGroup: {
        for (size_t i = 0; i < elems.size(); ++i) {
            if (orders[i] != 2) continue;
            for (size_t j = i + 1; j < elems.size(); ++j) {
                if (orders[j] != 2 || !commute(elems[i], elems[j])) continue;
                if (auto h = closure_if_order({elems[i], elems[j]}, spec, 4)) return h;
            }
        }
        return std::nullopt;
    }
    case SubgroupShape::ElementaryAbelian8: {
        std::vector<size_t> invs;
        for (size_t i = 0; i < elems.size(); ++i)
            if (orders[i] == 2) invs.push_back(i);
        for (size_t i = 0; i < invs.size(); ++i)
            for (size_t j = i + 1; j < invs.size(); ++j) {
                if (!commute(elems[invs[i]], elems[invs[j]])) continue;
                for (size_t k = j + 1; k < invs.size(); ++k) {
                    if (!commute(elems[invs[i]], elems[invs[k]]) ||
                        !commute(elems[invs[j]], elems[invs[k]]))
                        continue;
                    auto h = closure_if_order({elems[invs[i]], elems[invs[j]], elems[invs[k]]},
                                              spec, 8);
                    if (!h) continue;
                    bool exp2 = true;
                    for (const auto& x : *h)
                        if (!(x == psl2_identity(spec)) && psl2_order(x, spec) != 2) exp2 = false;
                    if (exp2) return h;
                }
            }
        return std::nullopt;
    }
    case SubgroupShape::Dihedral: {
        if (n < 4 || n % 2 != 0) throw Error("find_subgroup: dihedral shape needs even n >= 4");
        const long rot = n / 2;
        for (size_t i = 0; i < elems.size(); ++i) {
            if (orders[i] != rot) continue;
            PSL2Elem rinv = psl2_inv(elems[i], spec);
            for (size_t j = 0; j < elems.size(); ++j) {
                if (orders[j] != 2) continue;
                PSL2Elem conj = psl2_mul(psl2_mul(elems[j], elems[i], spec),
                                         psl2_inv(elems[j], spec), spec);
                if (!(conj == rinv)) continue;
                if (auto h = closure_if_order({elems[i], elems[j]}, spec, static_cast<size_t>(n)))
                    return h;
            }
        }
        return std::nullopt;
    }
    case SubgroupShape::Quaternion8: {
        for (size_t i = 0; i < elems.size(); ++i) {
            if (orders[i] != 4) continue;
            PSL2Elem x2 = psl2_mul(elems[i], elems[i], spec);
            PSL2Elem xinv = psl2_inv(elems[i], spec);
            for (size_t j = 0; j < elems.size(); ++j) {
                if (orders[j] != 4 || i == j) continue;
                PSL2Elem y2 = psl2_mul(elems[j], elems[j], spec);
                if (!(y2 == x2)) continue;
                PSL2Elem conj = psl2_mul(psl2_mul(elems[j], elems[i], spec),
                                         psl2_inv(elems[j], spec), spec);
                if (!(conj == xinv)) continue;
                auto h = closure_if_order({elems[i], elems[j]}, spec, 8);
                if (!h) continue;
                int n4 = 0, n2 = 0;
                for (const auto& x : *h) {
                    long o = psl2_order(x, spec);
                    if (o == 4) ++n4;
                    if (o == 2) ++n2;
                }
                if (n4 == 6 && n2 == 1) return h;
            }
        }
        return std::nullopt;
    }
    }
    throw Error("find_subgroup: unknown shape");
}

} // namespace zgu
