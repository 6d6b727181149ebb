#include "zgu/chartable.hpp"

#include <algorithm>
#include <set>

namespace zgu {

const CharRow& CharTable::row(const std::string& label) const {
    for (const auto& r : rows)
        if (r.label == label) return r;
    throw Error("CharTable: unknown row " + label);
}

CharTable build_char_table(long q) {
    auto [p, f] = prime_power(q);
    if (p == 2 || q < 5) throw UnsupportedQ("build_char_table: need odd q >= 5");
    ClassTable classes = conjugacy_classes(q);
    CharTable t;
    t.q = q;
    t.eps = classes.eps;
    const int eps = t.eps;

    const long L = (eps == 1) ? (q - 1) / 4 : (q - 3) / 4;
    const long M = (eps == 1) ? (q - 1) / 4 : (q + 1) / 4;
    const long I = (eps == 1) ? (q - 5) / 4 : (q - 3) / 4;
    const long J = (eps == 1) ? (q - 1) / 4 : (q - 3) / 4;
    const long na = (q - 1) / 2, nb = (q + 1) / 2; // rho, sigma conductors

    Cyclo root = sqrt_eps_q(p, f);
    Cyclo half(Rational(1, 2));
    Cyclo eps_c(eps);
    Cyclo eta_on_c_plus = (eps_c + root) * Rational(1, 2);
    Cyclo eta_on_c_minus = (eps_c - root) * Rational(1, 2);
    (void)half;

    auto a_label = [](long l) { return "a^" + std::to_string(l); };
    auto b_label = [](long m) { return "b^" + std::to_string(m); };

    CharRow triv{"1", 1, {}};
    CharRow psi{"psi", q, {}};
    triv.values["1"] = Cyclo(1);
    psi.values["1"] = Cyclo(q);
    for (const char* u : {"c", "d"}) {
        triv.values[u] = Cyclo(1);
        psi.values[u] = Cyclo(0);
    }
    for (long l = 1; l <= L; ++l) { triv.values[a_label(l)] = Cyclo(1); psi.values[a_label(l)] = Cyclo(1); }
    for (long m = 1; m <= M; ++m) { triv.values[b_label(m)] = Cyclo(1); psi.values[b_label(m)] = Cyclo(-1); }
    t.rows.push_back(std::move(triv));
    t.rows.push_back(std::move(psi));

    for (long i = 1; i <= I; ++i) {
        CharRow r{"chi_" + std::to_string(i), q + 1, {}};
        r.values["1"] = Cyclo(q + 1);
        r.values["c"] = Cyclo(1);
        r.values["d"] = Cyclo(1);
        for (long l = 1; l <= L; ++l)
            r.values[a_label(l)] = Cyclo::root_of_unity(na, i * l) + Cyclo::root_of_unity(na, -i * l);
        for (long m = 1; m <= M; ++m) r.values[b_label(m)] = Cyclo(0);
        t.rows.push_back(std::move(r));
    }
    for (long j = 1; j <= J; ++j) {
        CharRow r{"theta_" + std::to_string(j), q - 1, {}};
        r.values["1"] = Cyclo(q - 1);
        r.values["c"] = Cyclo(-1);
        r.values["d"] = Cyclo(-1);
        for (long l = 1; l <= L; ++l) r.values[a_label(l)] = Cyclo(0);
        for (long m = 1; m <= M; ++m)
            r.values[b_label(m)] =
                -(Cyclo::root_of_unity(nb, j * m) + Cyclo::root_of_unity(nb, -j * m));
        t.rows.push_back(std::move(r));
    }
    for (int which : {1, 2}) {
        CharRow r{"eta_" + std::to_string(which), (q + eps) / 2, {}};
        r.values["1"] = Cyclo((q + eps) / 2);
        r.values["c"] = (which == 1) ? eta_on_c_plus : eta_on_c_minus;
        r.values["d"] = (which == 1) ? eta_on_c_minus : eta_on_c_plus;
        for (long l = 1; l <= L; ++l)
            r.values[a_label(l)] = (eps == 1) ? Cyclo((l % 2 == 0) ? 1 : -1) : Cyclo(0);
        for (long m = 1; m <= M; ++m)
            r.values[b_label(m)] = (eps == -1) ? Cyclo((m % 2 == 0) ? -1 : 1) : Cyclo(0);
        t.rows.push_back(std::move(r));
    }

    if (t.rows.size() != classes.classes.size())
        throw Error("build_char_table: row count does not match class count");
    long sumsq = 0;
    for (const auto& r : t.rows) sumsq += r.degree * r.degree;
    if (sumsq != group_order(q)) throw Error("build_char_table: sum of squared degrees wrong");
    return t;
}

const CharRow& test_character(const CharTable& table, const ClassTable& classes) {
    if (table.q == 5) throw QIsFive("test_character: q = 5 excluded");
    const CharRow& xi = table.row(table.eps == 1 ? "chi_1" : "theta_1");
    if (xi.degree != table.q + table.eps) throw Error("test_character: xi(1) != q+eps");
    const std::string& s = classes.involution_label();
    if (!(xi.values.at(s) == Cyclo(-2 * table.eps)))
        throw Error("test_character: xi(s) != -2*eps");
    return xi;
}

OrthReport verify_orthogonality(const CharTable& table, const ClassTable& classes) {
    OrthReport rep;
    const Rational g(group_order(table.q));
    for (size_t i = 0; i < table.rows.size(); ++i) {
        for (size_t j = i; j < table.rows.size(); ++j) {
            Cyclo acc;
            for (const auto& ci : classes.classes)
                acc += table.rows[i].values.at(ci.label) *
                       table.rows[j].values.at(ci.label).conj() * Rational(ci.size);
            Cyclo expected((i == j) ? g : Rational(0));
            if (!(acc == expected))
                rep.failures.push_back({"row", table.rows[i].label, table.rows[j].label,
                                        acc.to_string()});
        }
    }
    for (size_t i = 0; i < classes.classes.size(); ++i) {
        for (size_t j = i; j < classes.classes.size(); ++j) {
            Cyclo acc;
            for (const auto& r : table.rows)
                acc += r.values.at(classes.classes[i].label) *
                       r.values.at(classes.classes[j].label).conj();
            Rational want = (i == j) ? g / Rational(classes.classes[i].size) : Rational(0);
            if (!(acc == Cyclo(want)))
                rep.failures.push_back({"column", classes.classes[i].label,
                                        classes.classes[j].label, acc.to_string()});
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

int fs_indicator(const CharTable& table, const ClassTable& classes,
                 const std::string& char_label) {
    const CharRow& chi = table.row(char_label);
    auto pm = power_map(classes, 2);
    Cyclo acc;
    for (const auto& ci : classes.classes)
        acc += chi.values.at(pm.at(ci.label)) * Rational(ci.size);
    acc = acc * (Rational(1) / Rational(group_order(table.q)));
    auto r = acc.as_rational();
    if (!r || !is_integer(*r) || *r < -1 || *r > 1)
        throw NonIntegralIndicator("fs_indicator: " + acc.to_string());
    return static_cast<int>(rat_num(*r));
}

namespace {

struct SmallGroup {
    std::vector<PSL2Elem> elems;
    const FieldSpec* spec;
    std::map<PSL2Elem, size_t> index;
    std::vector<long> order;

    size_t idx(const PSL2Elem& x) const {
        auto it = index.find(x);
        if (it == index.end()) throw NotASubgroup("element product escapes the set");
        return it->second;
    }
    size_t mul(size_t i, size_t j) const { return idx(psl2_mul(elems[i], elems[j], *spec)); }
};

SmallGroup make_small_group(const std::vector<PSL2Elem>& subgroup, const FieldSpec& spec) {
    SmallGroup h;
    h.elems = subgroup;
    h.spec = &spec;
    for (size_t i = 0; i < h.elems.size(); ++i) h.index[h.elems[i]] = i;
    if (h.index.size() != h.elems.size()) throw NotASubgroup("duplicate elements");
    for (size_t i = 0; i < h.elems.size(); ++i) {
        h.order.push_back(psl2_order(h.elems[i], spec));
        for (size_t j = 0; j < h.elems.size(); ++j) h.mul(i, j); // closure check
    }
    return h;
}

// coordinates of x as g^k for cyclic H = <g>
std::vector<size_t> cyclic_logs(const SmallGroup& h, size_t gen) {
    std::vector<size_t> log(h.elems.size(), 0);
    size_t cur = h.idx(psl2_identity(*h.spec));
    for (size_t k = 0; k < h.elems.size(); ++k) {
        log[cur] = k;
        cur = h.mul(cur, gen);
    }
    return log;
}

void self_test_orthogonality(const std::vector<SmallGroupChar>& chars, size_t n) {
    for (size_t i = 0; i < chars.size(); ++i)
        for (size_t j = i; j < chars.size(); ++j) {
            Cyclo acc;
            for (size_t x = 0; x < n; ++x)
                acc += chars[i].values[x] * chars[j].values[x].conj();
            Cyclo want((i == j) ? Rational(n) : Rational(0));
            if (!(acc == want))
                throw Error("small group character table failed orthogonality self-test");
        }
}

} // namespace

std::vector<SmallGroupChar> small_group_characters(const std::vector<PSL2Elem>& subgroup,
                                                   const FieldSpec& spec) {
    SmallGroup h = make_small_group(subgroup, spec);
    const size_t n = h.elems.size();
    if (n > 64) throw NotASubgroup("subgroup too large (|H| > 64)");
    std::vector<SmallGroupChar> chars;
    const size_t id = h.idx(psl2_identity(spec));

    bool abelian = true;
    for (size_t i = 0; i < n && abelian; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (h.mul(i, j) != h.mul(j, i)) { abelian = false; break; }

    long max_order = *std::max_element(h.order.begin(), h.order.end());

    if (abelian && max_order == static_cast<long>(n)) {
        // cyclic
        size_t gen = 0;
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == static_cast<long>(n)) { gen = i; break; }
        auto log = cyclic_logs(h, gen);
        for (size_t j = 0; j < n; ++j) {
            SmallGroupChar c{"lin_" + std::to_string(j), 1, {}};
            c.values.resize(n);
            for (size_t x = 0; x < n; ++x)
                c.values[x] = Cyclo::root_of_unity(static_cast<long>(n),
                                                   static_cast<long>(j * log[x]));
            chars.push_back(std::move(c));
        }
    } else if (abelian && max_order == 2) {
        // elementary abelian 2-group (four-group or E8): pick an F2 basis
        std::vector<size_t> basis;
        std::set<size_t> span{id};
        for (size_t i = 0; i < n && span.size() < n; ++i) {
            if (h.order[i] != 2 || span.count(i)) continue;
            basis.push_back(i);
            std::set<size_t> next = span;
            for (size_t x : span) next.insert(h.mul(x, i));
            span = std::move(next);
        }
        const size_t k = basis.size();
        // coordinates of every element over the basis
        std::vector<std::vector<int>> coord(n);
        for (size_t mask = 0; mask < (1u << k); ++mask) {
            size_t cur = id;
            std::vector<int> bits(k, 0);
            for (size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) { cur = h.mul(cur, basis[b]); bits[b] = 1; }
            coord[cur] = bits;
        }
        for (size_t s = 0; s < (1u << k); ++s) {
            SmallGroupChar c{"lin_" + std::to_string(s), 1, {}};
            c.values.resize(n);
            for (size_t x = 0; x < n; ++x) {
                int dot = 0;
                for (size_t b = 0; b < k; ++b)
                    if (s & (1u << b)) dot ^= coord[x][b];
                c.values[x] = Cyclo(dot ? -1 : 1);
            }
            chars.push_back(std::move(c));
        }
    } else if (abelian && n == 8 && max_order == 4) {
        // C4 x C2
        size_t u = 0, v = 0;
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == 4) { u = i; break; }
        size_t u2 = h.mul(u, u);
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == 2 && i != u2) { v = i; break; }
        std::vector<std::pair<int, int>> coord(n, {-1, -1});
        size_t cu = id;
        for (int a = 0; a < 4; ++a) {
            coord[cu] = {a, 0};
            coord[h.mul(cu, v)] = {a, 1};
            cu = h.mul(cu, u);
        }
        for (int jj = 0; jj < 4; ++jj)
            for (int kk = 0; kk < 2; ++kk) {
                SmallGroupChar c{"lin_" + std::to_string(jj) + std::to_string(kk), 1, {}};
                c.values.resize(n);
                for (size_t x = 0; x < n; ++x)
                    c.values[x] = Cyclo::root_of_unity(4, jj * coord[x].first) *
                                  Cyclo((kk * coord[x].second) % 2 ? -1 : 1);
                chars.push_back(std::move(c));
            }
    } else if (!abelian && n % 2 == 0 && max_order == static_cast<long>(n / 2) &&
               [&] {
                   int count = 0;
                   for (size_t i = 0; i < n; ++i)
                       if (h.order[i] == static_cast<long>(n / 2)) ++count;
                   return count >= 1;
               }()) {
        // dihedral of order n = 2m
        const long m = static_cast<long>(n / 2);
        size_t r = 0;
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == m) { r = i; break; }
        // rotation coordinates; reflections get rot = -1
        std::vector<long> rot(n, -1);
        std::vector<long> refl(n, -1);
        size_t cur = id;
        for (long k = 0; k < m; ++k) { rot[cur] = k; cur = h.mul(cur, r); }
        size_t s = 0;
        bool found_s = false;
        for (size_t i = 0; i < n && !found_s; ++i)
            if (rot[i] < 0) { s = i; found_s = true; }
        if (!found_s) throw NotASubgroup("dihedral recognition failed");
        // index reflections as s * r^k
        size_t rk = id;
        for (long k = 0; k < m; ++k) {
            refl[h.mul(s, rk)] = k;
            rk = h.mul(rk, r);
        }
        auto push_linear = [&](const std::string& name, auto f) {
            SmallGroupChar c{name, 1, {}};
            c.values.resize(n);
            for (size_t x = 0; x < n; ++x) c.values[x] = Cyclo(f(rot[x], refl[x]));
            chars.push_back(std::move(c));
        };
        push_linear("lin_triv", [](long, long) { return 1; });
        push_linear("lin_sign", [](long k, long) { return k >= 0 ? 1 : -1; });
        if (m % 2 == 0) {
            push_linear("lin_alt1", [](long k, long kk) {
                long t = (k >= 0) ? k : kk;
                return (t % 2 == 0) ? 1 : -1;
            });
            push_linear("lin_alt2", [](long k, long kk) {
                if (k >= 0) return (k % 2 == 0) ? 1 : -1;
                return (kk % 2 == 0) ? -1 : 1;
            });
        }
        const long hmax = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
        for (long hh = 1; hh <= hmax; ++hh) {
            SmallGroupChar c{"dim2_" + std::to_string(hh), 2, {}};
            c.values.resize(n);
            for (size_t x = 0; x < n; ++x) {
                if (rot[x] >= 0)
                    c.values[x] = Cyclo::root_of_unity(m, hh * rot[x]) +
                                  Cyclo::root_of_unity(m, -hh * rot[x]);
                else
                    c.values[x] = Cyclo(0);
            }
            chars.push_back(std::move(c));
        }
    } else if (!abelian && n == 8 && max_order == 4) {
        // quaternion group of order 8
        int n2 = 0;
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == 2) ++n2;
        if (n2 != 1) throw NotASubgroup("unsupported shape");
        size_t z = 0, iu = 0, jv = 0;
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == 2) z = i;
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == 4) { iu = i; break; }
        size_t i3 = h.mul(h.mul(iu, iu), iu);
        for (size_t i = 0; i < n; ++i)
            if (h.order[i] == 4 && i != iu && i != i3) { jv = i; break; }
        // images in Q8 / center, a four-group with generators the images of i, j
        std::vector<std::pair<int, int>> im(n, {0, 0});
        auto set_pair = [&](size_t x, int a, int b) {
            im[x] = {a, b};
            im[h.mul(x, z)] = {a, b};
        };
        set_pair(id, 0, 0);
        set_pair(iu, 1, 0);
        set_pair(jv, 0, 1);
        set_pair(h.mul(iu, jv), 1, 1);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                SmallGroupChar c{"lin_" + std::to_string(a) + std::to_string(b), 1, {}};
                c.values.resize(n);
                for (size_t x = 0; x < n; ++x)
                    c.values[x] = Cyclo(((a * im[x].first + b * im[x].second) % 2) ? -1 : 1);
                chars.push_back(std::move(c));
            }
        SmallGroupChar c{"dim2", 2, {}};
        c.values.resize(n);
        for (size_t x = 0; x < n; ++x) {
            if (x == id) c.values[x] = Cyclo(2);
            else if (x == z) c.values[x] = Cyclo(-2);
            else c.values[x] = Cyclo(0);
        }
        chars.push_back(std::move(c));
    } else {
        throw NotASubgroup("unsupported small-group shape");
    }

    self_test_orthogonality(chars, n);
    return chars;
}

std::map<std::string, Rational> restrict_multiplicities(
    const std::map<std::string, Cyclo>& xi_values, const std::vector<PSL2Elem>& subgroup,
    const ClassTable& classes) {
    auto chars = small_group_characters(subgroup, classes.spec);
    const size_t n = subgroup.size();
    std::map<std::string, Rational> out;
    for (const auto& lam : chars) {
        Cyclo acc;
        for (size_t x = 0; x < n; ++x) {
            PSL2Elem xi_arg = psl2_inv(subgroup[x], classes.spec);
            acc += lam.values[x] * xi_values.at(class_of(xi_arg, classes));
        }
        acc = acc * (Rational(1) / Rational(static_cast<long>(n)));
        auto r = acc.as_rational();
        if (!r) throw NotRational("restriction multiplicity not rational: " + acc.to_string());
        out[lam.label] = *r;
    }
    return out;
}

namespace {

// 2x2 determinant-1 matrices over GF(q) without the PSL sign
// normalization; used to pin down the exact order of a torus lift.
struct RawMat {
    FqElem a, b, c, d;
};

RawMat raw_mul(const RawMat& x, const RawMat& y, const FieldSpec& spec) {
    return {fq_add(fq_mul(x.a, y.a, spec), fq_mul(x.b, y.c, spec), spec),
            fq_add(fq_mul(x.a, y.b, spec), fq_mul(x.b, y.d, spec), spec),
            fq_add(fq_mul(x.c, y.a, spec), fq_mul(x.d, y.c, spec), spec),
            fq_add(fq_mul(x.c, y.b, spec), fq_mul(x.d, y.d, spec), spec)};
}

long raw_order(const RawMat& m, const FieldSpec& spec) {
    const FqElem one = fq_one(spec);
    RawMat acc = m;
    for (long n = 1; n <= 2 * (spec.q + 1); ++n) {
        if (acc.a == one && acc.d == one && fq_is_zero(acc.b) && fq_is_zero(acc.c)) return n;
        acc = raw_mul(acc, m, spec);
    }
    throw Error("brauer_characters: torus lift order out of range");
}

} // namespace

std::vector<CharRow> brauer_characters(long q) {
    auto [p, f] = prime_power(q);
    if (p == 2 || q < 5) throw UnsupportedQ("brauer_characters: need odd q >= 5");
    ClassTable classes = conjugacy_classes(q);
    const FieldSpec& spec = classes.spec;

    // A semisimple class a^l / b^m lifts to the l-th (m-th) power of a fixed
    // determinant-1 matrix whose eigenvalue we identify with zeta_N, N the
    // lift's matrix order. The two identifications agree on -1, so they
    // extend to a single Brauer lift of roots of unity.
    struct Angle {
        long conductor = 0;
        long exponent = 0;
    };
    auto torus_conductor = [&](const std::string& gen) {
        const PSL2Elem& r = classes.info(gen).rep;
        return raw_order({r.a, r.b, r.c, r.d}, spec);
    };
    const long na = torus_conductor("a^1"), nb = torus_conductor("b^1");
    std::map<std::string, Angle> angle;
    for (const auto& ci : classes.classes) {
        if (ci.label == "1" || ci.label == "c" || ci.label == "d") continue;
        long e = std::stol(ci.label.substr(2));
        angle[ci.label] = (ci.label[0] == 'a') ? Angle{na, e} : Angle{nb, e};
    }

    std::vector<CharRow> rows;
    std::vector<long> lam(f, 0);
    while (true) {
        long wsum = 0;
        for (long li : lam) wsum += li;
        if (wsum % 2 == 0) {
            CharRow row;
            row.label = "phi";
            long deg = 1;
            for (long li : lam) {
                row.label += "_" + std::to_string(li);
                deg *= li + 1;
            }
            row.degree = deg;
            row.values["1"] = Cyclo(Rational(deg));
            for (const auto& [label, ang] : angle) {
                Cyclo v(Rational(1));
                long pi = 1;
                for (int i = 0; i < f; ++i) {
                    Cyclo s;
                    for (long k = 0; k <= lam[i]; ++k)
                        s += Cyclo::root_of_unity(ang.conductor,
                                                  pi * ang.exponent * (lam[i] - 2 * k));
                    v = v * s;
                    pi *= p;
                }
                row.values[label] = v;
            }
            rows.push_back(std::move(row));
        }
        int i = 0;
        while (i < f && lam[i] == p - 1) lam[i++] = 0;
        if (i == f) break;
        ++lam[i];
    }

    if (rows.size() + 2 != classes.classes.size())
        throw Error("brauer_characters: count does not match p-regular classes");
    return rows;
}

} // namespace zgu
