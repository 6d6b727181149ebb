#include "zgu/units.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace zgu {

void PAVector::validate(const ClassTable& classes) const {
    long sum = 0;
    for (const auto& [label, value] : eps) {
        sum += value;
        const ClassInfo& ci = classes.info(label);
        if (unit_order > 1 && label == "1" && value != 0)
            throw Error("PAVector: Berman-Higman violated (eps_1 != 0)");
        if (unit_order % ci.element_order != 0 && value != 0)
            throw Error("PAVector: support on class of non-dividing order");
    }
    if (sum != 1) throw Error("PAVector: augmentation != 1");
}

Cyclo extended_value(const std::map<std::string, Cyclo>& chi_values, const PAVector& pa) {
    Cyclo acc;
    for (const auto& [label, value] : pa.eps) {
        if (value == 0) continue;
        acc += chi_values.at(label) * Rational(value);
    }
    return acc;
}

Verdict cl_divisibility_check(const PAVector& pa, long p2, const ClassTable& classes) {
    long n = pa.unit_order;
    long t = n;
    while (t > 1 && t % p2 == 0) t /= p2;
    if (t != 1) throw Error("cl_divisibility_check: unit order is not a power of the prime");
    if (!(n == 4 && p2 == 2))
        throw UnsupportedInstance("cl_divisibility_check: only the order-4 / prime-2 instance "
                                  "is encoded");
    for (const auto& ci : classes.classes) {
        if (ci.element_order != 2) continue;
        auto it = pa.eps.find(ci.label);
        long v = (it == pa.eps.end()) ? 0 : it->second;
        if (v % 2 != 0)
            return {false, "eps at " + ci.label + " = " + std::to_string(v) + " is odd"};
    }
    return {true, "all order-2 partial augmentations even"};
}

Rational lp_multiplicity(const UnitChain& chain, const std::map<std::string, Cyclo>& chi_values,
                         long chi_degree, long l, const ClassTable& classes,
                         const CharTable& table) {
    (void)table;
    const long n = chain.n;
    if (l < 0) l = ((l % n) + n) % n;
    Cyclo acc(chi_degree);
    for (long j = 1; j < n; ++j) {
        long g = std::gcd(j, n);
        long d = n / g;                     // order of u^j
        const PAVector& pa = chain.pa.at(d);
        long k = j / g;                     // u^j = (u^g)^k, gcd(k, d) = 1
        Cyclo val;
        for (const auto& [label, value] : pa.eps) {
            if (value == 0) continue;
            const ClassInfo& ci = classes.info(label);
            std::string powered = class_of(psl2_pow(ci.rep, k, classes.spec), classes);
            val += chi_values.at(powered) * Rational(value);
        }
        acc += val * Cyclo::root_of_unity(n, -j * l);
    }
    acc = acc * Rational(Int(1), Int(n));
    auto r = acc.as_rational();
    if (!r) throw NotRational("lp_multiplicity: " + acc.to_string());
    return *r;
}

namespace {

std::vector<long> divisors_above_one(long n) {
    std::vector<long> out;
    for (long d = 2; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

} // namespace

HelpResult help_enumerate(long q, long n, const HelpOptions& opts) {
    if (n < 2) throw Error("help_enumerate: n >= 2 required");
    ClassTable classes = conjugacy_classes(q);
    CharTable table = build_char_table(q);
    const long p = prime_power(q).first;
    // Defining-characteristic Brauer characters join the constraint set for
    // powers of p'-order; their values exist on p-regular classes only.
    long np = n;
    while (np % p == 0) np /= p;
    const std::vector<CharRow> brows = (np > 1) ? brauer_characters(q) : std::vector<CharRow>{};
    HelpResult result;
    result.q = q;
    result.n = n;

    const std::vector<long> divs = divisors_above_one(n);

    // support classes per divisor order
    std::map<long, std::vector<std::string>> support;
    for (long d : divs) {
        std::vector<std::string> s;
        for (const auto& ci : classes.classes)
            if (ci.element_order > 1 && d % ci.element_order == 0) s.push_back(ci.label);
        support[d] = s;
    }

    // B_d[row][class][l] = sum over k in (Z/d)^* of chi(class-of rep^k) * zeta_d^(-kl),
    // so that mu_l of the order-e unit is
    //   (1/e) (chi(1) + sum_{d|e, d>1} sum_C eps_d[C] * B_d[row][C][l mod d]).
    std::map<long, std::vector<std::map<std::string, std::vector<Cyclo>>>> btab;
    for (long d : divs) {
        auto& per_row = btab[d];
        per_row.resize(table.rows.size());
        std::map<std::string, std::vector<std::string>> powclass;
        for (const auto& label : support[d]) {
            const ClassInfo& ci = classes.info(label);
            std::vector<std::string> pc(d);
            for (long k = 1; k < d; ++k) {
                if (std::gcd(k, d) != 1) continue;
                pc[k] = class_of(psl2_pow(ci.rep, k, classes.spec), classes);
            }
            powclass[label] = std::move(pc);
        }
        for (size_t r = 0; r < table.rows.size(); ++r) {
            for (const auto& label : support[d]) {
                std::vector<Cyclo> bl(d);
                for (long l = 0; l < d; ++l) {
                    Cyclo acc;
                    for (long k = 1; k < d; ++k) {
                        if (std::gcd(k, d) != 1) continue;
                        acc += table.rows[r].values.at(powclass[label][k]) *
                               Cyclo::root_of_unity(d, -k * l);
                    }
                    bl[l] = acc;
                }
                per_row[r][label] = std::move(bl);
            }
        }
    }

    // Same tables for the Brauer rows, restricted to p'-divisors (where all
    // support classes and their powers are p-regular).
    std::map<long, std::vector<std::map<std::string, std::vector<Cyclo>>>> btab_br;
    for (long d : divs) {
        if (d % p == 0) continue;
        auto& per_row = btab_br[d];
        per_row.resize(brows.size());
        std::map<std::string, std::vector<std::string>> powclass;
        for (const auto& label : support[d]) {
            const ClassInfo& ci = classes.info(label);
            std::vector<std::string> pc(d);
            for (long k = 1; k < d; ++k) {
                if (std::gcd(k, d) != 1) continue;
                pc[k] = class_of(psl2_pow(ci.rep, k, classes.spec), classes);
            }
            powclass[label] = std::move(pc);
        }
        for (size_t r = 0; r < brows.size(); ++r) {
            for (const auto& label : support[d]) {
                std::vector<Cyclo> bl(d);
                for (long l = 0; l < d; ++l) {
                    Cyclo acc;
                    for (long k = 1; k < d; ++k) {
                        if (std::gcd(k, d) != 1) continue;
                        acc += brows[r].values.at(powclass[label][k]) *
                               Cyclo::root_of_unity(d, -k * l);
                    }
                    bl[l] = acc;
                }
                per_row[r][label] = std::move(bl);
            }
        }
    }

    long tried = 0;
    UnitChain chain;
    chain.n = n;

    // nonnegative-integer eigenvalue multiplicities for the order-e power
    auto lp_ok = [&](long e) {
        for (size_t r = 0; r < table.rows.size(); ++r) {
            for (long l = 0; l < e; ++l) {
                Cyclo acc(table.rows[r].degree);
                for (long d : divs) {
                    if (e % d != 0) continue;
                    const PAVector& pa = chain.pa.at(d);
                    for (const auto& [label, value] : pa.eps) {
                        if (value == 0) continue;
                        acc += btab[d][r].at(label)[l % d] * Rational(value);
                    }
                }
                auto rv = acc.as_rational();
                if (!rv) return false;
                Rational mu = *rv / Rational(e);
                if (!is_integer(mu) || mu < 0) return false;
            }
        }
        if (e % p != 0) {
            for (size_t r = 0; r < brows.size(); ++r) {
                for (long l = 0; l < e; ++l) {
                    Cyclo acc(brows[r].degree);
                    for (long d : divs) {
                        if (e % d != 0) continue;
                        const PAVector& pa = chain.pa.at(d);
                        for (const auto& [label, value] : pa.eps) {
                            if (value == 0) continue;
                            acc += btab_br[d][r].at(label)[l % d] * Rational(value);
                        }
                    }
                    auto rv = acc.as_rational();
                    if (!rv) return false;
                    Rational mu = *rv / Rational(e);
                    if (!is_integer(mu) || mu < 0) return false;
                }
            }
        }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t di) {
        if (di == divs.size()) {
            HelpSolution sol;
            sol.chain = chain;
            sol.trivial = true;
            for (long d : divs) {
                const PAVector& pa = chain.pa.at(d);
                bool basis = false;
                long nonzero = 0;
                for (const auto& [label, value] : pa.eps) {
                    if (value == 0) continue;
                    ++nonzero;
                    if (value == 1 && classes.info(label).element_order == d) basis = true;
                }
                if (!(nonzero == 1 && basis)) sol.trivial = false;
            }
            result.solutions.push_back(std::move(sol));
            return;
        }
        const long e = divs[di];
        const auto& sup = support[e];
        const size_t k = sup.size();
        if (k == 0) return; // no admissible partial augmentations at this order
        std::vector<long> v(k, 0);
        // iterate the first k-1 coordinates over the box; the last is forced
        std::function<void(size_t, long)> fill = [&](size_t pos, long partial) {
            if (pos + 1 == k) {
                long last = 1 - partial;
                if (last < -opts.box || last > opts.box) return;
                v[k - 1] = last;
                if (++tried > opts.cap)
                    throw BoundExceeded("help_enumerate: candidate cap exceeded");
                PAVector pa;
                pa.unit_order = e;
                for (size_t i = 0; i < k; ++i)
                    if (v[i] != 0) pa.eps[sup[i]] = v[i];
                if (e == 4 && !cl_divisibility_check(pa, 2, classes).pass) return;
                chain.pa[e] = pa;
                if (lp_ok(e)) rec(di + 1);
                chain.pa.erase(e);
                return;
            }
            for (long c = -opts.box; c <= opts.box; ++c) {
                v[pos] = c;
                fill(pos + 1, partial + c);
            }
        };
        fill(0, 0);
    };
    rec(0);
    return result;
}

} // namespace zgu
