#include "zgu/screen.hpp"

#include <numeric>
#include <sstream>

#include "zgu/errors.hpp"
#include "zgu/psl2.hpp"

namespace zgu {

namespace {

Int int_pow(long a, long e) {
    Int acc = 1;
    for (long i = 0; i < e; ++i) acc *= a;
    return acc;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> odd_prime_divisors(const Int& n) {
    std::vector<long> out;
    Int m = n;
    for (long d = 2; Int(d) * d <= m; ++d) {
        if (m % d != 0) continue;
        if (d != 2) out.push_back(d);
        while (m % d == 0) m /= d;
    }
    if (m > 2) out.push_back(static_cast<long>(m));
    return out;
}

} // namespace

Int SimpleGroupCandidate::order() const {
    switch (kind) {
    case Kind::PSL2: {
        Int rm = int_pow(r, m);
        Int o = rm * (rm * rm - 1);
        return (r == 2) ? o : o / 2;
    }
    case Kind::A5: return 60;
    case Kind::A7: return 2520;
    case Kind::J1: return 175560;
    case Kind::Ree: {
        Int s = int_pow(3, n);
        return s * s * s * (s * s * s + 1) * (s - 1);
    }
    case Kind::Sz: {
        Int s = int_pow(2, n);
        return s * s * (s * s + 1) * (s - 1);
    }
    case Kind::PSL33: return 5616; // 2^4 * 3^3 * 13
    }
    throw Error("candidate order: bad kind");
}

std::string SimpleGroupCandidate::tag() const {
    switch (kind) {
    case Kind::PSL2: return "psl2:" + std::to_string(r) + "," + std::to_string(m);
    case Kind::A5: return "a5";
    case Kind::A7: return "a7";
    case Kind::J1: return "j1";
    case Kind::Ree: return "ree:" + std::to_string(n);
    case Kind::Sz: return "sz:" + std::to_string(n);
    case Kind::PSL33: return "psl33";
    }
    return "?";
}

SimpleGroupCandidate parse_candidate(const std::string& tag) {
    SimpleGroupCandidate c;
    if (tag == "a5") { c.kind = SimpleGroupCandidate::Kind::A5; return c; }
    if (tag == "a7") { c.kind = SimpleGroupCandidate::Kind::A7; return c; }
    if (tag == "j1") { c.kind = SimpleGroupCandidate::Kind::J1; return c; }
    if (tag == "psl33") { c.kind = SimpleGroupCandidate::Kind::PSL33; return c; }
    auto colon = tag.find(':');
    if (colon == std::string::npos) throw UnknownCandidate("unknown candidate tag: " + tag);
    std::string head = tag.substr(0, colon), rest = tag.substr(colon + 1);
    if (head == "psl2") {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw UnknownCandidate("psl2 tag needs psl2:r,m");
        c.kind = SimpleGroupCandidate::Kind::PSL2;
        c.r = std::stol(rest.substr(0, comma));
        c.m = std::stol(rest.substr(comma + 1));
        if (!is_prime(c.r) || c.m < 1)
            throw UnknownCandidate("psl2 tag needs a prime r and m >= 1");
        return c;
    }
    if (head == "ree") {
        c.kind = SimpleGroupCandidate::Kind::Ree;
        c.n = std::stol(rest);
        if (c.n < 3 || c.n % 2 == 0)
            throw UnknownCandidate("ree tag needs odd field exponent n >= 3");
        return c;
    }
    if (head == "sz") {
        c.kind = SimpleGroupCandidate::Kind::Sz;
        c.n = std::stol(rest);
        if (c.n < 3 || c.n % 2 == 0)
            throw UnknownCandidate("sz tag needs odd field exponent n >= 3");
        return c;
    }
    throw UnknownCandidate("unknown candidate tag: " + tag);
}

FactsTable FactsTable::defaults() {
    FactsTable t;
    t.facts = {
        // class-count facts
        "a7.ccl5.one",       // A7 has a single class of order-5 elements
        "j1.ccl7.one",       // all order-7 elements of J1 are conjugate
        "psl2.cclr.two",     // PSL(2,r^m), r odd, has 2 classes of order-r elements
        // Sylow structure facts
        "a7.sylow3.noncyclic",
        "ree.sylow3.noncyclic",   // noncyclic subgroup of order 9
        "psl2.sylowr.cyclic",     // cyclic Sylow r for odd r != characteristic
        "a7.sylow2.dihedral8",
        "j1.sylow2.ea8",
        "ree.sylow2.ea8",
        "sz.sylow2.suzuki",       // nonabelian, neither cyclic nor dihedral
        "psl33.sylow2.semidihedral16",
    };
    return t;
}

const std::map<std::string, FactInfo>& fact_catalog() {
    static const std::map<std::string, FactInfo> cat = {
        {"a7.ccl5.one",
         {"A7 has a single conjugacy class of elements of order 5", "ATLAS of Finite Groups"}},
        {"j1.ccl7.one",
         {"all elements of order 7 in J1 are conjugate", "Janko (1966)"}},
        {"psl2.cclr.two",
         {"PSL(2,r^m) with r odd has exactly 2 classes of elements of order r",
          "verified-in-repo"}},
        {"a7.sylow3.noncyclic",
         {"A7 has noncyclic Sylow 3-subgroups", "ATLAS of Finite Groups"}},
        {"ree.sylow3.noncyclic",
         {"Ree groups 2G2(3^n) contain a noncyclic subgroup of order 9", "Ward (1966)"}},
        {"psl2.sylowr.cyclic",
         {"PSL(2,q) has cyclic Sylow r-subgroups for odd r distinct from the characteristic",
          "verified-in-repo"}},
        {"a7.sylow2.dihedral8",
         {"A7 has dihedral Sylow 2-subgroups of order 8", "ATLAS of Finite Groups"}},
        {"j1.sylow2.ea8",
         {"J1 has elementary abelian Sylow 2-subgroups of order 8", "Janko (1966)"}},
        {"ree.sylow2.ea8",
         {"Ree groups have elementary abelian Sylow 2-subgroups of order 8", "Ward (1966)"}},
        {"sz.sylow2.suzuki",
         {"Suzuki groups Sz(2^n) have nonabelian Sylow 2-subgroups of order 2^{2n}, "
          "neither cyclic nor dihedral",
          "Suzuki (1962)"}},
        {"psl33.sylow2.semidihedral16",
         {"PSL(3,3) has semidihedral Sylow 2-subgroups of order 16",
          "Alperin-Brauer-Gorenstein (1970)"}},
    };
    return cat;
}

bool divides_power_minus_one(long a, long n, long m) {
    if (a < 2 || n < 1 || m < 1) throw Error("divides_power_minus_one: bad arguments");
    return m % n == 0;
}

long ccl_count_G(long q, long r) { return count_classes_of_order_r(q, r); }

namespace {

// class count of order-r elements in the candidate, from the facts table
std::optional<long> candidate_ccl(const SimpleGroupCandidate& cand, long r,
                                  const FactsTable& facts) {
    using K = SimpleGroupCandidate::Kind;
    if (cand.kind == K::A7 && r == 5 && facts.has("a7.ccl5.one")) return 1;
    if (cand.kind == K::J1 && r == 7 && facts.has("j1.ccl7.one")) return 1;
    if ((cand.kind == K::PSL2 || cand.kind == K::A5) && facts.has("psl2.cclr.two")) {
        long rc = (cand.kind == K::A5) ? 5 : cand.r;
        long mm = (cand.kind == K::A5) ? 1 : cand.m;
        Int order = cand.order();
        if (order % r != 0) return std::nullopt;
        if (r == rc && rc != 2) return 2;
        if (r != rc && r != 2) return (r - 1) / 2; // cyclic-torus count, same formula as G
        (void)mm;
    }
    return std::nullopt;
}

} // namespace

ScreenStep ccl_bound_check(const SimpleGroupCandidate& cand, long q, long r,
                           const FactsTable& facts) {
    auto cc = candidate_ccl(cand, r, facts);
    if (!cc)
        throw UnknownFact("ccl_bound_check: no class-count fact for " + cand.tag() + " at r = " +
                          std::to_string(r));
    long cg = ccl_count_G(q, r);
    ScreenStep step;
    step.test = "ccl_bound r=" + std::to_string(r);
    if (*cc >= cg) {
        step.outcome = "Pass";
        step.witness = std::to_string(*cc) + " >= " + std::to_string(cg);
    } else {
        step.outcome = "Fail";
        step.witness = std::to_string(*cc) + " < " + std::to_string(cg);
    }
    return step;
}

ScreenStep sylow_cyclic_filter(const SimpleGroupCandidate& cand, long q, long r,
                               const FactsTable& facts) {
    auto [p, f] = prime_power(q);
    (void)f;
    if (r == 2 || r == p)
        throw Error("sylow_cyclic_filter: needs an odd prime r distinct from p");
    ScreenStep step;
    step.test = "sylow_cyclic r=" + std::to_string(r);
    using K = SimpleGroupCandidate::Kind;
    Int order = cand.order();
    if (order % (Int(r) * r) != 0) {
        step.outcome = "Pass";
        step.witness = "Sylow " + std::to_string(r) + "-subgroups have prime order";
        return step;
    }
    if (cand.kind == K::A7 && r == 3) {
        if (!facts.has("a7.sylow3.noncyclic")) throw UnknownFact("fact a7.sylow3.noncyclic absent");
        step.outcome = "Fail";
        step.witness = "A7 has noncyclic Sylow 3-subgroups, G's are cyclic";
        return step;
    }
    if (cand.kind == K::Ree && r == 3) {
        if (!facts.has("ree.sylow3.noncyclic"))
            throw UnknownFact("fact ree.sylow3.noncyclic absent");
        step.outcome = "Fail";
        step.witness = "Ree groups contain a noncyclic subgroup of order 9, G's Sylow "
                       "3-subgroups are cyclic";
        return step;
    }
    if (cand.kind == K::PSL2) {
        if (r == cand.r) {
            if (cand.m >= 2) {
                step.outcome = "Fail";
                step.witness = "Sylow " + std::to_string(r) + "-subgroups of PSL(2," +
                               std::to_string(cand.r) + "^" + std::to_string(cand.m) +
                               ") are elementary abelian of rank " + std::to_string(cand.m);
                return step;
            }
            step.outcome = "Pass";
            step.witness = "cyclic of order " + std::to_string(r);
            return step;
        }
        if (!facts.has("psl2.sylowr.cyclic")) throw UnknownFact("fact psl2.sylowr.cyclic absent");
        step.outcome = "Pass";
        step.witness = "PSL2 Sylow r-subgroups are cyclic for odd r away from the characteristic";
        return step;
    }
    throw UnknownFact("sylow_cyclic_filter: no Sylow " + std::to_string(r) + " fact for " +
                      cand.tag());
}

bool dickson_subgroup_check(long r, long m, long p, long f, const Int& order_of_G) {
    if (r == p && f % m == 0) return true;
    bool is_a5 = (r == 5 && m == 1) || (r == 2 && m == 2);
    return is_a5 && order_of_G % 5 == 0;
}

namespace {

// Sylow 2 shape filter: cyclic/dihedral when p is odd, elementary abelian
// when p = 2. Nullopt = pass, string = failure witness; throws UnknownFact.
std::optional<std::string> sylow2_conflict(const SimpleGroupCandidate& cand, long p,
                                           const FactsTable& facts) {
    using K = SimpleGroupCandidate::Kind;
    const bool need_abelian = (p == 2); // else: cyclic or dihedral
    switch (cand.kind) {
    case K::A5: return std::nullopt; // four-group: dihedral of order 4 and abelian
    case K::PSL2: {
        if (cand.r == 2) {
            if (need_abelian) return std::nullopt;
            if (cand.m <= 2) return std::nullopt; // C2 or four-group
            return "Sylow 2-subgroups elementary abelian of order 2^" + std::to_string(cand.m) +
                   ", not cyclic or dihedral";
        }
        // odd characteristic: dihedral of order = 2-part of (r^2m - 1)/2
        Int t = (int_pow(cand.r, 2 * cand.m) - 1) / 2;
        long two_part = 1;
        while (t % 2 == 0) { t /= 2; two_part *= 2; }
        if (!need_abelian) return std::nullopt;
        if (two_part <= 4) return std::nullopt;
        return "dihedral Sylow 2-subgroups of order " + std::to_string(two_part) +
               ", nonabelian";
    }
    case K::A7:
        if (!facts.has("a7.sylow2.dihedral8")) throw UnknownFact("fact a7.sylow2.dihedral8 absent");
        if (!need_abelian) return std::nullopt;
        return "dihedral Sylow 2-subgroups of order 8, nonabelian";
    case K::J1:
        if (!facts.has("j1.sylow2.ea8")) throw UnknownFact("fact j1.sylow2.ea8 absent");
        if (need_abelian) return std::nullopt;
        return "elementary abelian Sylow 2-subgroups of order 8, not cyclic or dihedral";
    case K::Ree:
        if (!facts.has("ree.sylow2.ea8")) throw UnknownFact("fact ree.sylow2.ea8 absent");
        if (need_abelian) return std::nullopt;
        return "elementary abelian Sylow 2-subgroups of order 8, not cyclic or dihedral";
    case K::Sz:
        if (!facts.has("sz.sylow2.suzuki")) throw UnknownFact("fact sz.sylow2.suzuki absent");
        return need_abelian ? std::optional<std::string>(
                                  "Suzuki 2-groups of order 2^" + std::to_string(2 * cand.n) +
                                  " are nonabelian")
                            : std::optional<std::string>(
                                  "Suzuki 2-groups are neither cyclic nor dihedral");
    case K::PSL33:
        if (!facts.has("psl33.sylow2.semidihedral16"))
            throw UnknownFact("fact psl33.sylow2.semidihedral16 absent");
        return need_abelian
                   ? std::optional<std::string>("semidihedral Sylow 2-subgroups, nonabelian")
                   : std::optional<std::string>(
                         "semidihedral Sylow 2-subgroups, neither cyclic nor dihedral");
    }
    throw Error("sylow2_conflict: bad kind");
}

} // namespace

ScreenReport screen(const SimpleGroupCandidate& cand, long q, const FactsTable& facts) {
    auto [p, f] = prime_power(q);
    ScreenReport rep;
    rep.candidate = cand.tag();
    rep.q = q;
    const Int gorder = group_order(q);

    // intake: candidate must be simple
    if (cand.kind == SimpleGroupCandidate::Kind::PSL2 && int_pow(cand.r, cand.m) < 4) {
        rep.verdict = "NotSimple";
        rep.reason = "PSL(2," + std::to_string(cand.r) + ") is not simple";
        return rep;
    }

    // 2-Sylow shape filter (Theorem on 2-subgroups of V(ZG))
    {
        ScreenStep step;
        step.test = "sylow2_shape";
        auto conflict = sylow2_conflict(cand, p, facts);
        if (conflict) {
            step.outcome = "Fail";
            step.witness = *conflict;
            rep.steps.push_back(step);
            rep.verdict = "Excluded";
            rep.reason = step.test + ": " + step.witness;
            return rep;
        }
        step.outcome = "Pass";
        step.witness = (p == 2) ? "abelian Sylow 2-subgroups" : "cyclic or dihedral Sylow 2-subgroups";
        rep.steps.push_back(step);
    }

    // odd primes r != p dividing both orders: cyclic-Sylow and class-count tests
    const Int xorder = cand.order();
    for (long r : odd_prime_divisors(gorder)) {
        if (r == p || xorder % r != 0) continue;
        ScreenStep step = sylow_cyclic_filter(cand, q, r, facts);
        rep.steps.push_back(step);
        if (step.outcome == "Fail") {
            rep.verdict = "Excluded";
            rep.reason = step.test + ": " + step.witness;
            return rep;
        }
    }
    for (long r : odd_prime_divisors(gorder)) {
        if (r == p || xorder % r != 0) continue;
        ScreenStep step;
        try {
            step = ccl_bound_check(cand, q, r, facts);
        } catch (const UnknownFact&) {
            step.test = "ccl_bound r=" + std::to_string(r);
            step.outcome = "Skip";
            step.witness = "no class-count fact on record";
            rep.steps.push_back(step);
            continue;
        }
        rep.steps.push_back(step);
        if (step.outcome == "Fail") {
            rep.verdict = "Excluded";
            rep.reason = step.test + ": " + step.witness;
            return rep;
        }
    }

    // order divisibility and the embedding routes
    {
        ScreenStep step;
        step.test = "order_divisibility";
        using K = SimpleGroupCandidate::Kind;
        if (cand.kind == K::PSL2 && cand.r == p) {
            // subfield route: r^m(r^2m - 1) | p^f(p^2f - 1) iff m | f
            bool ok = divides_power_minus_one(p, cand.m, f);
            step.outcome = ok ? "Pass" : "Fail";
            step.witness = "p^m - 1 | p^f - 1 iff m | f: m = " + std::to_string(cand.m) +
                           ", f = " + std::to_string(f);
            rep.steps.push_back(step);
            if (ok) {
                rep.verdict = "Admissible";
                rep.reason = "embeds-as: subfield subgroup PSL(2," + std::to_string(p) + "^" +
                             std::to_string(cand.m) + ")";
            } else {
                rep.verdict = "Excluded";
                rep.reason = step.test + ": " + step.witness;
            }
            return rep;
        }
        bool a5_like = cand.kind == K::A5 ||
                       (cand.kind == K::PSL2 &&
                        ((cand.r == 5 && cand.m == 1) || (cand.r == 2 && cand.m == 2)));
        if (a5_like) {
            bool ok = dickson_subgroup_check(5, 1, p, f, gorder);
            step.outcome = ok ? "Pass" : "Fail";
            step.witness = ok ? "5 divides |G|, so G has a subgroup isomorphic to A5"
                              : "60 does not divide |G| = " + gorder.str();
            rep.steps.push_back(step);
            rep.verdict = ok ? "Admissible" : "Excluded";
            rep.reason = ok ? "embeds-as: A5 subgroup" : step.test + ": " + step.witness;
            return rep;
        }
        bool div = (gorder % xorder == 0);
        step.outcome = div ? "Pass" : "Fail";
        step.witness = "|X| = " + xorder.str() + (div ? " divides " : " does not divide ") +
                       "|G| = " + gorder.str();
        rep.steps.push_back(step);
        if (!div) {
            rep.verdict = "Excluded";
            rep.reason = step.test + ": " + step.witness;
            return rep;
        }
        // no candidate in the lookup list reaches this point
        throw UnknownFact("screen: no embedding criterion for surviving candidate " + cand.tag());
    }
}

SuzukiVerdict suzuki_exclusion(long p_exp, long n) {
    if (!is_prime(p_exp) || p_exp % 2 == 0)
        throw Error("suzuki_exclusion: G = Sz(2^p) needs an odd prime p");
    if (n < 3 || n % 2 == 0) throw Error("suzuki_exclusion: candidate exponent must be odd >= 3");
    SuzukiVerdict v;
    std::ostringstream w;
    w << "2^" << n << "-1 | |G|(2^" << p_exp << "+1) = 2^" << 2 * p_exp << "(2^" << 4 * p_exp
      << "-1)";
    bool divides_4p = divides_power_minus_one(2, n, 4 * p_exp);
    if (!divides_4p) {
        v.excluded = true;
        w << "; " << n << " does not divide " << 4 * p_exp << ", so 2^" << n
          << "-1 does not divide 2^" << 4 * p_exp << "-1";
        v.witness = w.str();
        return v;
    }
    // n odd and n | 4p forces n | p, hence n = p
    w << "; n | 4p and n odd force n = p";
    if (n == p_exp) {
        v.order_equal = true;
        v.excluded = true;
        w << "; then |H/N| = |G|, contradicting |H| < |G|";
    } else {
        v.excluded = true;
        w << "; n = " << n << " != p = " << p_exp;
    }
    v.witness = w.str();
    return v;
}

MinimalSimpleReport minimal_simple_report(const std::string& g_tag) {
    MinimalSimpleReport rep;
    rep.g_tag = g_tag;
    if (g_tag == "psl33") {
        rep.summary = "order-uniqueness datum";
        rep.lines.push_back("|PSL(3,3)| = 2^4 * 3^3 * 13 = 5616; a nonabelian simple group "
                            "whose order divides 5616 has order exactly 5616");
        return rep;
    }
    SimpleGroupCandidate g = parse_candidate(g_tag);
    if (g.kind == SimpleGroupCandidate::Kind::PSL2) {
        long q = 1;
        for (long i = 0; i < g.m; ++i) q *= g.r;
        rep.summary = "delegates to the composition-factor screen";
        std::vector<std::string> tags = {"a5", "a7", "j1", "psl33", "sz:3", "ree:3"};
        for (long mm = 1; mm <= g.m; ++mm)
            tags.push_back("psl2:" + std::to_string(g.r) + "," + std::to_string(mm));
        for (const auto& tag : tags) {
            ScreenReport s = screen(parse_candidate(tag), q);
            rep.lines.push_back(tag + ": " + s.verdict + " (" + s.reason + ")");
        }
        return rep;
    }
    if (g.kind == SimpleGroupCandidate::Kind::Sz) {
        const long p_exp = g.n;
        if (!is_prime(p_exp)) throw UnsupportedTag("minimal: Sz needs an odd prime exponent");
        Int gorder = g.order();
        if (gorder % 3 == 0) throw Error("minimal: |Sz(2^p)| divisible by 3 (impossible)");
        rep.summary = "3 does not divide |G|; only Suzuki groups can appear, and the "
                      "order arithmetic excludes every proper one";
        rep.lines.push_back("|G| = " + gorder.str() + " is not divisible by 3");
        for (long n = 3;; n += 2) {
            SimpleGroupCandidate cand;
            cand.kind = SimpleGroupCandidate::Kind::Sz;
            cand.n = n;
            if (cand.order() > gorder) break;
            SuzukiVerdict v = suzuki_exclusion(p_exp, n);
            rep.lines.push_back("sz:" + std::to_string(n) + ": " +
                                (v.order_equal ? "order-equal contradiction" : "Excluded") +
                                " (" + v.witness + ")");
        }
        return rep;
    }
    throw UnsupportedTag("minimal_simple_report: tag must be psl2:r,m, psl33 or sz:p");
}

} // namespace zgu
