#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zgu/rational.hpp"

namespace zgu {

/// Fixed lookup list of simple-group candidates. PSL2 carries (r, m) with
/// order r^m(r^2m - 1)/gcd(2, r^m - 1); Ree and Sz carry the field
/// exponent n.
struct SimpleGroupCandidate {
    enum class Kind { PSL2, A5, A7, J1, Ree, Sz, PSL33 };
    Kind kind = Kind::A5;
    long r = 0; // PSL2 characteristic
    long m = 0; // PSL2 field exponent
    long n = 0; // Ree/Sz field exponent (3^n resp. 2^n)

    Int order() const;
    std::string tag() const;
};

SimpleGroupCandidate parse_candidate(const std::string& tag);

/// Group facts within the screen's reach, each with a provenance string.
/// Removing a fact can only weaken a verdict to UnknownFact.
struct FactsTable {
    std::set<std::string> facts;
    static FactsTable defaults();
    bool has(const std::string& key) const { return facts.count(key) != 0; }
};

struct FactInfo {
    std::string statement;
    std::string provenance; // citation, or "verified-in-repo" for PSL2 class data
};

/// Statement + provenance for every fact key in FactsTable::defaults().
const std::map<std::string, FactInfo>& fact_catalog();

/// a^n - 1 | a^m - 1 iff n | m.
bool divides_power_minus_one(long a, long n, long m);

/// Delegates to count_classes_of_order_r.
long ccl_count_G(long q, long r);

struct ScreenStep {
    std::string test;
    std::string outcome; // "Pass", "Fail", "Skip"
    std::string witness;
};

struct ScreenReport {
    std::string candidate;
    long q = 0;
    std::string verdict; // "Admissible", "Excluded", "NotSimple"
    std::string reason;
    std::vector<ScreenStep> steps;
};

/// ccl_r(candidate) >= ccl_r(G) test; Fail carries both counts.
ScreenStep ccl_bound_check(const SimpleGroupCandidate& cand, long q, long r,
                           const FactsTable& facts = FactsTable::defaults());

/// Fail when the candidate is known to have noncyclic Sylow r-subgroups
/// (r odd, r != p, where G's are cyclic).
ScreenStep sylow_cyclic_filter(const SimpleGroupCandidate& cand, long q, long r,
                               const FactsTable& facts = FactsTable::defaults());

/// Subfield embedding test: PSL(2,p^m) <= PSL(2,p^f) iff m | f, plus the
/// A5 case when 5 divides the group order.
bool dickson_subgroup_check(long r, long m, long p, long f, const Int& order_of_G);

/// The full screening pipeline for one candidate against G = PSL(2,q).
ScreenReport screen(const SimpleGroupCandidate& cand, long q,
                    const FactsTable& facts = FactsTable::defaults());

struct SuzukiVerdict {
    bool excluded = false;
    bool order_equal = false;
    std::string witness;
};

/// Order arithmetic for G = Sz(2^p): a simple factor Sz(2^n) forces
/// n = p (order equality, contradiction) or is excluded outright.
SuzukiVerdict suzuki_exclusion(long p_exp, long n);

struct MinimalSimpleReport {
    std::string g_tag;
    std::string summary;
    std::vector<std::string> lines;
};

/// Computational skeleton of the minimal-simple-group theorem for
/// G in {PSL2(q), PSL3_3, Sz(2^p)}.
MinimalSimpleReport minimal_simple_report(const std::string& g_tag);

} // namespace zgu
