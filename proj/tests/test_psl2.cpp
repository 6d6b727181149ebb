#include "doctest.h"

#include <algorithm>
#include <map>

#include "zgu/psl2.hpp"

using namespace zgu;

TEST_CASE("group_order") {
    CHECK(group_order(7) == 168);
    CHECK(group_order(5) == 60);
    CHECK(group_order(4) == 60);
    CHECK_THROWS_AS(group_order(3), UnsupportedQ);
    CHECK_THROWS_AS(group_order(2), UnsupportedQ);
}

TEST_CASE("prime_power") {
    CHECK(prime_power(27) == std::pair{3, 3});
    CHECK(prime_power(8) == std::pair{2, 3});
    CHECK_THROWS_AS(prime_power(6), UnsupportedQ);
}

TEST_CASE("enumerate_group sizes") {
    for (long q : {4L, 5L, 7L, 8L, 9L}) {
        auto spec = build_field(prime_power(q).first, prime_power(q).second);
        CHECK(enumerate_group(spec).size() == size_t(group_order(q)));
    }
}

TEST_CASE("element arithmetic properties") {
    auto spec = build_field(7, 1);
    auto g = enumerate_group(spec);
    auto id = psl2_identity(spec);
    for (size_t i = 0; i < g.size(); i += 17) {
        CHECK(psl2_mul(g[i], psl2_inv(g[i], spec), spec) == id);
        long n = psl2_order(g[i], spec);
        CHECK(group_order(7) % n == 0);
        CHECK(psl2_pow(g[i], n, spec) == id);
        for (size_t j = 1; j < g.size(); j += 29) {
            auto ab_c = psl2_mul(psl2_mul(g[i], g[j], spec), g[7], spec);
            auto a_bc = psl2_mul(g[i], psl2_mul(g[j], g[7], spec), spec);
            CHECK(ab_c == a_bc);
        }
    }
}

TEST_CASE("structured classes q=7") {
    auto t = conjugacy_classes(7);
    REQUIRE(t.classes.size() == 6);
    std::multiset<long> orders, want{1, 7, 7, 3, 2, 4};
    long total = 0;
    for (const auto& c : t.classes) {
        orders.insert(c.element_order);
        total += c.size;
    }
    CHECK(orders == want);
    CHECK(total == 168);
}

TEST_CASE("class counts match brute force, q <= 13") {
    for (long q : {5L, 7L, 9L, 11L, 13L}) {
        auto s = conjugacy_classes(q);
        auto b = conjugacy_classes_brute(q);
        CHECK(s.classes.size() == b.classes.size());
        std::multiset<std::pair<long, long>> ms, mb;
        for (const auto& c : s.classes) ms.insert({c.element_order, c.size});
        for (const auto& c : b.classes) mb.insert({c.element_order, c.size});
        CHECK(ms == mb);
    }
    CHECK(conjugacy_classes_brute(5).classes.size() == 5);
}

TEST_CASE("class_of spot values") {
    auto t7 = conjugacy_classes(7);
    CHECK(class_of(psl2_identity(t7.spec), t7) == "1");
    auto u = psl2_make(t7.spec, fq_one(t7.spec), fq_one(t7.spec), fq_zero(t7.spec),
                       fq_one(t7.spec));
    CHECK(class_of(u, t7) == "c");

    auto t13 = conjugacy_classes(13);
    auto a = t13.info("a^1").rep;
    CHECK(class_of(psl2_pow(a, 2, t13.spec), t13) == "a^2");
}

TEST_CASE("class_of agrees with brute-force partition") {
    for (long q : {5L, 7L, 9L, 11L}) {
        auto s = conjugacy_classes(q);
        auto b = conjugacy_classes_brute(q);
        // two elements conjugate in the brute table get the same structured label
        std::map<int, std::string> seen;
        for (const auto& [x, idx] : b.element_class) {
            auto lbl = class_of(x, s);
            auto [it, inserted] = seen.emplace(idx, lbl);
            CHECK(it->second == lbl);
        }
        CHECK(seen.size() == s.classes.size());
    }
}

TEST_CASE("power_map") {
    auto t = conjugacy_classes(7);
    auto p1 = power_map(t, 1);
    for (const auto& c : t.classes) CHECK(p1.at(c.label) == c.label);

    auto p2 = power_map(t, 2);
    std::string order4, order2;
    for (const auto& c : t.classes) {
        if (c.element_order == 4) order4 = c.label;
        if (c.element_order == 2) order2 = c.label;
    }
    CHECK(p2.at(order4) == order2);

    auto p7 = power_map(t, 7);
    CHECK(p7.at("c") == "1");
    CHECK(p7.at("d") == "1");
}

TEST_CASE("real classes at q=7") {
    auto t = conjugacy_classes(7);
    auto real = real_classes(t);
    CHECK(real.count("c") == 0);
    CHECK(real.count("d") == 0);
    CHECK(real.count("1") == 1);
    CHECK(real.count(t.involution_label()) == 1);
    CHECK(real.size() == 4); // all remaining classes are real
}

TEST_CASE("count_classes_of_order_r") {
    CHECK(count_classes_of_order_r(7, 7) == 2);
    CHECK(count_classes_of_order_r(7, 3) == 1);
    CHECK(count_classes_of_order_r(9, 5) == 2);
    CHECK(count_classes_of_order_r(27, 13) == 6);
    CHECK_THROWS_AS(count_classes_of_order_r(7, 5), NotADivisor);

    // brute-force cross-check, q <= 13, all odd primes r | |G|
    for (long q : {5L, 7L, 9L, 11L, 13L}) {
        auto b = conjugacy_classes_brute(q);
        for (long r = 3; r <= group_order(q); r += 2) {
            bool prime = r > 1;
            for (long d = 2; d * d <= r; ++d)
                if (r % d == 0) prime = false;
            if (!prime || group_order(q) % r != 0) continue;
            long brute = 0;
            for (const auto& c : b.classes)
                if (c.element_order == r) ++brute;
            CHECK(count_classes_of_order_r(q, r) == brute);
        }
    }
}

TEST_CASE("centralizer orders at q=7") {
    auto t = conjugacy_classes(7);
    CHECK(centralizer_order(t, "1") == 168);
    CHECK(centralizer_order(t, t.involution_label()) == 8);
    CHECK(centralizer_order(t, "c") == 7);

    // brute-force centralizer of a representative
    auto spec = t.spec;
    auto g = enumerate_group(spec);
    for (const auto& c : t.classes) {
        long n = 0;
        for (const auto& x : g)
            if (psl2_mul(x, c.rep, spec) == psl2_mul(c.rep, x, spec)) ++n;
        CHECK(centralizer_order(t, c.label) == n);
    }
}

TEST_CASE("find_subgroup") {
    auto d8 = find_subgroup(7, SubgroupShape::Dihedral, 8);
    REQUIRE(d8.has_value());
    CHECK(d8->size() == 8);

    CHECK(!find_subgroup(7, SubgroupShape::Quaternion8).has_value());

    auto v4 = find_subgroup(9, SubgroupShape::FourGroup);
    REQUIRE(v4.has_value());
    CHECK(v4->size() == 4);

    auto c7 = find_subgroup(7, SubgroupShape::Cyclic, 7);
    REQUIRE(c7.has_value());
    CHECK(c7->size() == 7);
}
