#include "doctest.h"

#include <set>

#include "zgu/field.hpp"

using namespace zgu;

TEST_CASE("build_field basics") {
    auto f7 = build_field(7, 1);
    CHECK(f7.q == 7);
    CHECK(f7.modulus == std::vector<int>{0, 1}); // modulus x for prime fields

    auto f9 = build_field(3, 2);
    CHECK(f9.q == 9);
    CHECK(f9.modulus == std::vector<int>{1, 0, 1}); // x^2 + 1, irreducible over Z/3

    CHECK_THROWS_AS(build_field(4, 1), NotPrime);
    CHECK_THROWS_AS(build_field(1, 1), Error);
}

TEST_CASE("modulus is irreducible: no roots in the prime field") {
    for (auto [p, f] : {std::pair{3, 2}, {5, 2}, {3, 3}, {2, 4}, {3, 4}}) {
        auto spec = build_field(p, f);
        for (int r = 0; r < p; ++r) {
            long acc = 0, pw = 1;
            for (int c : spec.modulus) {
                acc = (acc + c * pw) % p;
                pw = (pw * r) % p;
            }
            CHECK(acc != 0);
        }
    }
}

TEST_CASE("arithmetic spot values") {
    auto f7 = build_field(7, 1);
    CHECK(fq_index(fq_mul(fq_from_int(f7, 3), fq_from_int(f7, 5), f7), f7) == 1); // 15 mod 7
    CHECK(fq_inv(fq_one(f7), f7) == fq_one(f7));

    auto f9 = build_field(3, 2);
    // x has index 3 (coeffs (0,1)); x*x = -1 = 2 mod the modulus x^2+1
    auto x = fq_element(f9, 3);
    CHECK(fq_index(fq_mul(x, x, f9), f9) == 2);
}

TEST_CASE("field axioms and inverses, all small fields") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L, 25L, 27L}) {
        int p = 2, f = 1;
        for (long t = q, d = 2; d <= t; ++d)
            if (t % d == 0) {
                p = (int)d;
                f = 0;
                while (t % d == 0) { t /= d; ++f; }
            }
        auto spec = build_field(p, f);
        for (long i = 1; i < q; ++i) {
            auto a = fq_element(spec, i);
            CHECK(fq_mul(a, fq_inv(a, spec), spec) == fq_one(spec));
            CHECK(fq_element(spec, fq_index(a, spec)) == a);
        }
        // distributivity spot checks
        auto a = fq_element(spec, 1 % q), b = fq_element(spec, (q - 1)), c = fq_element(spec, q / 2);
        CHECK(fq_mul(a, fq_add(b, c, spec), spec) ==
              fq_add(fq_mul(a, b, spec), fq_mul(a, c, spec), spec));
    }
}

TEST_CASE("multiplicative group is cyclic of order q-1") {
    for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L, 25L, 27L, 49L, 81L}) {
        int p = 2, f = 1;
        for (long t = q, d = 2; d <= t; ++d)
            if (t % d == 0) {
                p = (int)d;
                f = 0;
                while (t % d == 0) { t /= d; ++f; }
            }
        auto spec = build_field(p, f);
        auto g = primitive_element(spec);
        CHECK(fq_order(g, spec) == q - 1);
        // powers of g exhaust the nonzero elements
        std::set<long> seen;
        auto cur = fq_one(spec);
        for (long i = 0; i < q - 1; ++i) {
            seen.insert(fq_index(cur, spec));
            cur = fq_mul(cur, g, spec);
        }
        CHECK(seen.size() == size_t(q - 1));
    }
}

TEST_CASE("primitive_element spot values") {
    CHECK(fq_index(primitive_element(build_field(7, 1)), build_field(7, 1)) == 3);
    CHECK(fq_index(primitive_element(build_field(5, 1)), build_field(5, 1)) == 2);
    CHECK(fq_index(primitive_element(build_field(2, 1)), build_field(2, 1)) == 1);
}

TEST_CASE("is_square: spot values and Euler-criterion cross-check") {
    auto f7 = build_field(7, 1);
    CHECK(is_square(fq_from_int(f7, 2), f7));    // 3^2 = 2 mod 7
    CHECK(!is_square(fq_from_int(f7, 3), f7));   // squares mod 7: {0,1,2,4}
    CHECK(is_square(fq_one(f7), f7));
    CHECK(is_square(fq_zero(f7), f7));

    CHECK_THROWS_AS(is_square(fq_one(build_field(2, 2)), build_field(2, 2)), OddFieldRequired);

    for (long q : {3L, 5L, 7L, 9L, 11L, 13L, 25L, 27L}) {
        int p = 2, f = 1;
        for (long t = q, d = 2; d <= t; ++d)
            if (t % d == 0) {
                p = (int)d;
                f = 0;
                while (t % d == 0) { t /= d; ++f; }
            }
        auto spec = build_field(p, f);
        std::set<long> squares;
        for (long i = 0; i < q; ++i) {
            auto a = fq_element(spec, i);
            squares.insert(fq_index(fq_mul(a, a, spec), spec));
        }
        for (long i = 0; i < q; ++i)
            CHECK(is_square(fq_element(spec, i), spec) == (squares.count(i) != 0));
    }
}
