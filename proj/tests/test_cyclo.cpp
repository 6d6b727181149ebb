#include "doctest.h"

#include <cmath>

#include "zgu/cyclo.hpp"

using namespace zgu;

TEST_CASE("roots of unity") {
    auto i = Cyclo::root_of_unity(4, 1);
    CHECK(i * i == Cyclo(-1));
    CHECK(Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(3, 2) == Cyclo(-1));
    CHECK(Cyclo::root_of_unity(12, 0) == Cyclo(1));
}

TEST_CASE("conjugation") {
    auto i = Cyclo::root_of_unity(4, 1);
    CHECK(i.conj() == -i);
    auto real_sum = Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4);
    CHECK(real_sum.conj() == real_sum);
    CHECK(Cyclo(Rational(7, 3)).conj() == Cyclo(Rational(7, 3)));
}

TEST_CASE("as_rational") {
    auto z = Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(3, 2) + Cyclo(1);
    CHECK(z.is_zero());
    CHECK(*z.as_rational() == Rational(0));
    CHECK(!Cyclo::root_of_unity(8, 1).as_rational().has_value());
    CHECK(*Cyclo(Rational(5, 2)).as_rational() == Rational(5, 2));
}

TEST_CASE("conductor lift round-trip") {
    auto z = Cyclo::root_of_unity(6, 1);
    auto lifted = z.lift_to(24);
    CHECK(lifted.conductor() == 24);
    auto back = lifted.lower_to(6);
    REQUIRE(back.has_value());
    CHECK(*back == z);
    CHECK(!Cyclo::root_of_unity(8, 1).lower_to(4).has_value());
}

TEST_CASE("galois automorphisms") {
    auto z = Cyclo::root_of_unity(7, 1) + Cyclo::root_of_unity(7, 3) * Rational(2);
    CHECK(z.galois(1) == z);
    CHECK(z.galois(2).galois(4) == z.galois(8 % 7)); // multiplicative in the exponent
    CHECK(z.conj().conj() == z);
    // galois fixes rationals
    CHECK(Cyclo(Rational(3, 4)).galois(1) == Cyclo(Rational(3, 4)));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});

    // product over d | n of Phi_d = x^n - 1
    for (long n = 1; n <= 30; ++n) {
        std::vector<Int> prod{1};
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            const auto& phi = cyclotomic_polynomial(d);
            std::vector<Int> next(prod.size() + phi.size() - 1, 0);
            for (size_t a = 0; a < prod.size(); ++a)
                for (size_t b = 0; b < phi.size(); ++b) next[a + b] += prod[a] * phi[b];
            prod = std::move(next);
        }
        std::vector<Int> want(n + 1, 0);
        want[0] = -1;
        want[n] = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
    long sum = 0;
    for (long d = 1; d <= 36; ++d)
        if (36 % d == 0) sum += euler_phi(d);
    CHECK(sum == 36);
}

TEST_CASE("sqrt_eps_q") {
    auto s5 = sqrt_eps_q(5, 1);
    CHECK(s5 * s5 == Cyclo(5)); // q = 5, eps = +1
    auto s3 = sqrt_eps_q(3, 1);
    CHECK(s3 * s3 == Cyclo(-3)); // q = 3, eps = -1
    CHECK(sqrt_eps_q(3, 2) == Cyclo(3)); // q = 9, eps = +1, rational square root
    auto s7 = sqrt_eps_q(7, 1);
    CHECK(s7 * s7 == Cyclo(-7));
    auto s27 = sqrt_eps_q(3, 3);
    CHECK(s27 * s27 == Cyclo(-27));
}

TEST_CASE("numeric approximation sanity") {
    for (long n : {3L, 5L, 8L, 12L}) {
        auto z = Cyclo::root_of_unity(n, 1);
        CHECK(std::abs(std::abs(z.approx()) - 1.0) < 1e-9);
        CHECK(std::abs(z.approx() - std::polar(1.0, 2 * M_PI / double(n))) < 1e-9);
    }
    CHECK(std::abs(sqrt_eps_q(5, 1).approx().real() - std::sqrt(5.0)) < 1e-9);
}

TEST_CASE("arithmetic across conductors") {
    auto a = Cyclo::root_of_unity(3, 1);
    auto b = Cyclo::root_of_unity(4, 1);
    auto s = a + b;
    CHECK(s.conductor() == 12);
    CHECK(s - b == a.lift_to(12));
    CHECK((a * b) * (a * b) == (a * a) * (b * b));
}
