#include "doctest.h"

#include <algorithm>
#include <complex>
#include <set>

#include "zgu/chartable.hpp"

using namespace zgu;

TEST_CASE("q=7 degrees and spot values") {
    auto classes = conjugacy_classes(7);
    auto table = build_char_table(7);
    std::multiset<long> degs, want{1, 7, 8, 6, 3, 3};
    long sumsq = 0;
    for (const auto& r : table.rows) {
        degs.insert(r.degree);
        sumsq += r.degree * r.degree;
    }
    CHECK(degs == want);
    CHECK(sumsq == 168);

    // the involution lies in the b-family when eps = -1, and psi(b^m) = -1
    const auto& s = classes.involution_label();
    CHECK(s == "b^2");
    CHECK(table.row("psi").values.at(s) == Cyclo(-1));
}

TEST_CASE("q=9: eta on a^l is (-1)^l") {
    auto table = build_char_table(9);
    CHECK(table.eps == 1);
    CHECK(table.row("eta_1").values.at("a^1") == Cyclo(-1));
    CHECK(table.row("eta_2").values.at("a^1") == Cyclo(-1));
    CHECK(table.row("eta_1").values.at("a^2") == Cyclo(1));
}

TEST_CASE("test_character") {
    auto c7 = conjugacy_classes(7);
    auto t7 = build_char_table(7);
    const auto& xi7 = test_character(t7, c7);
    CHECK(xi7.label == "theta_1");
    CHECK(xi7.degree == 6);
    CHECK(xi7.values.at(c7.involution_label()) == Cyclo(2));

    auto c9 = conjugacy_classes(9);
    auto t9 = build_char_table(9);
    const auto& xi9 = test_character(t9, c9);
    CHECK(xi9.label == "chi_1");
    CHECK(xi9.degree == 10);
    CHECK(xi9.values.at(c9.involution_label()) == Cyclo(-2));

    auto c17 = conjugacy_classes(17);
    auto t17 = build_char_table(17);
    const auto& xi17 = test_character(t17, c17);
    CHECK(xi17.values.at(c17.involution_label()) == Cyclo(-2));

    CHECK_THROWS_AS(test_character(build_char_table(5), conjugacy_classes(5)), QIsFive);
}

TEST_CASE("orthogonality, small q") {
    for (long q : {5L, 7L, 11L}) {
        auto classes = conjugacy_classes(q);
        auto table = build_char_table(q);
        auto rep = verify_orthogonality(table, classes);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("fs_indicator") {
    auto classes = conjugacy_classes(7);
    auto table = build_char_table(7);
    CHECK(fs_indicator(table, classes, "theta_1") == 1);
    CHECK(fs_indicator(table, classes, "1") == 1);
    // the two degree-3 characters are complex-conjugate on the order-7 classes
    CHECK(fs_indicator(table, classes, "eta_1") == 0);
    CHECK(fs_indicator(table, classes, "eta_2") == 0);
}

TEST_CASE("restriction to a dihedral-8 subgroup of PSL(2,7)") {
    auto classes = conjugacy_classes(7);
    auto table = build_char_table(7);
    const auto& xi = test_character(table, classes);
    auto h = find_subgroup(7, SubgroupShape::Dihedral, 8);
    REQUIRE(h.has_value());
    auto mult = restrict_multiplicities(xi.values, *h, classes);
    auto chars = small_group_characters(*h, classes.spec);
    Rational weighted(0);
    for (const auto& hc : chars) {
        auto m = mult.at(hc.label);
        CHECK(rat_den(m) == 1);
        CHECK(rat_num(m) >= 0);
        weighted += m * Rational(hc.degree);
    }
    CHECK(weighted == Rational(xi.degree));
}

TEST_CASE("restriction to the trivial subgroup") {
    auto classes = conjugacy_classes(7);
    auto table = build_char_table(7);
    const auto& xi = test_character(table, classes);
    std::vector<PSL2Elem> triv{psl2_identity(classes.spec)};
    auto mult = restrict_multiplicities(xi.values, triv, classes);
    REQUIRE(mult.size() == 1);
    CHECK(mult.begin()->second == Rational(xi.degree));
}

TEST_CASE("restriction to a four-group in PSL(2,9)") {
    auto classes = conjugacy_classes(9);
    auto table = build_char_table(9);
    const auto& xi = test_character(table, classes);
    auto h = find_subgroup(9, SubgroupShape::FourGroup);
    REQUIRE(h.has_value());
    auto mult = restrict_multiplicities(xi.values, *h, classes);
    Rational weighted(0);
    for (const auto& [label, m] : mult) {
        CHECK(rat_den(m) == 1);
        CHECK(rat_num(m) >= 0);
        weighted += m;
    }
    CHECK(weighted == Rational(xi.degree)); // all four-group irreducibles are linear
}

TEST_CASE("restrictions of every irreducible to cyclic subgroups are in Z>=0") {
    auto classes = conjugacy_classes(7);
    auto table = build_char_table(7);
    for (long n : {2L, 3L, 4L, 7L}) {
        auto h = find_subgroup(7, SubgroupShape::Cyclic, n);
        REQUIRE(h.has_value());
        for (const auto& row : table.rows) {
            auto mult = restrict_multiplicities(row.values, *h, classes);
            Rational total(0);
            for (const auto& [label, m] : mult) {
                CHECK(rat_den(m) == 1);
                CHECK(rat_num(m) >= 0);
                total += m;
            }
            CHECK(total == Rational(row.degree));
        }
    }
}

TEST_CASE("brauer characters: counts, constants, Steinberg") {
    for (long q : {5L, 7L, 9L, 11L, 13L, 25L, 27L}) {
        auto classes = conjugacy_classes(q);
        auto table = build_char_table(q);
        auto brows = zgu::brauer_characters(q);
        CHECK(brows.size() + 2 == classes.classes.size());

        // the trivial module and the Steinberg module bookend the list
        bool saw_trivial = false, saw_steinberg = false;
        for (const auto& row : brows) {
            CHECK(row.values.size() == classes.classes.size() - 2);
            if (row.degree == 1) {
                saw_trivial = true;
                for (const auto& [label, v] : row.values) CHECK(v == Cyclo(Rational(1)));
            }
            if (row.degree == q) {
                saw_steinberg = true;
                // agrees with the ordinary degree-q character on p-regular classes
                const auto& psi = table.row("psi");
                for (const auto& [label, v] : row.values) CHECK(v == psi.values.at(label));
            }
        }
        CHECK(saw_trivial);
        CHECK(saw_steinberg);
    }
}

TEST_CASE("brauer characters: spot values at q = 9") {
    auto brows = zgu::brauer_characters(9);
    std::multiset<long> degs;
    for (const auto& row : brows) degs.insert(row.degree);
    CHECK(degs == std::multiset<long>{1, 3, 3, 4, 9});
    // the degree-4 module phi_1_1 takes value -2 on the order-4 class a^1
    // and -1 on both order-5 classes
    for (const auto& row : brows) {
        if (row.degree != 4) continue;
        CHECK(row.values.at("a^1") == Cyclo(Rational(-2)));
        auto b1 = row.values.at("b^1").as_rational();
        auto b2 = row.values.at("b^2").as_rational();
        REQUIRE(b1.has_value());
        REQUIRE(b2.has_value());
        CHECK(*b1 == Rational(-1));
        CHECK(*b2 == Rational(-1));
    }
}

TEST_CASE("ordinary characters decompose into brauer characters over Z>=0") {
    // solve the square linear system on p-regular classes numerically and
    // check the coefficients land near nonnegative integers
    for (long q : {5L, 7L, 9L, 11L, 13L}) {
        auto classes = conjugacy_classes(q);
        auto table = build_char_table(q);
        auto brows = zgu::brauer_characters(q);
        std::vector<std::string> reg;
        for (const auto& ci : classes.classes)
            if (ci.label != "c" && ci.label != "d") reg.push_back(ci.label);
        const size_t k = reg.size();
        REQUIRE(brows.size() == k);
        for (const auto& chi : table.rows) {
            std::vector<std::vector<std::complex<double>>> m(k,
                std::vector<std::complex<double>>(k + 1));
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = 0; j < k; ++j) m[i][j] = brows[j].values.at(reg[i]).approx();
                m[i][k] = chi.values.at(reg[i]).approx();
            }
            for (size_t col = 0; col < k; ++col) { // gaussian elimination
                size_t piv = col;
                for (size_t r = col + 1; r < k; ++r)
                    if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
                std::swap(m[col], m[piv]);
                REQUIRE(std::abs(m[col][col]) > 1e-9);
                for (size_t r = 0; r < k; ++r) {
                    if (r == col) continue;
                    auto fac = m[r][col] / m[col][col];
                    for (size_t c = col; c <= k; ++c) m[r][c] -= fac * m[col][c];
                }
            }
            for (size_t i = 0; i < k; ++i) {
                auto coeff = m[i][k] / m[i][i];
                CHECK(std::abs(coeff.imag()) < 1e-7);
                double rounded = std::round(coeff.real());
                CHECK(std::abs(coeff.real() - rounded) < 1e-7);
                CHECK(rounded >= -1e-7);
            }
        }
    }
}
