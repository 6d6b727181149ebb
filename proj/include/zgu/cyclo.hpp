#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "zgu/errors.hpp"
#include "zgu/rational.hpp"

namespace zgu {

/// Exact element of the cyclotomic field Q(zeta_N), stored on the power
/// basis 1, zeta, ..., zeta^(phi(N)-1) after reduction mod the N-th
/// cyclotomic polynomial. The representation is unique for fixed N;
/// arithmetic between different conductors lifts to the lcm.
class Cyclo {
public:
    Cyclo() : n_(1), c_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r) : n_(1), c_(1, r) {}
    explicit Cyclo(long v) : n_(1), c_(1, Rational(v)) {}

    static Cyclo root_of_unity(long n, long k);
    static Cyclo zero(long n);
    /// Rebuild from conductor + power-basis coefficients (length phi(n)).
    static Cyclo from_coeffs(long n, std::vector<Rational> c);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Cyclo lift_to(long m) const;                 // n_ must divide m
    std::optional<Cyclo> lower_to(long m) const; // m must divide n_

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rational& r) const;
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    bool operator==(const Cyclo& o) const;
    bool is_zero() const;

    /// Galois automorphism zeta_N -> zeta_N^t, gcd(t, N) = 1.
    Cyclo galois(long t) const;
    /// Complex conjugation, the automorphism zeta_N -> zeta_N^(-1).
    Cyclo conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

    std::optional<Rational> as_rational() const;

    std::complex<double> approx() const;
    std::string to_string() const;

private:
    Cyclo(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
    long n_;
    std::vector<Rational> c_; // length phi(n_)
};

long euler_phi(long n);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Exact square root of eps*q for q = p^f, p odd, eps = +-1 with
/// q = eps mod 4: rational p^(f/2) when f is even, otherwise
/// p^((f-1)/2) times the quadratic Gauss sum over GF(p).
Cyclo sqrt_eps_q(int p, int f);

} // namespace zgu
