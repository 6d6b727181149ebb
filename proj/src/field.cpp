#include "zgu/field.hpp"

#include <algorithm>
#include <numeric>

namespace zgu {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<int>; // dense, constant term first

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1; // m monic of degree dm
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i) {
            int& c = a[da - dm + i];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        a = poly_trim(std::move(a));
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, long e, const Poly& m, int p) {
    Poly acc = {1};
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // make b monic for the mod step
        Poly bm = b;
        int lead = bm.back();
        if (lead != 1) {
            // inverse of lead mod p by Fermat
            long base = lead % p, acc = 1;
            for (int e = p - 2; e > 0; e >>= 1) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
            }
            for (int& c : bm) c = static_cast<int>(c * acc % p);
        }
        Poly r = poly_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Irreducibility of a monic polynomial of degree f over Z/p.
bool is_irreducible(const Poly& m, int p) {
    const int f = static_cast<int>(m.size()) - 1;
    if (f == 1) return true;
    if (f <= 4) {
        // exhaustive check: no monic factor of degree 1..f/2
        for (int d = 1; 2 * d <= f; ++d) {
            long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long k = 0; k < count; ++k) {
                Poly g(d + 1, 0);
                long t = k;
                for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
                g[d] = 1;
                if (poly_mod(m, g, p).empty()) return false;
            }
        }
        return true;
    }
    // x^(p^f) = x mod m, and gcd(x^(p^(f/t)) - x, m) = 1 for prime t | f
    Poly x = {0, 1};
    auto frob_pow = [&](long k) {
        Poly acc = x;
        for (long i = 0; i < k; ++i) acc = poly_powmod(acc, p, m, p);
        return acc;
    };
    Poly xf = frob_pow(f);
    xf.resize(std::max<size_t>(xf.size(), 2), 0);
    xf[1] = ((xf[1] - 1) % p + p) % p;
    if (!poly_trim(std::move(xf)).empty()) return false;
    for (int t = 2; t <= f; ++t) {
        if (f % t != 0 || !is_prime(t)) continue;
        Poly xk = frob_pow(f / t);
        Poly diff = xk;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        Poly g = poly_gcd(diff, m, p);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace

FieldSpec build_field(int p, int f) {
    if (p < 2 || f < 1) throw Error("build_field: need p >= 2, f >= 1");
    if (!is_prime(p)) throw NotPrime("build_field: " + std::to_string(p) + " is not prime");
    FieldSpec spec;
    spec.p = p;
    spec.f = f;
    spec.q = 1;
    for (int i = 0; i < f; ++i) spec.q *= p;
    if (f == 1) {
        spec.modulus = {0, 1}; // x
        return spec;
    }
    // lexicographically smallest monic irreducible, coefficient order (c_0, c_1, ...)
    for (long k = 0; k < spec.q; ++k) {
        Poly m(f + 1, 0);
        // decode k so that c_0 is the most significant digit (lex order)
        long rem = k;
        for (int i = 0; i < f; ++i) {
            long w = 1;
            for (int j = 0; j < f - 1 - i; ++j) w *= p;
            m[i] = static_cast<int>(rem / w);
            rem %= w;
        }
        m[f] = 1;
        if (is_irreducible(m, p)) {
            spec.modulus = m;
            return spec;
        }
    }
    throw Error("build_field: no irreducible polynomial found (unreachable)");
}

FqElem fq_zero(const FieldSpec& spec) { return FqElem{std::vector<int>(spec.f, 0)}; }

FqElem fq_one(const FieldSpec& spec) {
    FqElem e = fq_zero(spec);
    e.coeffs[0] = 1 % spec.p;
    return e;
}

FqElem fq_from_int(const FieldSpec& spec, long n) {
    FqElem e = fq_zero(spec);
    e.coeffs[0] = static_cast<int>(((n % spec.p) + spec.p) % spec.p);
    return e;
}

bool fq_is_zero(const FqElem& a) {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](int c) { return c == 0; });
}

FqElem fq_add(const FqElem& a, const FqElem& b, const FieldSpec& spec) {
    FqElem r = a;
    for (int i = 0; i < spec.f; ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % spec.p;
    return r;
}

FqElem fq_sub(const FqElem& a, const FqElem& b, const FieldSpec& spec) {
    FqElem r = a;
    for (int i = 0; i < spec.f; ++i) r.coeffs[i] = ((r.coeffs[i] - b.coeffs[i]) % spec.p + spec.p) % spec.p;
    return r;
}

FqElem fq_neg(const FqElem& a, const FieldSpec& spec) {
    FqElem r = a;
    for (int i = 0; i < spec.f; ++i) r.coeffs[i] = (spec.p - r.coeffs[i]) % spec.p;
    return r;
}

FqElem fq_mul(const FqElem& a, const FqElem& b, const FieldSpec& spec) {
    std::vector<int> c(2 * spec.f - 1, 0);
    for (int i = 0; i < spec.f; ++i)
        for (int j = 0; j < spec.f; ++j)
            c[i + j] = (c[i + j] + a.coeffs[i] * b.coeffs[j]) % spec.p;
    if (spec.f == 1) return FqElem{{c[0]}};
    Poly r = poly_mod(std::move(c), spec.modulus, spec.p);
    r.resize(spec.f, 0);
    return FqElem{std::move(r)};
}

FqElem fq_pow(const FqElem& a, long e, const FieldSpec& spec) {
    FqElem acc = fq_one(spec);
    FqElem base = a;
    if (e < 0) { base = fq_inv(a, spec); e = -e; }
    while (e > 0) {
        if (e & 1) acc = fq_mul(acc, base, spec);
        base = fq_mul(base, base, spec);
        e >>= 1;
    }
    return acc;
}

FqElem fq_inv(const FqElem& a, const FieldSpec& spec) {
    if (fq_is_zero(a)) throw DivisionByZero("fq_inv(0)");
    return fq_pow(a, spec.q - 2, spec);
}

long fq_index(const FqElem& a, const FieldSpec& spec) {
    long idx = 0, w = 1;
    for (int i = 0; i < spec.f; ++i) {
        idx += a.coeffs[i] * w;
        w *= spec.p;
    }
    return idx;
}

FqElem fq_element(const FieldSpec& spec, long index) {
    FqElem e = fq_zero(spec);
    for (int i = 0; i < spec.f; ++i) {
        e.coeffs[i] = static_cast<int>(index % spec.p);
        index /= spec.p;
    }
    return e;
}

long fq_order(const FqElem& a, const FieldSpec& spec) {
    if (fq_is_zero(a)) throw DivisionByZero("fq_order(0)");
    FqElem x = a;
    const FqElem one = fq_one(spec);
    long ord = 1;
    while (!(x == one)) {
        x = fq_mul(x, a, spec);
        ++ord;
    }
    return ord;
}

FqElem primitive_element(const FieldSpec& spec) {
    for (long i = 1; i < spec.q; ++i) {
        FqElem e = fq_element(spec, i);
        if (fq_order(e, spec) == spec.q - 1) return e;
    }
    throw Error("primitive_element: none found (unreachable)");
}

bool is_square(const FqElem& x, const FieldSpec& spec) {
    if (spec.p == 2) throw OddFieldRequired("is_square: q must be odd");
    if (fq_is_zero(x)) return true;
    return fq_pow(x, (spec.q - 1) / 2, spec) == fq_one(spec);
}

} // namespace zgu
