#include "zgu/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace zgu {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using IPoly = std::vector<Int>; // dense, constant term first

IPoly ipoly_trim(IPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// exact division, divisor monic
IPoly ipoly_div(IPoly num, const IPoly& den) {
    IPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !ipoly_trim(num).empty()) {
        num = ipoly_trim(std::move(num));
        if (num.size() < den.size()) break;
        size_t shift = num.size() - den.size();
        Int lead = num.back();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    }
    return quot;
}

struct Ctx {
    long n = 1;
    long phi = 1;
    IPoly poly;                     // Phi_n, length phi+1
    std::vector<IPoly> rows;        // rows[j - phi] = x^j mod Phi_n, length phi
    const IPoly& row(long j) const { return rows[j - phi]; }
};

std::mutex g_mutex;
std::map<long, IPoly> g_polys;
std::map<long, std::shared_ptr<const Ctx>> g_ctx;

const IPoly& cyclotomic_poly_locked(long n) {
    auto it = g_polys.find(n);
    if (it != g_polys.end()) return it->second;
    IPoly num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = ipoly_div(std::move(num), cyclotomic_poly_locked(d));
    }
    return g_polys.emplace(n, std::move(num)).first->second;
}

std::shared_ptr<const Ctx> context(long n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_ctx.find(n);
    if (it != g_ctx.end()) return it->second;
    auto ctx = std::make_shared<Ctx>();
    ctx->n = n;
    ctx->phi = euler_phi(n);
    ctx->poly = cyclotomic_poly_locked(n);
    const long phi = ctx->phi;
    const long maxexp = std::max(2 * phi - 2, n - 1);
    if (maxexp >= phi) {
        ctx->rows.reserve(maxexp - phi + 1);
        IPoly r(phi, Int(0)); // x^phi = -(lower coefficients of Phi_n)
        for (long i = 0; i < phi; ++i) r[i] = -ctx->poly[i];
        ctx->rows.push_back(r);
        for (long j = phi + 1; j <= maxexp; ++j) {
            IPoly next(phi, Int(0));
            Int top = r[phi - 1];
            for (long i = phi - 1; i > 0; --i) next[i] = r[i - 1];
            if (!top.is_zero())
                for (long i = 0; i < phi; ++i) next[i] += top * ctx->rows[0][i];
            r = next;
            ctx->rows.push_back(std::move(next));
        }
    }
    g_ctx.emplace(n, ctx);
    return ctx;
}

void add_monomial(std::vector<Rational>& acc, const Rational& coeff, long exp, const Ctx& ctx) {
    if (coeff == 0) return;
    if (exp < ctx.phi) {
        acc[exp] += coeff;
    } else {
        const IPoly& r = ctx.row(exp);
        for (long i = 0; i < ctx.phi; ++i)
            if (!r[i].is_zero()) acc[i] += coeff * Rational(r[i]);
    }
}

} // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    return cyclotomic_poly_locked(n);
}

Cyclo Cyclo::zero(long n) { return Cyclo(n, std::vector<Rational>(euler_phi(n), Rational(0))); }

Cyclo Cyclo::from_coeffs(long n, std::vector<Rational> c) {
    if (n < 1 || static_cast<long>(c.size()) != euler_phi(n))
        throw Error("Cyclo::from_coeffs: coefficient count must be phi(n)");
    return Cyclo(n, std::move(c));
}

Cyclo Cyclo::root_of_unity(long n, long k) {
    if (n < 1) throw Error("root_of_unity: n must be positive");
    k = ((k % n) + n) % n;
    auto ctx = context(n);
    std::vector<Rational> c(ctx->phi, Rational(0));
    add_monomial(c, Rational(1), k, *ctx);
    return Cyclo(n, std::move(c));
}

Cyclo Cyclo::lift_to(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error("lift_to: target conductor not a multiple");
    auto ctx = context(m);
    const long k = m / n_;
    std::vector<Rational> c(ctx->phi, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j)
        add_monomial(c, c_[j], static_cast<long>(j) * k, *ctx);
    return Cyclo(m, std::move(c));
}

std::optional<Cyclo> Cyclo::lower_to(long m) const {
    if (m == n_) return *this;
    if (n_ % m != 0) throw Error("lower_to: target conductor does not divide");
    const long phi_m = euler_phi(m);
    const long phi_n = euler_phi(n_);
    // columns: lifts of the target power basis; solve by Gaussian elimination
    std::vector<std::vector<Rational>> mat(phi_n, std::vector<Rational>(phi_m + 1, Rational(0)));
    for (long i = 0; i < phi_m; ++i) {
        Cyclo lifted = root_of_unity(m, i).lift_to(n_);
        for (long r = 0; r < phi_n; ++r) mat[r][i] = lifted.c_[r];
    }
    for (long r = 0; r < phi_n; ++r) mat[r][phi_m] = c_[r];
    long rank = 0;
    std::vector<long> pivot_col(phi_m, -1);
    for (long col = 0; col < phi_m && rank < phi_n; ++col) {
        long pr = -1;
        for (long r = rank; r < phi_n; ++r)
            if (mat[r][col] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(mat[rank], mat[pr]);
        Rational inv = Rational(1) / mat[rank][col];
        for (long j = col; j <= phi_m; ++j) mat[rank][j] *= inv;
        for (long r = 0; r < phi_n; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            Rational factor = mat[r][col];
            for (long j = col; j <= phi_m; ++j) mat[r][j] -= factor * mat[rank][j];
        }
        pivot_col[col] = rank;
        ++rank;
    }
    for (long r = rank; r < phi_n; ++r)
        if (mat[r][phi_m] != 0) return std::nullopt; // not in the subfield
    std::vector<Rational> sol(phi_m, Rational(0));
    for (long col = 0; col < phi_m; ++col)
        if (pivot_col[col] >= 0) sol[col] = mat[pivot_col[col]][phi_m];
    return Cyclo(m, std::move(sol));
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclo x = lift_to(m), y = o.lift_to(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

Cyclo Cyclo::operator*(const Rational& r) const {
    Cyclo x = *this;
    for (auto& c : x.c_) c *= r;
    return x;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    long m = std::lcm(n_, o.n_);
    Cyclo x = lift_to(m), y = o.lift_to(m);
    auto ctx = context(m);
    const long phi = ctx->phi;
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (long i = 0; i < phi; ++i) {
        if (x.c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (y.c_[j] == 0) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    std::vector<Rational> out(phi, Rational(0));
    for (long k = 0; k < 2 * phi - 1; ++k) add_monomial(out, conv[k], k, *ctx);
    return Cyclo(m, std::move(out));
}

bool Cyclo::operator==(const Cyclo& o) const {
    long m = std::lcm(n_, o.n_);
    return lift_to(m).c_ == o.lift_to(m).c_;
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

Cyclo Cyclo::galois(long t) const {
    t = ((t % n_) + n_) % n_;
    if (n_ == 1) return *this;
    if (std::gcd(t, n_) != 1) throw Error("galois: exponent not coprime to conductor");
    auto ctx = context(n_);
    std::vector<Rational> out(ctx->phi, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j)
        add_monomial(out, c_[j], (static_cast<long>(j) * t) % n_, *ctx);
    return Cyclo(n_, std::move(out));
}

std::optional<Rational> Cyclo::as_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

std::complex<double> Cyclo::approx() const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double v = static_cast<double>(rat_num(c_[j])) / static_cast<double>(rat_den(c_[j]));
        double arg = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n_);
        acc += v * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
}

std::string Cyclo::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << c_[j];
        if (j > 0) os << "*z" << n_ << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyclo sqrt_eps_q(int p, int f) {
    if (p == 2) throw EvenCharacteristic("sqrt_eps_q: p must be odd");
    if (p < 3 || f < 1) throw Error("sqrt_eps_q: bad arguments");
    Int scale = 1;
    for (int i = 0; i < f / 2; ++i) scale *= p;
    if (f % 2 == 0) return Cyclo(Rational(scale));
    // quadratic Gauss sum over GF(p); Legendre symbol by Euler's criterion
    Cyclo g = Cyclo::zero(p);
    for (long t = 1; t < p; ++t) {
        long acc = 1, base = t % p;
        for (long e = (p - 1) / 2; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base % p;
            base = base * base % p;
        }
        int leg = (acc == 1) ? 1 : -1;
        g += Cyclo::root_of_unity(p, t) * Rational(leg);
    }
    return g * Rational(scale);
}

} // namespace zgu
