#include "fusionkit/scalars.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace fusionkit {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            d.push_back(i);
            if (i != n / i) d.push_back(n / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<unsigned> units_mod(unsigned n) {
    std::vector<unsigned> u;
    for (unsigned k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) u.push_back(k % n);
    if (n == 1) u = {0};
    return u;
}

namespace {

// Quotient of exact polynomial division a / b (b monic-leading).
std::vector<Rational> poly_divide_exact(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) return {};
    std::vector<Rational> q(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / lead;
        q[k] = c;
        if (!c.is_zero())
            for (size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    return q;
}

// Remainder of a mod b (b monic), in place on a copy.
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b) {
    size_t db = b.size() - 1;
    while (a.size() > db) {
        Rational c = a.back();
        if (!c.is_zero()) {
            size_t off = a.size() - 1 - db;
            for (size_t j = 0; j < db; ++j) a[off + j] -= c * b[j];
        }
        a.pop_back();
    }
    return a;
}

void poly_trim(std::vector<Rational>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::function<std::vector<Rational>(unsigned)> compute = [&](unsigned m) -> std::vector<Rational> {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        std::vector<Rational> num(m + 1, Rational(0));
        num[0] = Rational(-1);
        num[m] = Rational(1);
        for (unsigned d : divisors(m)) {
            if (d == m) continue;
            num = poly_divide_exact(num, compute(d));
        }
        cache[m] = num;
        return num;
    };
    compute(n);
    return cache[n];
}

// ---------------------------------------------------------------------------
// Cyclo

Cyclo::Cyclo(unsigned n, std::vector<Rational> coeffs) { canonicalize(n, std::move(coeffs)); }

Cyclo Cyclo::root_of_unity(unsigned n, long k) {
    long kk = ((k % (long)n) + (long)n) % (long)n;
    std::vector<Rational> c((size_t)kk + 1, Rational(0));
    c[(size_t)kk] = Rational(1);
    return Cyclo(n, std::move(c));
}

namespace {

// Rational Gaussian solve of V x = y; V given column major. Returns nullopt if
// inconsistent; V need not be square.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   std::vector<Rational> y) {
    size_t rows = y.size(), ncols = cols.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols, Rational(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) a[i][j] = cols[j][i];
    std::vector<long> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(y[p], y[r]);
        Rational inv = Rational(1) / a[r][c];
        for (size_t j = c; j < ncols; ++j) a[r][j] *= inv;
        y[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
            y[i] -= f * y[r];
        }
        pivot_col[r] = (long)c;
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!y[i].is_zero()) return std::nullopt;
    std::vector<Rational> x(ncols, Rational(0));
    for (size_t i = 0; i < r; ++i) x[(size_t)pivot_col[i]] = y[i];
    return x;
}

// Power-basis representation of zeta_n^k inside Q(zeta_n), reduced.
std::vector<Rational> power_basis_vector(unsigned n, unsigned k, const std::vector<Rational>& phi_n) {
    std::vector<Rational> v(k % n + 1, Rational(0));
    v[k % n] = Rational(1);
    size_t deg = phi_n.size() - 1;
    while (v.size() > deg) {
        Rational c = v.back();
        if (!c.is_zero()) {
            size_t off = v.size() - 1 - deg;
            for (size_t j = 0; j < deg; ++j) v[off + j] -= c * phi_n[j];
        }
        v.pop_back();
    }
    v.resize(deg, Rational(0));
    return v;
}

}  // namespace

void Cyclo::canonicalize(unsigned n, std::vector<Rational> raw) {
    if (n == 0) throw std::invalid_argument("conductor must be positive");
    // Fold n = 2 mod 4 down to n/2: zeta_{2m} = -zeta_m^{(m+1)/2} for odd m.
    if (n % 4 == 2) {
        unsigned m = n / 2;
        std::vector<Rational> folded(m, Rational(0));
        for (size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].is_zero()) continue;
            unsigned e = (unsigned)(((unsigned long)i * ((m + 1) / 2)) % m);
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            folded[e] += sign * raw[i];
        }
        canonicalize(m, std::move(folded));
        return;
    }
    const auto& phi_n = cyclotomic_polynomial(n);
    size_t deg = phi_n.size() - 1;
    // Reduce modulo Phi_n.
    while (raw.size() > deg) {
        Rational c = raw.back();
        if (!c.is_zero()) {
            size_t off = raw.size() - 1 - deg;
            for (size_t j = 0; j < deg; ++j) raw[off + j] -= c * phi_n[j];
        }
        raw.pop_back();
    }
    raw.resize(deg, Rational(0));

    if (n == 1) {
        conductor_ = 1;
        coeffs_ = std::move(raw);
        return;
    }
    // Minimize the conductor: smallest divisor d of n (d != 2 mod 4) whose
    // power basis expresses the element.
    for (unsigned d : divisors(n)) {
        if (d == n) break;
        if (d % 4 == 2) continue;
        unsigned dd = euler_phi(d);
        std::vector<std::vector<Rational>> cols;
        cols.reserve(dd);
        for (unsigned j = 0; j < dd; ++j) cols.push_back(power_basis_vector(n, (n / d) * j % n, phi_n));
        if (auto sol = solve_columns(cols, raw)) {
            conductor_ = d;
            coeffs_ = std::move(*sol);
            return;
        }
    }
    conductor_ = n;
    coeffs_ = std::move(raw);
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (conductor_ != 1) throw std::logic_error("not a rational cyclotomic");
    return coeffs_[0];
}

namespace {
// Lift coefficients from Q(zeta_d) power basis into raw (unreduced) power
// coefficients over zeta_L, L a multiple of d.
std::vector<Rational> lift_raw(const Cyclo& x, unsigned L) {
    std::vector<Rational> out(L, Rational(0));
    unsigned step = L / x.conductor();
    for (size_t i = 0; i < x.coeffs().size(); ++i) out[(i * step) % L] += x.coeffs()[i];
    return out;
}
}  // namespace

Cyclo Cyclo::operator+(const Cyclo& o) const {
    unsigned L = (unsigned)std::lcm(conductor_, o.conductor_);
    auto a = lift_raw(*this, L);
    auto b = lift_raw(o, L);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return Cyclo(L, std::move(a));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    if (conductor_ == 1) {
        if (coeffs_[0].is_zero()) return Cyclo();
        Cyclo r = o;
        for (auto& c : r.coeffs_) c *= coeffs_[0];
        return r;  // nonzero rational scaling preserves canonical form
    }
    if (o.conductor_ == 1) return o * *this;
    unsigned L = (unsigned)std::lcm(conductor_, o.conductor_);
    auto a = lift_raw(*this, L);
    auto b = lift_raw(o, L);
    poly_trim(a);
    poly_trim(b);
    auto prod = poly_mul(a, b);
    // Reduce exponents modulo L first (cheap) before Phi_L reduction.
    std::vector<Rational> folded(L, Rational(0));
    for (size_t i = 0; i < prod.size(); ++i) folded[i % L] += prod[i];
    return Cyclo(L, std::move(folded));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (conductor_ == 1) return Cyclo(Rational(1) / coeffs_[0]);
    // Extended Euclid in Q[x] modulo the (irreducible) conductor polynomial.
    const auto& phi_n = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0 = phi_n, r1 = coeffs_;
    poly_trim(r1);
    std::vector<Rational> t0 = {}, t1 = {Rational(1)};
    while (!r1.empty()) {
        // quotient of r0 / r1
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        std::vector<Rational> rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t off = rem.size() - r1.size();
            q[off] = c;
            for (size_t j = 0; j < r1.size(); ++j) rem[off + j] -= c * r1[j];
            poly_trim(rem);
            if (rem.size() < r1.size()) break;
        }
        r0 = r1;
        r1 = rem;
        // t = t0 - q * t1
        auto qt1 = poly_mul(q, t1);
        std::vector<Rational> t(std::max(t0.size(), qt1.size()), Rational(0));
        for (size_t i = 0; i < t0.size(); ++i) t[i] += t0[i];
        for (size_t i = 0; i < qt1.size(); ++i) t[i] -= qt1[i];
        poly_trim(t);
        t0 = t1;
        t1 = t;
    }
    // r0 = gcd (a nonzero constant, since Phi_n is irreducible); inverse = t0 / r0.
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: unexpected gcd degree");
    for (auto& c : t0) c /= r0[0];
    return Cyclo(conductor_, poly_mod(std::move(t0), phi_n));
}

Cyclo Cyclo::operator/(const Cyclo& o) const { return *this * o.inverse(); }

Cyclo Cyclo::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result(Rational(1));
    Cyclo base = *this;
    unsigned long ue = (unsigned long)e;
    while (ue) {
        if (ue & 1) result = result * base;
        base = base * base;
        ue >>= 1;
    }
    return result;
}

Cyclo Cyclo::galois(long k) const {
    unsigned n = conductor_;
    if (n == 1) return *this;
    long kk = ((k % (long)n) + (long)n) % (long)n;
    if (std::gcd((unsigned long)kk, (unsigned long)n) != 1)
        throw std::invalid_argument("galois exponent not coprime to conductor");
    std::vector<Rational> raw(n, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        raw[(size_t)((unsigned long)i * (unsigned long)kk % n)] += coeffs_[i];
    }
    return Cyclo(n, std::move(raw));
}

BigComplex Cyclo::embed() const {
    BigComplex acc;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        acc = acc + BigComplex(coeffs_[i]) * BigComplex::root_of_unity(conductor_, (long)i);
    }
    return acc;
}

namespace {
std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}
}  // namespace

std::string Cyclo::str() const {
    if (conductor_ == 1) return rational_str(coeffs_[0]);
    std::string out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? "-" : "+";
        }
        std::string term;
        if (i == 0) {
            term = rational_str(a);
        } else {
            if (a != 1) term = rational_str(a) + "*";
            term += "E(" + std::to_string(conductor_) + ")";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    if (first) return "0";
    return out;
}

}  // namespace fusionkit
