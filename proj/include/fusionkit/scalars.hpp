#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fusionkit {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};
struct NotReal : std::runtime_error {
    NotReal() : std::runtime_error("operand is not real") {}
};
struct ZeroArgument : std::runtime_error {
    ZeroArgument() : std::runtime_error("zero argument") {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error("parse error: " + m) {}
};

/// Global numeric precision, in bits. Reads FUSIONKIT_PRECISION once at startup.
class Precision {
public:
    static unsigned bits();
    static void set_bits(unsigned b);
    /// Default comparison tolerance, 2^{-bits/2}.
    static BigFloat tolerance();
};

// ---------------------------------------------------------------------------
// Elementary number theory helpers used throughout the scalar layer.

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);
std::vector<unsigned> units_mod(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial (degree phi(n), monic),
/// index i holds the coefficient of x^i. Cached.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

// ---------------------------------------------------------------------------

/// Arbitrary-precision complex number at the global working precision.
/// Arithmetic is deterministic at fixed precision; equality is tolerance based.
class BigComplex {
public:
    BigComplex() : re_(0), im_(0) {}
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(const Rational& r);
    static BigComplex from_polar(const BigFloat& radius, const BigFloat& angle);
    /// e^{2 pi i k / n}
    static BigComplex root_of_unity(unsigned n, long k);

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }

    BigComplex operator+(const BigComplex& o) const { return {re_ + o.re_, im_ + o.im_}; }
    BigComplex operator-(const BigComplex& o) const { return {re_ - o.re_, im_ - o.im_}; }
    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex operator*(const BigComplex& o) const;
    BigComplex operator/(const BigComplex& o) const;
    BigComplex conj() const { return {re_, -im_}; }
    BigFloat abs() const;
    BigFloat arg() const;  // atan2(im, re)
    BigComplex pow(long e) const;
    /// Principal n-th root: argument in (-pi/n, pi/n].
    BigComplex principal_root(unsigned n) const;

    bool near(const BigComplex& o, const BigFloat& tol) const;
    /// Tolerance-based equality at 2^{-precision/2}.
    bool operator==(const BigComplex& o) const { return near(o, Precision::tolerance()); }

    std::string str() const;

private:
    BigFloat re_, im_;
};

// ---------------------------------------------------------------------------

/// Exact element of the cyclotomic closure of Q, kept in canonical form:
/// minimal conductor n (never 2 mod 4) and coefficients over the power basis
/// zeta_n^0 .. zeta_n^{phi(n)-1} reduced modulo the n-th cyclotomic polynomial.
class Cyclo {
public:
    Cyclo() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclo(const Rational& r) : conductor_(1), coeffs_{r} {}
    Cyclo(long n) : Cyclo(Rational(n)) {}
    Cyclo(int n) : Cyclo(Rational(n)) {}
    /// Construct from raw power-basis data (any length <= n); canonicalizes.
    Cyclo(unsigned n, std::vector<Rational> coeffs);
    /// E(n)^k
    static Cyclo root_of_unity(unsigned n, long k = 1);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const { return conductor_ == 1; }
    Rational rational_value() const;  // requires is_rational()

    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator-() const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;  // throws DivisionByZero
    Cyclo inverse() const;
    Cyclo pow(long e) const;

    bool operator==(const Cyclo& o) const { return conductor_ == o.conductor_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    /// Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
    Cyclo galois(long k) const;
    /// Complex conjugation, zeta_n -> zeta_n^{-1}.
    Cyclo conj() const { return galois(-1); }
    bool is_real() const { return *this == conj(); }

    BigComplex embed() const;

    /// GAP-style string over E(n).
    std::string str() const;

private:
    void canonicalize(unsigned n, std::vector<Rational> raw);
    unsigned conductor_;
    std::vector<Rational> coeffs_;
};

// ---------------------------------------------------------------------------

/// Tagged scalar: exact cyclotomic by default, arbitrary-precision complex
/// fallback. Mixed-backend operations coerce to the numeric backend.
class Scalar {
public:
    Scalar() : v_(Cyclo()) {}
    Scalar(Cyclo c) : v_(std::move(c)) {}
    Scalar(BigComplex z) : v_(std::move(z)) {}
    Scalar(const Rational& r) : v_(Cyclo(r)) {}
    Scalar(long n) : v_(Cyclo(Rational(n))) {}
    Scalar(int n) : v_(Cyclo(Rational(n))) {}

    bool exact() const { return std::holds_alternative<Cyclo>(v_); }
    const Cyclo& cyclo() const { return std::get<Cyclo>(v_); }
    const BigComplex& complex() const { return std::get<BigComplex>(v_); }
    BigComplex embed() const { return exact() ? cyclo().embed() : complex(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar conj() const;
    Scalar pow(long e) const;
    Scalar inverse() const;

    bool is_zero() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact integer recovery; nullopt if not an exact (or near, for the
    /// numeric backend) rational integer.
    std::optional<Integer> as_integer(const BigFloat& tol) const;
    std::optional<Integer> as_integer() const { return as_integer(Precision::tolerance()); }

    std::string str() const;

private:
    std::variant<Cyclo, BigComplex> v_;
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

// ---------------------------------------------------------------------------
// Parsing / printing of the GAP-style scalar syntax, e.g. "1/2*E(8)-3*E(8)^3".

Scalar parse_scalar(const std::string& text);
std::string scalar_to_string(const Scalar& s);

// ---------------------------------------------------------------------------
// Recognition and root machinery.

/// All complex roots of the polynomial (Durand-Kerner), coefficient i of x^i.
std::vector<BigComplex> poly_roots(const std::vector<BigComplex>& coeffs);
std::vector<BigComplex> poly_roots(const std::vector<Rational>& coeffs);

/// Nearest rational p/q with q <= den_bound and |x - p/q| <= tol, if any.
std::optional<Rational> rational_reconstruct(const BigFloat& x, const BigFloat& tol,
                                             const Integer& den_bound = Integer(1) << 40);

/// Exact root of the rational polynomial p lying in some Q(zeta_m) with
/// m <= conductor_bound, matching the numeric approximation z. Best effort.
std::optional<Cyclo> recognize_root(const std::vector<Rational>& poly, const BigComplex& z,
                                    unsigned conductor_bound = 120);

/// True iff every Galois conjugate of a embeds to a positive real.
/// Throws NotReal when a is not fixed by conjugation.
bool is_totally_positive(const Cyclo& a);

/// Principal N-th root (argument in (-pi/N, pi/N]), recognized exactly as a
/// cyclotomic of conductor dividing lcm(cond, 4*N*cond) when possible.
Scalar nth_root_gauge(const Scalar& lambda, unsigned N);

}  // namespace fusionkit
