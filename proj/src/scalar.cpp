#include "fusionkit/scalars.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace fusionkit {

namespace {
unsigned initial_precision_bits() {
    if (const char* env = std::getenv("FUSIONKIT_PRECISION")) {
        long v = std::atol(env);
        if (v >= 64 && v <= 1 << 20) return (unsigned)v;
    }
    return 256;
}
unsigned g_precision_bits = 0;
}  // namespace

unsigned Precision::bits() {
    if (g_precision_bits == 0) set_bits(initial_precision_bits());
    return g_precision_bits;
}

void Precision::set_bits(unsigned b) {
    g_precision_bits = b;
    unsigned digits10 = (unsigned)(b * 0.30103) + 3;
    BigFloat::default_precision(digits10);
}

BigFloat Precision::tolerance() {
    BigFloat t = 1;
    return boost::multiprecision::ldexp(t, -(long)(bits() / 2));
}

// ---------------------------------------------------------------------------
// BigComplex

BigComplex::BigComplex(const Rational& r) : re_(0), im_(0) {
    Precision::bits();
    re_ = BigFloat(r);
}

BigComplex BigComplex::from_polar(const BigFloat& radius, const BigFloat& angle) {
    return {radius * cos(angle), radius * sin(angle)};
}

BigComplex BigComplex::root_of_unity(unsigned n, long k) {
    Precision::bits();
    BigFloat two_pi = 8 * atan(BigFloat(1));
    long kk = ((k % (long)n) + (long)n) % (long)n;
    BigFloat angle = two_pi * kk / n;
    return from_polar(BigFloat(1), angle);
}

BigComplex BigComplex::operator*(const BigComplex& o) const {
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

BigComplex BigComplex::operator/(const BigComplex& o) const {
    BigFloat d = o.re_ * o.re_ + o.im_ * o.im_;
    if (d.is_zero()) throw DivisionByZero();
    return {(re_ * o.re_ + im_ * o.im_) / d, (im_ * o.re_ - re_ * o.im_) / d};
}

BigFloat BigComplex::abs() const { return sqrt(re_ * re_ + im_ * im_); }

BigFloat BigComplex::arg() const { return atan2(im_, re_); }

BigComplex BigComplex::pow(long e) const {
    if (e == 0) return BigComplex(BigFloat(1), BigFloat(0));
    if (e < 0) return BigComplex(BigFloat(1), BigFloat(0)) / pow(-e);
    BigComplex base = *this, acc(BigFloat(1), BigFloat(0));
    unsigned long ue = (unsigned long)e;
    while (ue) {
        if (ue & 1) acc = acc * base;
        base = base * base;
        ue >>= 1;
    }
    return acc;
}

BigComplex BigComplex::principal_root(unsigned n) const {
    BigFloat r = abs();
    if (r.is_zero()) throw ZeroArgument();
    BigFloat root_r = exp(log(r) / n);
    BigFloat theta = arg();  // in (-pi, pi]
    return from_polar(root_r, theta / n);
}

bool BigComplex::near(const BigComplex& o, const BigFloat& tol) const {
    return (*this - o).abs() <= tol;
}

std::string BigComplex::str() const {
    std::ostringstream os;
    os.precision(24);
    os << re_;
    if (!im_.is_zero()) {
        os << (im_ < 0 ? "-" : "+");
        BigFloat a = boost::multiprecision::abs(im_);
        os << a << "i";
    }
    os << " (" << Precision::bits() << "-bit)";
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::operator+(const Scalar& o) const {
    if (exact() && o.exact()) return Scalar(cyclo() + o.cyclo());
    return Scalar(embed() + o.embed());
}
Scalar Scalar::operator-(const Scalar& o) const {
    if (exact() && o.exact()) return Scalar(cyclo() - o.cyclo());
    return Scalar(embed() - o.embed());
}
Scalar Scalar::operator-() const {
    if (exact()) return Scalar(-cyclo());
    return Scalar(-complex());
}
Scalar Scalar::operator*(const Scalar& o) const {
    if (exact() && o.exact()) return Scalar(cyclo() * o.cyclo());
    return Scalar(embed() * o.embed());
}
Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    if (exact() && o.exact()) return Scalar(cyclo() / o.cyclo());
    return Scalar(embed() / o.embed());
}
Scalar Scalar::conj() const {
    if (exact()) return Scalar(cyclo().conj());
    return Scalar(complex().conj());
}
Scalar Scalar::pow(long e) const {
    if (exact()) return Scalar(cyclo().pow(e));
    return Scalar(complex().pow(e));
}
Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (exact()) return Scalar(cyclo().inverse());
    return Scalar(BigComplex(Rational(1)) / complex());
}

bool Scalar::is_zero() const {
    if (exact()) return cyclo().is_zero();
    return complex().abs() <= Precision::tolerance();
}

bool Scalar::operator==(const Scalar& o) const {
    if (exact() && o.exact()) return cyclo() == o.cyclo();
    return embed() == o.embed();
}

std::optional<Integer> Scalar::as_integer(const BigFloat& tol) const {
    if (exact()) {
        if (!cyclo().is_rational()) return std::nullopt;
        Rational r = cyclo().rational_value();
        if (denominator(r) != 1) return std::nullopt;
        return numerator(r);
    }
    const BigComplex& z = complex();
    if (boost::multiprecision::abs(z.im()) > tol) return std::nullopt;
    BigFloat rounded = boost::multiprecision::round(z.re());
    if (boost::multiprecision::abs(z.re() - rounded) > tol) return std::nullopt;
    return rounded.convert_to<Integer>();
}

std::string Scalar::str() const { return exact() ? cyclo().str() : complex().str(); }

std::string scalar_to_string(const Scalar& s) { return s.str(); }

// ---------------------------------------------------------------------------
// GAP-style parser: sums of terms, each term a product of rationals and
// E(n)^k factors. Whitespace is ignored.

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' in scalar: " + s);
    }

    Integer parse_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            ++pos;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected integer in scalar: " + s);
        return Integer(s.substr(start, pos - start));
    }

    Cyclo parse_factor() {
        skip_ws();
        if (accept('(')) {
            Cyclo inner = parse_sum();
            expect(')');
            return inner;
        }
        if (pos < s.size() && s[pos] == 'E') {
            ++pos;
            expect('(');
            Integer n = parse_integer();
            expect(')');
            long k = 1;
            if (accept('^')) k = (long)parse_integer();
            if (n <= 0) throw ParseError("E(n) needs positive n: " + s);
            return Cyclo::root_of_unity((unsigned)n, k);
        }
        // rational literal
        Integer num = parse_integer();
        Integer den = 1;
        if (accept('/')) den = parse_integer();
        if (den == 0) throw ParseError("zero denominator: " + s);
        return Cyclo(Rational(num, den));
    }

    Cyclo parse_term() {
        Cyclo acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Cyclo parse_sum() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Cyclo acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Cyclo t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Parser p(text);
    Cyclo v = p.parse_sum();
    if (!p.eof()) throw ParseError("trailing characters in scalar: " + text);
    return Scalar(std::move(v));
}

}  // namespace fusionkit
