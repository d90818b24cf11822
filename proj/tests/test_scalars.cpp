#include "doctest.h"
#include "fusionkit/scalars.hpp"

using namespace fusionkit;

TEST_CASE("cyclotomic arithmetic in the power basis") {
    Scalar z8 = parse_scalar("E(8)");
    CHECK(z8 * z8 == parse_scalar("E(4)"));
    Scalar s = z8;
    for (int i = 0; i < 3; ++i) s *= z8;
    CHECK(s == Scalar(-1));
    CHECK(parse_scalar("E(5)+E(5)^2+E(5)^3+E(5)^4") == Scalar(-1));
    CHECK(parse_scalar("1/2*E(3)") + parse_scalar("1/2*E(3)") == parse_scalar("E(3)"));
}

TEST_CASE("conductors are minimal and never 2 mod 4") {
    // E(6) = -E(3)^2 lives in Q(zeta_3)
    CHECK(parse_scalar("E(6)").cyclo().conductor() == 3u);
    CHECK(parse_scalar("E(12)^4").cyclo().conductor() == 3u);
    // a rational disguised as a conductor-5 expression
    CHECK(parse_scalar("E(5)+E(5)^2+E(5)^3+E(5)^4").cyclo().conductor() == 1u);
    // E(8)^7 = -E(8)^3 in the reduced power basis
    CHECK(parse_scalar("E(8)+E(8)^7+1").str() == "1+E(8)-E(8)^3");
}

TEST_CASE("string round trips") {
    for (const char* text : {"0", "1", "-2/3", "E(8)-E(8)^3", "1/2+1/2*E(4)"}) {
        Scalar x = parse_scalar(text);
        CHECK(parse_scalar(x.str()) == x);
    }
}

TEST_CASE("numeric embeddings") {
    auto v = parse_scalar("E(8)-E(8)^3").embed();
    BigFloat two = v.re() * v.re();
    CHECK(boost::multiprecision::abs(two - 2) < Precision::tolerance());
    CHECK(boost::multiprecision::abs(v.im()) < Precision::tolerance());
}

TEST_CASE("rational reconstruction from floats") {
    BigFloat x = BigFloat(1) / 3;
    auto r = rational_reconstruct(x, Precision::tolerance(), 1000);
    REQUIRE(r.has_value());
    CHECK(*r == Rational(1, 3));
    CHECK(!rational_reconstruct(boost::multiprecision::sqrt(BigFloat(2)),
                                Precision::tolerance(), 1000)
               .has_value());
}

TEST_CASE("root recognition against a rational polynomial") {
    // golden ratio, root of x^2 - x - 1
    std::vector<Rational> poly{Rational(-1), Rational(-1), Rational(1)};
    BigComplex phi((1 + boost::multiprecision::sqrt(BigFloat(5))) / 2, BigFloat(0));
    auto c = recognize_root(poly, phi, 120);
    REQUIRE(c.has_value());
    CHECK(Scalar(*c) == parse_scalar("1+E(5)+E(5)^4"));
}

TEST_CASE("polynomial root finder") {
    std::vector<Rational> poly{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
    auto roots = poly_roots(poly);
    REQUIRE(roots.size() == 2);
    BigFloat tol = Precision::tolerance();
    bool plus = false, minus = false;
    for (const auto& r : roots) {
        if (r.near(BigComplex(BigFloat(1), BigFloat(0)), tol)) plus = true;
        if (r.near(BigComplex(BigFloat(-1), BigFloat(0)), tol)) minus = true;
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("square root gauge picks the exact principal root") {
    Scalar r = nth_root_gauge(Scalar(2), 2);
    CHECK(r == parse_scalar("E(8)+E(8)^7"));
    CHECK(r.str() == "E(8)-E(8)^3");
    CHECK(r * r == Scalar(2));
    // principal: positive real embedding
    CHECK(r.embed().re() > 0);
    Scalar cube = nth_root_gauge(Scalar(8), 3);
    CHECK(cube == Scalar(2));
}

TEST_CASE("total positivity distinguishes galois conjugates") {
    // (5 + sqrt 5)/2 is totally positive; its conjugate trick (1+sqrt5)/2 is not
    CHECK(is_totally_positive(parse_scalar("3+E(5)^2+E(5)^3").cyclo()));
    CHECK(!is_totally_positive(parse_scalar("1+E(5)+E(5)^4").cyclo()));
    CHECK(is_totally_positive(parse_scalar("2").cyclo()));
    CHECK(!is_totally_positive(parse_scalar("0").cyclo()));
}
