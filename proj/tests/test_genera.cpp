#include <doctest.h>

#include <random>

#include "symprod/errors.hpp"
#include "symprod/genera.hpp"
#include "symprod/spaces.hpp"

using namespace symprod;

namespace {

YRationalFunction rf(const std::string& s) { return YRationalFunction(YPolynomial::parse(s)); }

YPolynomial random_int_poly(std::mt19937_64& rng, unsigned max_degree) {
    YPolynomial p;
    for (unsigned e = 0; e <= max_degree; ++e) {
        const long v = static_cast<long>(rng() % 7) - 3;
        if (v != 0) p += YPolynomial::monomial(Rational(v), e);
    }
    return p;
}

}  // namespace

TEST_SUITE("genera") {

TEST_CASE("chi series closed forms") {
    SUBCASE("constant Euler characteristic") {
        const ScalarSeries s = chi_series(YPolynomial(Rational(3)), 10);
        for (unsigned n = 0; n <= 10; ++n)
            CHECK(s[n] == YRationalFunction(binomial(Rational(static_cast<long>(n) + 2), n)));
    }
    SUBCASE("1 + y expands 1/((1-t)(1-yt))") {
        const ScalarSeries s = chi_series(YPolynomial::parse("1+y"), 10);
        for (unsigned n = 0; n <= 10; ++n) {
            YPolynomial expected;
            for (unsigned p = 0; p <= n; ++p) expected += YPolynomial::monomial(Rational(1), p);
            CHECK(s[n] == YRationalFunction(expected));
        }
    }
    SUBCASE("zero gives the constant series 1") {
        const ScalarSeries s = chi_series(YPolynomial(), 6);
        CHECK(s[0] == rf("1"));
        for (unsigned n = 1; n <= 6; ++n) CHECK(s[n].is_zero());
    }
    SUBCASE("multiplicative in the Hodge polynomial") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 25; ++i) {
            const YPolynomial g1 = random_int_poly(rng, 3);
            const YPolynomial g2 = random_int_poly(rng, 3);
            CHECK(chi_series(g1 + g2, 8) == chi_series(g1, 8) * chi_series(g2, 8));
        }
    }
}

TEST_CASE("zagier signature series") {
    SUBCASE("a point gives the all-ones series") {
        const ScalarSeries s = zagier_signature_series(1, 1, 8);
        for (unsigned n = 0; n <= 8; ++n) CHECK(s[n] == rf("1"));
    }
    SUBCASE("the projective line gives 1/(1-t^2)") {
        const ScalarSeries s = zagier_signature_series(0, 2, 9);
        for (unsigned n = 0; n <= 9; ++n)
            CHECK(s[n] == YRationalFunction(Rational(n % 2 == 0 ? 1 : 0)));
    }
    SUBCASE("parity mismatch is rejected") {
        CHECK_THROWS_AS(zagier_signature_series(1, 2, 5), ParityError);
    }
    SUBCASE("negative and mixed signs stay exact") {
        CHECK_NOTHROW(zagier_signature_series(-3, 5, 12));
        CHECK_NOTHROW(zagier_signature_series(-4, -6, 12));
    }
    SUBCASE("agreement with the chi series at parameter 1") {
        // chi_series(g) evaluated at stored y = -1 matches the exponential
        // signature form with sigma = g(-1) and chi = g(1); the difference
        // g(1) - g(-1) is automatically even for integer polynomials.
        std::mt19937_64 rng(37);
        for (int i = 0; i < 25; ++i) {
            const YPolynomial g = random_int_poly(rng, 4);
            const long sigma = g.evaluate(Rational(-1)).numerator().get_si();
            const long chi = g.evaluate(Rational(1)).numerator().get_si();
            const ScalarSeries zagier = zagier_signature_series(sigma, chi, 9);
            const ScalarSeries hodge = chi_series(g, 9);
            for (unsigned n = 0; n <= 9; ++n)
                CHECK(hodge[n].evaluate(Rational(-1)) == zagier[n].constant_value());
        }
    }
}

TEST_CASE("arithmetic genus series") {
    SUBCASE("chi_a = 1 is the all-ones series") {
        const ScalarSeries s = arithmetic_genus_series(1, 8);
        for (unsigned n = 0; n <= 8; ++n) CHECK(s[n] == rf("1"));
    }
    SUBCASE("chi_a = 0 is 1, 0, 0, ...") {
        const ScalarSeries s = arithmetic_genus_series(0, 5);
        CHECK(s[0] == rf("1"));
        for (unsigned n = 1; n <= 5; ++n) CHECK(s[n].is_zero());
    }
    SUBCASE("chi_a = 2 counts n + 1") {
        const ScalarSeries s = arithmetic_genus_series(2, 8);
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(s[n] == YRationalFunction(Rational(static_cast<long>(n) + 1)));
    }
    SUBCASE("equals the chi series of a constant") {
        for (long chi_a = -2; chi_a <= 3; ++chi_a)
            CHECK(arithmetic_genus_series(chi_a, 10) ==
                  chi_series(YPolynomial(Rational(chi_a)), 10));
    }
}

TEST_CASE("degree series") {
    SUBCASE("unit series degrees are 1, 0, 0, ...") {
        const SpaceModel point = point_model(5);
        const ScalarSeries d = degree_series(unit_series(point));
        CHECK(d[0] == rf("1"));
        for (unsigned n = 1; n <= 5; ++n) CHECK(d[n].is_zero());
    }
    SUBCASE("point model degrees reproduce the chi series") {
        const SpaceModel point = point_model(7);
        GradedClass base(point.module(1));
        const YPolynomial g = YPolynomial::parse("2-y+y^3");
        base.set_coefficient(0, YRationalFunction(g));
        CHECK(degree_series(symmetric_class_series(point, base)) == chi_series(g, 7));
    }
    SUBCASE("line model degrees are the Hodge polynomials of its powers") {
        const SpaceModel p1 = p1_model(6);
        const PontSeries s = symmetric_class_series(p1, negate_y(hirzebruch_class_pn(1)));
        CHECK(degree_series(s) == chi_series(YPolynomial::parse("1+y"), 6));
    }
}

}  // TEST_SUITE
