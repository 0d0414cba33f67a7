#include <doctest.h>

#include <random>

#include "symprod/errors.hpp"
#include "symprod/pipelines.hpp"
#include "symprod/spaces.hpp"
#include "symprod/verify.hpp"

using namespace symprod;

namespace {

YRationalFunction rf(const std::string& s) { return YRationalFunction(YPolynomial::parse(s)); }

GradedClass p1_base() { return negate_y(hirzebruch_class_pn(1)); }

GradedClass scalar_base(const SpaceModel& point, const std::string& value) {
    GradedClass base(point.module(1));
    base.set_coefficient(0, rf(value));
    return base;
}

}  // namespace

TEST_SUITE("pipelines") {

TEST_CASE("direct Todd series") {
    SUBCASE("point model with unit Todd class gives the geometric series") {
        const SpaceModel point = point_model(7);
        const PontSeries s = todd_series_direct(point, scalar_base(point, "1"));
        for (unsigned n = 0; n <= 7; ++n) CHECK(s.term(n).coefficient(0) == rf("1"));
    }
    SUBCASE("line model matches the Todd classes of projective spaces") {
        const SpaceModel p1 = p1_model(6);
        const PontSeries s = todd_series_direct(p1, genus_class_pn(1, ClassicalGenus::todd));
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(s.term(n) == genus_class_pn(n, ClassicalGenus::todd));
    }
    SUBCASE("matches the y = 0 specialization of the Hirzebruch series") {
        const SpaceModel p1 = p1_model(6);
        const PontSeries hirzebruch = symmetric_class_series(p1, p1_base());
        const PontSeries direct = todd_series_direct(p1, genus_class_pn(1, ClassicalGenus::todd));
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(specialize_y(hirzebruch.term(n), Rational(0), SpecializeMode::evaluate) ==
                  direct.term(n));
    }
    SUBCASE("zero class gives the unit series") {
        const SpaceModel p1 = p1_model(4);
        CHECK(todd_series_direct(p1, GradedClass(p1.module(1))) == unit_series(p1));
    }
    SUBCASE("y-dependent input is rejected") {
        const SpaceModel p1 = p1_model(3);
        CHECK_THROWS_AS(todd_series_direct(p1, p1_base()), std::invalid_argument);
    }
}

TEST_CASE("direct Chern series") {
    SUBCASE("point model gives Macdonald coefficients") {
        const SpaceModel point = point_model(8);
        const PontSeries s = chern_series_direct(point, scalar_base(point, "3"));
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(s.term(n).coefficient(0) ==
                  YRationalFunction(binomial(Rational(static_cast<long>(n) + 2), n)));
    }
    SUBCASE("line model matches the Chern classes of projective spaces") {
        const SpaceModel p1 = p1_model(6);
        const PontSeries s = chern_series_direct(p1, genus_class_pn(1, ClassicalGenus::chern));
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(s.term(n) == genus_class_pn(n, ClassicalGenus::chern));
    }
    SUBCASE("zero class gives the unit series") {
        const SpaceModel p1 = p1_model(4);
        CHECK(chern_series_direct(p1, GradedClass(p1.module(1))) == unit_series(p1));
    }
}

TEST_CASE("Chern limit pipeline") {
    SUBCASE("line model agrees with the direct Chern series") {
        const SpaceModel p1 = p1_model(6);
        CHECK(chern_limit_series(p1, p1_base()) ==
              chern_series_direct(p1, genus_class_pn(1, ClassicalGenus::chern)));
    }
    SUBCASE("point model with Hodge polynomial 1+y gives Macdonald for chi = 2") {
        const SpaceModel point = point_model(7);
        const PontSeries s = chern_limit_series(point, scalar_base(point, "1+y"));
        for (unsigned n = 0; n <= 7; ++n)
            CHECK(s.term(n).coefficient(0) ==
                  YRationalFunction(Rational(static_cast<long>(n) + 1)));
    }
    SUBCASE("zero base gives the unit series") {
        const SpaceModel p1 = p1_model(4);
        CHECK(chern_limit_series(p1, GradedClass(p1.module(1))) == unit_series(p1));
    }
    SUBCASE("polynomial bases never hit a pole") {
        std::mt19937_64 rng(41);
        const SpaceModel p1 = p1_model(4);
        for (int i = 0; i < 40; ++i) {
            GradedClass base(p1.module(1));
            for (std::size_t b = 0; b < 2; ++b) {
                YPolynomial p;
                for (unsigned e = 0; e <= 2; ++e) {
                    const long v = static_cast<long>(rng() % 5) - 2;
                    if (v != 0) p += YPolynomial::monomial(Rational(v), e);
                }
                base.set_coefficient(b, YRationalFunction(p));
            }
            PontSeries s = chern_limit_series(p1, base);
            for (unsigned n = 0; n <= 4; ++n) CHECK(s.term(n).is_y_free());
        }
    }
}

TEST_CASE("L-class series") {
    SUBCASE("point with unit signature and Euler characteristic is all ones") {
        const SpaceModel point = point_model(8);
        const PontSeries s = l_series(point, scalar_base(point, "1"), 1);
        for (unsigned n = 0; n <= 8; ++n) CHECK(s.term(n).coefficient(0) == rf("1"));
    }
    SUBCASE("line model matches the L-classes of projective spaces") {
        const SpaceModel p1 = p1_model(6);
        const PontSeries s = l_series(p1, genus_class_pn(1, ClassicalGenus::l), 2);
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(s.term(n) == genus_class_pn(n, ClassicalGenus::l));
    }
    SUBCASE("zero class and zero characteristic give the unit series") {
        const SpaceModel p1 = p1_model(4);
        CHECK(l_series(p1, GradedClass(p1.module(1)), 0) == unit_series(p1));
    }
    SUBCASE("the scalar factor splits off") {
        const SpaceModel p1 = p1_model(6);
        const GradedClass l1 = genus_class_pn(1, ClassicalGenus::l);
        const PontSeries combined = l_series(p1, l1, 2);
        const PontSeries odd_only = l_series(p1, l1, 0);
        const PontSeries scalar_only = l_series(p1, GradedClass(p1.module(1)), 2);
        CHECK(combined == pont_mul(scalar_only, odd_only));
    }
    SUBCASE("odd truncation keeps half-integer exponents exact") {
        const SpaceModel point = point_model(9);
        CHECK_NOTHROW(l_series(point, scalar_base(point, "1"), 3));
    }
}

TEST_CASE("specialization verification") {
    SUBCASE("all targets pass on the builtin models") {
        const SpaceModel p1 = p1_model(6);
        const SpaceModel point = point_model(6);
        for (const auto target : {SpecializationTarget::todd, SpecializationTarget::chern,
                                  SpecializationTarget::l}) {
            CHECK(verify_specialization(p1, p1_base(), target).pass);
            CHECK(verify_specialization(point, scalar_base(point, "1+y"), target).pass);
        }
    }
    SUBCASE("a perturbed model is flagged with a located discrepancy") {
        const CheckResult result = check_specialization_pipelines(6);
        CHECK(result.pass);
    }
}

}  // TEST_SUITE
