#include <doctest.h>

#include "symprod/errors.hpp"
#include "symprod/spaces.hpp"

using namespace symprod;

namespace {

YRationalFunction rf(const std::string& num, const std::string& den = "1") {
    return YRationalFunction(YPolynomial::parse(num), YPolynomial::parse(den));
}

GradedClass make_class(const ModuleSpecPtr& module,
                       const std::vector<std::pair<std::size_t, std::string>>& coeffs) {
    GradedClass c(module);
    for (const auto& [i, s] : coeffs) c.set_coefficient(i, rf(s));
    return c;
}

}  // namespace

TEST_SUITE("spaces") {

TEST_CASE("the Hirzebruch root series") {
    const TruncatedPowerSeries q = q_series(4, false);
    CHECK(q[0] == rf("1+y"));
    CHECK(q[1] == rf("1-y", "2"));
    CHECK(q[2] == rf("1+y", "12"));

    const TruncatedPowerSeries qn = q_series(4, true);
    CHECK(qn[0] == rf("1"));

    // Independent route for the normalized series:
    // x(1+y)/(1 - e^{-x(1+y)}) - xy, expanded directly.
    const YRationalFunction u = rf("1+y");
    TruncatedPowerSeries denom_over_x(4);  // (1 - e^{-xu}) / x
    YRationalFunction power(Rational(1));
    for (unsigned k = 0; k <= 4; ++k) {
        power = power * u;  // u^{k+1}
        Rational c(Integer(1), factorial(k + 1));
        if (k % 2 == 1) c = -c;
        denom_over_x[k] = power * YRationalFunction(c);
    }
    TruncatedPowerSeries direct = denom_over_x.reciprocal().scaled(u);
    direct[1] -= rf("y");
    CHECK(qn == direct);
}

TEST_CASE("Hirzebruch classes of projective spaces") {
    SUBCASE("a point has class 1") {
        CHECK(hirzebruch_class_pn(0) == make_class(pn_module(0), {{0, "1"}}));
    }
    SUBCASE("the projective line") {
        CHECK(hirzebruch_class_pn(1) ==
              make_class(pn_module(1), {{0, "1-y"}, {1, "1+y"}}));
    }
    SUBCASE("the projective plane") {
        CHECK(hirzebruch_class_pn(2) ==
              make_class(pn_module(2), {{0, "1-y+y^2"},
                                        {1, "3/2-3/2*y^2"},
                                        {2, "1+2*y+y^2"}}));
    }
    SUBCASE("the degree-zero coefficient is the Hodge polynomial") {
        for (unsigned n = 0; n <= 8; ++n) {
            YPolynomial expected;
            for (unsigned p = 0; p <= n; ++p) {
                Rational c(1);
                if (p % 2 == 1) c = -c;
                expected += YPolynomial::monomial(c, p);
            }
            CHECK(hirzebruch_class_pn(n).coefficient(0) == YRationalFunction(expected));
        }
    }
}

TEST_CASE("classical genus classes of projective spaces") {
    CHECK(genus_class_pn(1, ClassicalGenus::chern) ==
          make_class(pn_module(1), {{0, "2"}, {1, "1"}}));
    CHECK(genus_class_pn(1, ClassicalGenus::l) == make_class(pn_module(1), {{1, "1"}}));
    CHECK(genus_class_pn(2, ClassicalGenus::todd) ==
          make_class(pn_module(2), {{0, "1"}, {1, "3/2"}, {2, "1"}}));
    CHECK(genus_class_pn(2, ClassicalGenus::l) ==
          make_class(pn_module(2), {{0, "1"}, {2, "1"}}));
    CHECK(genus_class_pn(3, ClassicalGenus::l) ==
          make_class(pn_module(3), {{1, "4/3"}, {3, "1"}}));
    CHECK(genus_class_pn(4, ClassicalGenus::l) ==
          make_class(pn_module(4), {{0, "1"}, {2, "5/3"}, {4, "1"}}));
}

TEST_CASE("genus classes are specializations of the Hirzebruch class") {
    for (unsigned n = 0; n <= 8; ++n) {
        const GradedClass t_y = hirzebruch_class_pn(n);

        // y = 0 recovers the Todd class.
        CHECK(specialize_y(t_y, Rational(0), SpecializeMode::evaluate) ==
              genus_class_pn(n, ClassicalGenus::todd));

        // Psi_2 at y = 1 recovers the L-class.
        CHECK(adams(2, specialize_y(t_y, Rational(1), SpecializeMode::evaluate)) ==
              genus_class_pn(n, ClassicalGenus::l));

        // The normalized class at y = -1 recovers the Chern class.
        CHECK(specialize_y(normalize(t_y, NormalizationSign::plus), Rational(-1),
                           SpecializeMode::limit) == genus_class_pn(n, ClassicalGenus::chern));
    }
}

TEST_CASE("builtin models") {
    SUBCASE("point model validates and acts trivially") {
        const SpaceModel point = point_model(6);
        CHECK_NOTHROW(point.validate());
        GradedClass base(point.module(1));
        base.set_coefficient(0, rf("1-y"));
        // Adams on the point model only substitutes y.
        CHECK(adams(3, push_forward(point.diagonal(3), base)) ==
              make_class(point.module(3), {{0, "1-y^3"}}));
    }
    SUBCASE("line model validates") {
        CHECK_NOTHROW(p1_model(6).validate());
    }
    SUBCASE("line model diagonals") {
        const SpaceModel p1 = p1_model(5);
        for (unsigned r = 1; r <= 5; ++r) {
            const GradedClass b0 = GradedClass::basis_element(p1.module(1), 0);
            const GradedClass b1 = GradedClass::basis_element(p1.module(1), 1);
            CHECK(push_forward(p1.diagonal(r), b0) ==
                  GradedClass::basis_element(p1.module(r), 0));
            CHECK(push_forward(p1.diagonal(r), b1) ==
                  GradedClass::basis_element(p1.module(r), 1,
                                             rf(std::to_string(r))));
        }
    }
    SUBCASE("line model structure constants are binomial") {
        const SpaceModel p1 = p1_model(6);
        const GradedClass b2 = GradedClass::basis_element(p1.module(2), 2);
        const GradedClass b3 = GradedClass::basis_element(p1.module(3), 3);
        GradedClass expected(p1.module(5));
        expected.set_coefficient(5, rf("10"));  // C(5, 2)
        CHECK(p1.multiply(2, 3, b2, b3) == expected);
    }
}

}  // TEST_SUITE
