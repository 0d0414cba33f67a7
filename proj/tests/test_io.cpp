#include <doctest.h>

#include "symprod/errors.hpp"
#include "symprod/io.hpp"
#include "symprod/spaces.hpp"
#include "symprod/verify.hpp"

using namespace symprod;

TEST_SUITE("io") {

TEST_CASE("model documents round trip") {
    SUBCASE("point model") {
        const SpaceModel point = point_model(3);
        const std::string doc = serialize_model(point);
        const SpaceModel loaded = parse_model_document(doc);
        CHECK(loaded.truncation() == 3);
        CHECK(serialize_model(loaded) == doc);
        // Behavioral equality: the loaded model computes the same series.
        GradedClass base(loaded.module(1));
        base.set_coefficient(0, YRationalFunction(YPolynomial::parse("1+y")));
        GradedClass base0(point.module(1));
        base0.set_coefficient(0, YRationalFunction(YPolynomial::parse("1+y")));
        CHECK(symmetric_class_series(loaded, base) == symmetric_class_series(point, base0));
    }
    SUBCASE("line model") {
        const SpaceModel p1 = p1_model(4);
        const std::string doc = serialize_model(p1);
        const SpaceModel loaded = parse_model_document(doc);
        CHECK(serialize_model(loaded) == doc);
        CHECK(symmetric_class_series(loaded, negate_y(hirzebruch_class_pn(1))) ==
              symmetric_class_series(p1, negate_y(hirzebruch_class_pn(1))));
    }
    SUBCASE("random models") {
        Rng rng(404);
        for (int i = 0; i < 5; ++i) {
            const SpaceModel model = random_model(rng, 4);
            const std::string doc = serialize_model(model);
            const SpaceModel loaded = parse_model_document(doc);
            CHECK(serialize_model(loaded) == doc);
        }
    }
}

TEST_CASE("class documents round trip") {
    const SpaceModel p1 = p1_model(3);
    const GradedClass base = negate_y(hirzebruch_class_pn(1));
    const std::string doc = serialize_class(base, 1);
    const GradedClass loaded = parse_class_document(doc, p1);
    CHECK(loaded == base);
}

TEST_CASE("rational function documents") {
    const YRationalFunction f(YPolynomial::parse("1+y"), YPolynomial::parse("1-y+y^2"));
    CHECK(parse_yratfunc_document(serialize_yratfunc(f)) == f);
}

TEST_CASE("strictness of the document format") {
    const SpaceModel p1 = p1_model(2);

    SUBCASE("malformed text") {
        CHECK_THROWS_AS(parse_model_document("not json"), ParseError);
    }
    SUBCASE("unknown keys are rejected") {
        CHECK_THROWS_AS(
            parse_model_document(R"({"N":0,"modules":[[["b0",0]]],"tensors":[],"diagonals":[],"extra":1})"),
            ParseError);
    }
    SUBCASE("missing keys are rejected") {
        CHECK_THROWS_AS(parse_model_document(R"({"N":0,"modules":[[["b0",0]]],"tensors":[]})"),
                        ParseError);
    }
    SUBCASE("stored zero coefficients are rejected") {
        const std::string doc =
            R"({"module":1,"coeffs":[["b0",{"num":[[0,"0"]],"den":[[0,"1"]]}]]})";
        CHECK_THROWS_AS(parse_class_document(doc, p1), ParseError);
    }
    SUBCASE("unknown labels carry a distinct code") {
        const std::string doc =
            R"({"module":1,"coeffs":[["zz",{"num":[[0,"1"]],"den":[[0,"1"]]}]]})";
        try {
            parse_class_document(doc, p1);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.code() == "unknown-label");
        }
    }
    SUBCASE("non-canonical rationals in documents are accepted and canonicalized") {
        const std::string doc = R"({"num":[[0,"2/4"]],"den":[[0,"1"]]})";
        CHECK(parse_yratfunc_document(doc) ==
              YRationalFunction(Rational(1, 2)));
    }
}

TEST_CASE("invariant violations carry codes and locations") {
    SUBCASE("commutativity") {
        // mu_{0,1} and mu_{1,0} disagree.
        const std::string doc = R"({
            "N": 1,
            "modules": [[["b0", 0]], [["c0", 0]]],
            "tensors": [
                {"n": 0, "m": 0, "entries": [[0, 0, 0, "1"]]},
                {"n": 0, "m": 1, "entries": [[0, 0, 0, "1"]]},
                {"n": 1, "m": 0, "entries": [[0, 0, 0, "2"]]}
            ],
            "diagonals": [{"r": 1, "entries": [[0, 0, "1"]]}]
        })";
        try {
            parse_model_document(doc);
            CHECK(false);
        } catch (const ValidationError& e) {
            const bool unit_or_comm = e.code() == "commutativity" || e.code() == "unit";
            CHECK(unit_or_comm);
        }
    }
    SUBCASE("a diagonal connecting different half degrees") {
        const std::string doc = R"({
            "N": 1,
            "modules": [[["b0", 0]], [["c0", 0], ["c1", 1]]],
            "tensors": [
                {"n": 0, "m": 0, "entries": [[0, 0, 0, "1"]]},
                {"n": 0, "m": 1, "entries": [[0, 0, 0, "1"], [0, 1, 1, "1"]]},
                {"n": 1, "m": 0, "entries": [[0, 0, 0, "1"], [1, 0, 1, "1"]]}
            ],
            "diagonals": [{"r": 1, "entries": [[0, 0, "1"], [0, 1, "1"]]}]
        })";
        try {
            parse_model_document(doc);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.code() == "degree");
        }
    }
    SUBCASE("tensor entries out of range") {
        const std::string doc = R"({
            "N": 0,
            "modules": [[["b0", 0]]],
            "tensors": [{"n": 0, "m": 0, "entries": [[0, 0, 5, "1"]]}],
            "diagonals": []
        })";
        try {
            parse_model_document(doc);
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.code() == "index-range");
        }
    }
}

TEST_CASE("series serialization is deterministic") {
    const SpaceModel p1 = p1_model(3);
    const PontSeries s = symmetric_class_series(p1, negate_y(hirzebruch_class_pn(1)));
    CHECK(serialize_pont_series(s) == serialize_pont_series(s));
    const ScalarSeries d = degree_series(s);
    CHECK(serialize_scalar_series(d) == serialize_scalar_series(d));
}

}  // TEST_SUITE
