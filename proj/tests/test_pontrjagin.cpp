#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "symprod/errors.hpp"
#include "symprod/spaces.hpp"
#include "symprod/verify.hpp"

using namespace symprod;

namespace {

YRationalFunction rf(const std::string& s) { return YRationalFunction(YPolynomial::parse(s)); }

// Scalar series on the point model with all coefficients equal to value.
PontSeries constant_point_series(const SpaceModel& point, const YRationalFunction& value) {
    PontSeries s(point);
    for (unsigned n = 0; n <= point.truncation(); ++n)
        s.set_term(n, GradedClass::basis_element(point.module(n), 0, value));
    return s;
}

YRationalFunction point_coefficient(const PontSeries& s, unsigned n) {
    return s.term(n).coefficient(0);
}

// Brute-force cycle-type census of the symmetric group via all n!
// permutations; the oracle for enumerate_cycle_types.
std::vector<std::pair<std::vector<unsigned>, unsigned long>> cycle_census(unsigned n) {
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<std::pair<std::vector<unsigned>, unsigned long>> census;
    do {
        std::vector<unsigned> mult(n, 0u);
        std::vector<bool> seen(n, false);
        for (unsigned start = 0; start < n; ++start) {
            if (seen[start]) continue;
            unsigned len = 0;
            for (unsigned j = start; !seen[j]; j = perm[j]) {
                seen[j] = true;
                ++len;
            }
            mult[len - 1] += 1;
        }
        bool found = false;
        for (auto& [m, count] : census) {
            if (m == mult) {
                ++count;
                found = true;
                break;
            }
        }
        if (!found) census.emplace_back(mult, 1UL);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(census.begin(), census.end());
    return census;
}

}  // namespace

TEST_SUITE("pontrjagin") {

TEST_CASE("pontrjagin product") {
    SUBCASE("unit law") {
        const SpaceModel p1 = p1_model(4);
        std::mt19937_64 rng(3);
        Rng vrng(3);
        PontSeries s(p1);
        for (unsigned n = 0; n <= 4; ++n) s.set_term(n, random_class(vrng, p1, n));
        CHECK(pont_mul(unit_series(p1), s) == s);
        CHECK(pont_mul(s, unit_series(p1)) == s);
    }
    SUBCASE("scalar Cauchy product on the point model") {
        const SpaceModel point = point_model(6);
        const PontSeries ones = constant_point_series(point, rf("1"));
        const PontSeries square = pont_mul(ones, ones);
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(point_coefficient(square, n) == rf(std::to_string(n + 1)));
    }
    SUBCASE("divided powers on the line model") {
        const SpaceModel p1 = p1_model(4);
        PontSeries s(p1);
        s.set_term(1, GradedClass::basis_element(p1.module(1), 1));  // b1 t
        const PontSeries sq = pont_mul(s, s);
        GradedClass expected(p1.module(2));
        expected.set_coefficient(2, rf("2"));
        CHECK(sq.term(2) == expected);
        CHECK(sq.term(1).is_zero());
        CHECK(sq.term(3).is_zero());
    }
}

TEST_CASE("pont_exp") {
    const SpaceModel point = point_model(8);

    SUBCASE("exp of zero is the unit series") {
        CHECK(pont_exp(PontSeries(point)) == unit_series(point));
    }
    SUBCASE("nonzero constant term is rejected") {
        CHECK_THROWS_AS(pont_exp(unit_series(point)), std::domain_error);
    }
    SUBCASE("scalar exponential c^n / n!") {
        PontSeries a(point);
        a.set_term(1, GradedClass::basis_element(point.module(1), 0, rf("3")));
        const PontSeries e = pont_exp(a);
        for (unsigned n = 0; n <= 8; ++n) {
            const Rational expected = Rational(3).pow(n) / Rational(factorial(n), Integer(1));
            CHECK(point_coefficient(e, n) == YRationalFunction(expected));
        }
    }
    SUBCASE("exp of sum chi t^r / r is the binomial series (1-t)^{-chi}") {
        const long chi = 3;
        PontSeries a(point);
        for (unsigned r = 1; r <= 8; ++r)
            a.set_term(r, GradedClass::basis_element(
                              point.module(r), 0,
                              YRationalFunction(Rational(chi, static_cast<long>(r)))));
        const PontSeries e = pont_exp(a);
        for (unsigned n = 0; n <= 8; ++n) {
            const Rational expected = binomial(Rational(static_cast<long>(n) + chi - 1), n);
            CHECK(point_coefficient(e, n) == YRationalFunction(expected));
        }
    }
}

TEST_CASE("pont_log") {
    const SpaceModel point = point_model(7);

    SUBCASE("log of the unit series is zero") {
        PontSeries zero(point);
        CHECK(pont_log(unit_series(point)) == zero);
    }
    SUBCASE("non-unit constant term is rejected") {
        CHECK_THROWS_AS(pont_log(PontSeries(point)), std::domain_error);
    }
    SUBCASE("log of the geometric series is sum t^r / r") {
        const PontSeries geometric = constant_point_series(point, rf("1"));
        const PontSeries logged = pont_log(geometric);
        CHECK(point_coefficient(logged, 0).is_zero());
        for (unsigned r = 1; r <= 7; ++r)
            CHECK(point_coefficient(logged, r) ==
                  YRationalFunction(Rational(1, static_cast<long>(r))));
    }
    SUBCASE("round trips on random series") {
        Rng rng(99);
        for (int i = 0; i < 30; ++i) {
            const SpaceModel model = random_model(rng, 3);
            PontSeries a(model);
            for (unsigned n = 1; n <= 3; ++n) a.set_term(n, random_class(rng, model, n));
            CHECK(pont_log(pont_exp(a)) == a);
            PontSeries u = a;
            u.set_term(0, model.unit_class());
            CHECK(pont_exp(pont_log(u)) == u);
        }
    }
}

TEST_CASE("cycle type enumeration") {
    SUBCASE("n = 0 has the single empty type") {
        const auto types = enumerate_cycle_types(0);
        REQUIRE(types.size() == 1);
        CHECK(types[0].first.multiplicities.empty());
        CHECK(types[0].second == Integer(1));
    }
    SUBCASE("n = 3 census") {
        const auto types = enumerate_cycle_types(3);
        REQUIRE(types.size() == 3);
        // Lexicographic in (k_1, k_2, k_3): (0,0,1), (1,1,0), (3,0,0).
        CHECK(types[0].first.multiplicities == std::vector<unsigned>{0, 0, 1});
        CHECK(types[0].second == Integer(2));
        CHECK(types[1].first.multiplicities == std::vector<unsigned>{1, 1, 0});
        CHECK(types[1].second == Integer(3));
        CHECK(types[2].first.multiplicities == std::vector<unsigned>{3, 0, 0});
        CHECK(types[2].second == Integer(1));
    }
    SUBCASE("two 2-cycles in the symmetric group on 4 letters") {
        const auto types = enumerate_cycle_types(4);
        for (const auto& [type, count] : types) {
            if (type.multiplicities == std::vector<unsigned>{0, 2, 0, 0}) {
                CHECK(count == Integer(3));
                return;
            }
        }
        CHECK(false);
    }
    SUBCASE("counts sum to n!") {
        for (unsigned n = 0; n <= 9; ++n) {
            Integer total(0);
            for (const auto& [type, count] : enumerate_cycle_types(n)) {
                (void)type;
                total += count;
            }
            CHECK(total == factorial(n));
        }
    }
    SUBCASE("matches the brute-force permutation census") {
        for (unsigned n = 1; n <= 5; ++n) {
            const auto expected = cycle_census(n);
            const auto got = enumerate_cycle_types(n);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].first.multiplicities == expected[i].first);
                CHECK(got[i].second == Integer(static_cast<long>(expected[i].second)));
            }
        }
    }
}

TEST_CASE("symmetric class series on the point model") {
    const SpaceModel point = point_model(8);

    SUBCASE("integer Euler characteristic gives the Macdonald coefficients") {
        GradedClass base(point.module(1));
        base.set_coefficient(0, rf("4"));
        const PontSeries s = symmetric_class_series(point, base);
        for (unsigned n = 0; n <= 8; ++n)
            CHECK(point_coefficient(s, n) ==
                  YRationalFunction(binomial(Rational(static_cast<long>(n) + 3), n)));
    }
    SUBCASE("Hodge polynomial 1+y expands 1/((1-t)(1-yt))") {
        GradedClass base(point.module(1));
        base.set_coefficient(0, rf("1+y"));
        const PontSeries s = symmetric_class_series(point, base);
        for (unsigned n = 0; n <= 8; ++n) {
            YPolynomial expected;
            for (unsigned p = 0; p <= n; ++p) expected += YPolynomial::monomial(Rational(1), p);
            CHECK(point_coefficient(s, n) == YRationalFunction(expected));
        }
    }
}

TEST_CASE("partition sum oracle") {
    SUBCASE("terms 0 and 1 are the unit and the base") {
        const SpaceModel p1 = p1_model(3);
        const GradedClass base = negate_y(hirzebruch_class_pn(1));
        const PontSeries s = partition_sum_series(p1, base);
        CHECK(s.term(0) == p1.unit_class());
        CHECK(s.term(1) == base);
    }
    SUBCASE("macdonald coefficients on the point model") {
        const SpaceModel point = point_model(6);
        GradedClass base(point.module(1));
        base.set_coefficient(0, rf("2"));
        const PontSeries s = partition_sum_series(point, base);
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(point_coefficient(s, n) == rf(std::to_string(n + 1)));
    }
    SUBCASE("agrees with the exponential route everywhere") {
        Rng rng(2024);
        for (int i = 0; i < 12; ++i) {
            const SpaceModel model = random_model(rng, 5);
            const GradedClass base = random_class(rng, model, 1);
            CHECK(partition_sum_series(model, base) == symmetric_class_series(model, base));
        }
    }
}

TEST_CASE("model validation catches broken structures") {
    const auto one_module = [] {
        return std::make_shared<GradedModuleSpec>(
            std::vector<GradedModuleSpec::BasisElement>{{"b0", 0u}});
    };

    SUBCASE("valid builtin models pass") {
        CHECK_NOTHROW(point_model(5).validate());
        CHECK_NOTHROW(p1_model(5).validate());
    }
    SUBCASE("missing unit slot") {
        std::vector<ModuleSpecPtr> modules{std::make_shared<GradedModuleSpec>(
            std::vector<GradedModuleSpec::BasisElement>{{"b0", 1u}})};
        CHECK_THROWS_AS(SpaceModel(0, std::move(modules), {}, {}), ValidationError);
    }
    SUBCASE("broken unit law") {
        std::vector<ModuleSpecPtr> modules{one_module()};
        std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
        BilinearTensor mu;
        mu.add_entry(0, 0, 0, Rational(2));  // 1*1 = 2
        tensors.emplace(std::make_pair(0u, 0u), std::move(mu));
        const SpaceModel model(0, std::move(modules), std::move(tensors), {});
        try {
            model.validate();
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.code() == "unit");
        }
    }
    SUBCASE("commutativity violations name the tensor and pair") {
        // Two modules of rank 1; mu_{0,1} differs from mu_{1,0}.
        std::vector<ModuleSpecPtr> modules{one_module(), one_module()};
        std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
        BilinearTensor unit00;
        unit00.add_entry(0, 0, 0, Rational(1));
        tensors.emplace(std::make_pair(0u, 0u), std::move(unit00));
        BilinearTensor left;
        left.add_entry(0, 0, 0, Rational(1));
        tensors.emplace(std::make_pair(0u, 1u), std::move(left));
        BilinearTensor right;
        right.add_entry(0, 0, 0, Rational(2));
        tensors.emplace(std::make_pair(1u, 0u), std::move(right));
        std::vector<DegreeMap> diagonals{DegreeMap::identity(modules[1])};
        const SpaceModel model(1, std::move(modules), std::move(tensors), std::move(diagonals));
        try {
            model.validate();
            CHECK(false);
        } catch (const ValidationError& e) {
            const std::string what = e.what();
            const bool unit_or_commutativity = e.code() == "commutativity" || e.code() == "unit";
            CHECK(unit_or_commutativity);
        }
    }
    SUBCASE("degree violations are caught") {
        auto m0 = one_module();
        auto m1 = std::make_shared<GradedModuleSpec>(
            std::vector<GradedModuleSpec::BasisElement>{{"b0", 0u}, {"b1", 1u}});
        std::vector<ModuleSpecPtr> modules{m0, m1};
        std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
        BilinearTensor unit00;
        unit00.add_entry(0, 0, 0, Rational(1));
        tensors.emplace(std::make_pair(0u, 0u), std::move(unit00));
        BilinearTensor bad;  // unit (x) b0 -> b1 raises the half degree
        bad.add_entry(0, 0, 1, Rational(1));
        tensors.emplace(std::make_pair(0u, 1u), std::move(bad));
        std::vector<DegreeMap> diagonals{DegreeMap::identity(m1)};
        const SpaceModel model(1, std::move(modules), std::move(tensors), std::move(diagonals));
        try {
            model.validate();
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.code() == "degree");
        }
    }
    SUBCASE("d^1 must be the identity") {
        const SpaceModel clean = p1_model(2);
        std::vector<ModuleSpecPtr> modules = clean.modules();
        std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned m = 0; n + m <= 2; ++m) {
                BilinearTensor mu;
                for (const auto& e : clean.tensor(n, m).entries())
                    mu.add_entry(e.left, e.right, e.out, e.value);
                tensors.emplace(std::make_pair(n, m), std::move(mu));
            }
        std::vector<DegreeMap> diagonals;
        DegreeMap d1(modules[1], modules[1]);
        d1.add_entry(0, 0, Rational(1));
        d1.add_entry(1, 1, Rational(3));  // not the identity
        diagonals.push_back(std::move(d1));
        DegreeMap d2(modules[1], modules[2]);
        d2.add_entry(0, 0, Rational(1));
        d2.add_entry(1, 1, Rational(2));
        diagonals.push_back(std::move(d2));
        const SpaceModel model(2, std::move(modules), std::move(tensors), std::move(diagonals));
        try {
            model.validate();
            CHECK(false);
        } catch (const ValidationError& e) {
            CHECK(e.code() == "d1-identity");
        }
    }
}

}  // TEST_SUITE
