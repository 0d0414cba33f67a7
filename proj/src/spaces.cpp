#include "symprod/spaces.hpp"

#include <string>

namespace symprod {

namespace {

YRationalFunction inverse_factorial(unsigned k, bool negate_odd) {
    Rational r(Integer(1), factorial(k));
    if (negate_odd && k % 2 == 1) r = -r;
    return YRationalFunction(r);
}

// (1 - e^{-x}) / x, with constant term 1.
TruncatedPowerSeries one_minus_exp_neg_over_x(unsigned order) {
    TruncatedPowerSeries g(order);
    for (unsigned k = 0; k <= order; ++k) g[k] = inverse_factorial(k + 1, k % 2 == 1);
    return g;
}

}  // namespace

TruncatedPowerSeries q_series(unsigned order, bool normalized) {
    // e^{-x}
    TruncatedPowerSeries exp_neg(order);
    for (unsigned k = 0; k <= order; ++k) exp_neg[k] = inverse_factorial(k, true);

    const YRationalFunction y(YPolynomial::variable());
    TruncatedPowerSeries numerator = exp_neg.scaled(y);
    numerator[0] += YRationalFunction(Rational(1));  // 1 + y e^{-x}

    TruncatedPowerSeries q = numerator * one_minus_exp_neg_over_x(order).reciprocal();
    if (!normalized) return q;

    // Q_y(x (1+y)) / (1+y); exact in Q(y).
    const YRationalFunction one_plus_y =
        YRationalFunction(YPolynomial(Rational(1)) + YPolynomial::variable());
    return q.substitute_scaled(one_plus_y)
        .scaled(YRationalFunction(Rational(1)) / one_plus_y);
}

ModuleSpecPtr pn_module(unsigned n) {
    std::vector<GradedModuleSpec::BasisElement> basis;
    basis.reserve(n + 1);
    for (unsigned a = 0; a <= n; ++a) basis.push_back({"b" + std::to_string(a), a});
    return std::make_shared<GradedModuleSpec>(std::move(basis));
}

namespace {

// Cap a truncated cohomology expansion with the fundamental class: the
// coefficient of h^k becomes the b_{n-k} coordinate.
GradedClass cap_with_fundamental_class(unsigned n, const TruncatedPowerSeries& s) {
    GradedClass out(pn_module(n));
    for (unsigned k = 0; k <= n; ++k) out.set_coefficient(n - k, s[k]);
    return out;
}

}  // namespace

GradedClass hirzebruch_class_pn(unsigned n) {
    const YRationalFunction one_plus_y =
        YRationalFunction(YPolynomial(Rational(1)) + YPolynomial::variable());
    // The Euler sequence gives n+1 Chern roots equal to h and one trivial
    // factor Q_y(0) = 1 + y to divide out.
    const TruncatedPowerSeries total =
        q_series(n, false).pow(n + 1).scaled(YRationalFunction(Rational(1)) / one_plus_y);
    return cap_with_fundamental_class(n, total);
}

GradedClass genus_class_pn(unsigned n, ClassicalGenus genus) {
    TruncatedPowerSeries root_series(n);
    switch (genus) {
        case ClassicalGenus::todd:
            root_series = one_minus_exp_neg_over_x(n).reciprocal();
            break;
        case ClassicalGenus::l: {
            // x / tanh x = cosh x / (sinh x / x).
            TruncatedPowerSeries cosh_s(n);
            TruncatedPowerSeries sinh_over_x(n);
            for (unsigned k = 0; k <= n; ++k) {
                if (k % 2 == 0) {
                    cosh_s[k] = inverse_factorial(k, false);
                    sinh_over_x[k] = inverse_factorial(k + 1, false);
                }
            }
            root_series = cosh_s * sinh_over_x.reciprocal();
            break;
        }
        case ClassicalGenus::chern: {
            root_series = TruncatedPowerSeries(n, YRationalFunction(Rational(1)));
            if (n >= 1) root_series[1] = YRationalFunction(Rational(1));
            break;
        }
    }
    return cap_with_fundamental_class(n, root_series.pow(n + 1));
}

SpaceModel point_model(unsigned truncation) {
    std::vector<ModuleSpecPtr> modules;
    for (unsigned n = 0; n <= truncation; ++n) {
        modules.push_back(std::make_shared<GradedModuleSpec>(
            std::vector<GradedModuleSpec::BasisElement>{{"b0", 0u}}));
    }
    std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
    for (unsigned n = 0; n <= truncation; ++n) {
        for (unsigned m = 0; n + m <= truncation; ++m) {
            BilinearTensor mu;
            mu.add_entry(0, 0, 0, Rational(1));
            tensors.emplace(std::make_pair(n, m), std::move(mu));
        }
    }
    std::vector<DegreeMap> diagonals;
    for (unsigned r = 1; r <= truncation; ++r) {
        DegreeMap d(modules[1], modules[r]);
        d.add_entry(0, 0, Rational(1));
        diagonals.push_back(std::move(d));
    }
    return SpaceModel(truncation, std::move(modules), std::move(tensors), std::move(diagonals));
}

SpaceModel p1_model(unsigned truncation) {
    std::vector<ModuleSpecPtr> modules;
    for (unsigned n = 0; n <= truncation; ++n) modules.push_back(pn_module(n));

    std::map<std::pair<unsigned, unsigned>, BilinearTensor> tensors;
    for (unsigned n = 0; n <= truncation; ++n) {
        for (unsigned m = 0; n + m <= truncation; ++m) {
            BilinearTensor mu;
            for (unsigned a = 0; a <= n; ++a)
                for (unsigned b = 0; b <= m; ++b)
                    mu.add_entry(a, b, a + b,
                                 Rational(binomial(Rational(static_cast<long>(a + b)), a)));
            tensors.emplace(std::make_pair(n, m), std::move(mu));
        }
    }

    std::vector<DegreeMap> diagonals;
    for (unsigned r = 1; r <= truncation; ++r) {
        DegreeMap d(modules[1], modules[r]);
        d.add_entry(0, 0, Rational(1));
        d.add_entry(1, 1, Rational(static_cast<long>(r)));
        diagonals.push_back(std::move(d));
    }
    return SpaceModel(truncation, std::move(modules), std::move(tensors), std::move(diagonals));
}

}  // namespace symprod
