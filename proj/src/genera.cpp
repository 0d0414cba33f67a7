#include "symprod/genera.hpp"

#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

ScalarSeries binomial_series(const Rational& exponent, int sign, unsigned step, unsigned order) {
    if (step == 0) throw std::domain_error("binomial_series: step must be >= 1");
    ScalarSeries s(order);
    for (unsigned k = 0; step * k <= order; ++k) {
        Rational c = binomial(exponent, k);
        if (sign < 0 && k % 2 == 1) c = -c;
        s[step * k] = YRationalFunction(c);
    }
    return s;
}

ScalarSeries chi_series(const YPolynomial& g, unsigned order) {
    ScalarSeries inner(order);
    for (unsigned r = 1; r <= order; ++r)
        inner[r] = YRationalFunction(g.substitute_power(r)) *
                   YRationalFunction(Rational(1, static_cast<long>(r)));
    return inner.exp();
}

ScalarSeries zagier_signature_series(long sigma, long chi, unsigned order) {
    if (((sigma - chi) % 2 + 2) % 2 != 0)
        throw ParityError("zagier_signature_series: sigma = " + std::to_string(sigma) +
                          " and chi = " + std::to_string(chi) + " differ in parity");
    const Rational plus_exp((sigma - chi) / 2);
    const Rational minus_exp(Rational(-(sigma + chi), 2));
    const ScalarSeries closed = binomial_series(plus_exp, +1, 1, order) *
                                binomial_series(minus_exp, -1, 1, order);

    // Cross-check against exp(sum_r c_r t^r / r) with c_r = sigma for odd r
    // and chi for even r; the two expressions agree as an identity of formal
    // series, so a mismatch means a broken build.
    ScalarSeries inner(order);
    for (unsigned r = 1; r <= order; ++r)
        inner[r] = YRationalFunction(Rational(r % 2 == 1 ? sigma : chi, static_cast<long>(r)));
    if (inner.exp() != closed)
        throw std::logic_error("zagier_signature_series: closed and exponential forms disagree");
    return closed;
}

ScalarSeries arithmetic_genus_series(long chi_a, unsigned order) {
    return binomial_series(Rational(-chi_a), -1, 1, order);
}

ScalarSeries degree_series(const PontSeries& s) {
    ScalarSeries out(s.truncation());
    for (unsigned n = 0; n <= s.truncation(); ++n) {
        const auto& module = *s.model().module(n);
        YRationalFunction acc;
        for (const auto& [i, v] : s.term(n).coefficients())
            if (module.half_degree(i) == 0) acc += v;
        out[n] = acc;
    }
    return out;
}

}  // namespace symprod
