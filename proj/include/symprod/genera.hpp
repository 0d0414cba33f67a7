#ifndef SYMPROD_GENERA_HPP
#define SYMPROD_GENERA_HPP

#include "symprod/pontrjagin.hpp"
#include "symprod/power_series.hpp"

namespace symprod {

/// Degree-zero generating series in t with coefficients in Q(y).
using ScalarSeries = TruncatedPowerSeries;

/// Truncated (1 + sign*t^step)^e for rational e, via generalized binomial
/// coefficients.
ScalarSeries binomial_series(const Rational& exponent, int sign, unsigned step, unsigned order);

/// exp(sum_{r=1..N} g(y^r) t^r / r), exact. g is read as the Hodge
/// polynomial of the coefficient object in the same -y convention as the
/// class-level series.
ScalarSeries chi_series(const YPolynomial& g, unsigned order);

/// Twisted signature series (1+t)^{(sigma-chi)/2} / (1-t)^{(sigma+chi)/2}.
/// Requires sigma = chi (mod 2). The closed form is recomputed internally
/// through the exponential form (sigma on odd r, chi on even r) and the two
/// must agree exactly.
ScalarSeries zagier_signature_series(long sigma, long chi, unsigned order);

/// Binomial expansion of (1-t)^{-chi_a}.
ScalarSeries arithmetic_genus_series(long chi_a, unsigned order);

/// Half-degree-zero coefficient of each term (summed over all half-degree-0
/// basis elements).
ScalarSeries degree_series(const PontSeries& s);

}  // namespace symprod

#endif
