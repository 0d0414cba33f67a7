#ifndef SYMPROD_YPOLY_HPP
#define SYMPROD_YPOLY_HPP

#include <map>
#include <string>
#include <utility>

#include "symprod/rational.hpp"

namespace symprod {

/// Univariate polynomial in y over Rational, sparse, no stored zeros.
/// degree() is -1 for the zero polynomial.
class YPolynomial {
public:
    YPolynomial() = default;
    YPolynomial(const Rational& c);  // NOLINT: constant polynomial
    YPolynomial(long c) : YPolynomial(Rational(c)) {}

    static YPolynomial monomial(const Rational& c, unsigned exp);
    static YPolynomial variable() { return monomial(Rational(1), 1); }

    /// Integer-coefficient expressions in y with +, -, *, ^ and parentheses.
    static YPolynomial parse(const std::string& text);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || coeffs_.rbegin()->first == 0; }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }
    Rational leading_coefficient() const;
    Rational coefficient(unsigned exp) const;
    const std::map<unsigned, Rational>& terms() const { return coeffs_; }

    YPolynomial operator-() const;
    YPolynomial& operator+=(const YPolynomial& o);
    YPolynomial& operator-=(const YPolynomial& o);
    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(const YPolynomial& a, const YPolynomial& b);

    YPolynomial scaled(const Rational& c) const;
    YPolynomial pow(unsigned e) const;

    /// Quotient and remainder with deg(rem) < deg(divisor); divisor != 0.
    std::pair<YPolynomial, YPolynomial> divmod(const YPolynomial& divisor) const;

    Rational evaluate(const Rational& y0) const;

    /// y -> y^r.
    YPolynomial substitute_power(unsigned r) const;

    /// y -> -y.
    YPolynomial negate_variable() const;

    YPolynomial monic() const;

    friend bool operator==(const YPolynomial& a, const YPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const YPolynomial& a, const YPolynomial& b) { return !(a == b); }

    std::string str() const;

private:
    void set(unsigned exp, const Rational& c);
    std::map<unsigned, Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
YPolynomial poly_gcd(YPolynomial a, YPolynomial b);

}  // namespace symprod

#endif
