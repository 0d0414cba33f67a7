#include "symprod/yratfunc.hpp"

#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

YRationalFunction::YRationalFunction(const YPolynomial& num, const YPolynomial& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("YRationalFunction: zero denominator");
    reduce();
}

void YRationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = YPolynomial(Rational(1));
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        const YPolynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const Rational inv = Rational(1) / lc;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational YRationalFunction::constant_value() const {
    if (!is_constant()) throw std::domain_error("YRationalFunction: not a constant");
    if (num_.is_zero()) return Rational(0);
    return num_.coefficient(0) / den_.coefficient(0);
}

YRationalFunction YRationalFunction::operator-() const {
    YRationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

YRationalFunction operator+(const YRationalFunction& a, const YRationalFunction& b) {
    return YRationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

YRationalFunction operator-(const YRationalFunction& a, const YRationalFunction& b) {
    return YRationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

YRationalFunction operator*(const YRationalFunction& a, const YRationalFunction& b) {
    return YRationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

YRationalFunction operator/(const YRationalFunction& a, const YRationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("YRationalFunction: division by zero");
    return YRationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

Rational YRationalFunction::evaluate(const Rational& y0) const {
    const Rational dv = den_.evaluate(y0);
    if (dv.is_zero()) throw PoleError("pole at y = " + y0.str());
    return num_.evaluate(y0) / dv;
}

Rational YRationalFunction::limit(const Rational& y0) const {
    YPolynomial n = num_;
    YPolynomial d = den_;
    // (y - y0) divides both exactly as long as both vanish at y0.
    const YPolynomial linear = YPolynomial::variable() - YPolynomial(y0);
    while (!n.is_zero() && n.evaluate(y0).is_zero() && d.evaluate(y0).is_zero()) {
        n = n.divmod(linear).first;
        d = d.divmod(linear).first;
    }
    const Rational dv = d.evaluate(y0);
    if (dv.is_zero()) throw PoleError("non-removable pole at y = " + y0.str());
    return n.evaluate(y0) / dv;
}

YRationalFunction YRationalFunction::substitute_power(unsigned r) const {
    return YRationalFunction(num_.substitute_power(r), den_.substitute_power(r));
}

YRationalFunction YRationalFunction::negate_variable() const {
    return YRationalFunction(num_.negate_variable(), den_.negate_variable());
}

YRationalFunction YRationalFunction::pow(long e) const {
    if (e == 0) return YRationalFunction(Rational(1));
    if (is_zero() && e < 0)
        throw std::domain_error("YRationalFunction: 0 to a negative power");
    const unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
    if (e < 0) return YRationalFunction(den_.pow(ae), num_.pow(ae));
    return YRationalFunction(num_.pow(ae), den_.pow(ae));
}

std::string YRationalFunction::str() const {
    // A constant canonical denominator is monic, hence exactly 1.
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace symprod
