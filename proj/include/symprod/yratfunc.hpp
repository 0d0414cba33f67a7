#ifndef SYMPROD_YRATFUNC_HPP
#define SYMPROD_YRATFUNC_HPP

#include <string>

#include "symprod/ypoly.hpp"

namespace symprod {

/// Element of Q(y) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1. Values are immutable in spirit; all operations return
/// new canonical values, so equality is structural.
class YRationalFunction {
public:
    YRationalFunction() : num_(), den_(Rational(1)) {}
    YRationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
    YRationalFunction(long c) : YRationalFunction(Rational(c)) {}         // NOLINT
    YRationalFunction(const YPolynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
    YRationalFunction(const YPolynomial& num, const YPolynomial& den);

    const YPolynomial& numerator() const { return num_; }
    const YPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    /// The value as a Rational; requires is_constant().
    Rational constant_value() const;

    YRationalFunction operator-() const;
    friend YRationalFunction operator+(const YRationalFunction& a, const YRationalFunction& b);
    friend YRationalFunction operator-(const YRationalFunction& a, const YRationalFunction& b);
    friend YRationalFunction operator*(const YRationalFunction& a, const YRationalFunction& b);
    friend YRationalFunction operator/(const YRationalFunction& a, const YRationalFunction& b);
    YRationalFunction& operator+=(const YRationalFunction& o) { return *this = *this + o; }
    YRationalFunction& operator-=(const YRationalFunction& o) { return *this = *this - o; }
    YRationalFunction& operator*=(const YRationalFunction& o) { return *this = *this * o; }
    YRationalFunction& operator/=(const YRationalFunction& o) { return *this = *this / o; }

    /// Exact value at y0; throws PoleError when the reduced denominator
    /// vanishes there.
    Rational evaluate(const Rational& y0) const;

    /// Cancels every common (y - y0) factor, then evaluates; throws
    /// PoleError only for a genuine pole.
    Rational limit(const Rational& y0) const;

    /// f(y) -> f(y^r), canonical.
    YRationalFunction substitute_power(unsigned r) const;

    /// f(y) -> f(-y), canonical.
    YRationalFunction negate_variable() const;

    YRationalFunction pow(long e) const;

    friend bool operator==(const YRationalFunction& a, const YRationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const YRationalFunction& a, const YRationalFunction& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    void reduce();
    YPolynomial num_;
    YPolynomial den_;
};

}  // namespace symprod

#endif
