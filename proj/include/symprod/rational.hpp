#ifndef SYMPROD_RATIONAL_HPP
#define SYMPROD_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace symprod {

using Integer = mpz_class;

Integer factorial(unsigned n);
Integer int_pow(const Integer& base, unsigned exp);

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den >= 1, zero stored as 0/1. Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const Integer& n, const Integer& d);
    explicit Rational(const mpq_class& q);

    // Accepts "p", "-p", "p/q"; q may carry a sign and is canonicalized away.
    static Rational parse(const std::string& text);

    const Integer numerator() const { return q_.get_num(); }
    const Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    std::string str() const;

private:
    mpq_class q_;  // kept canonical
};

/// Generalized binomial coefficient C(e, k) = e(e-1)...(e-k+1)/k!, exact.
Rational binomial(const Rational& e, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace symprod

#endif
