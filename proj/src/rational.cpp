#include "symprod/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer int_pow(const Integer& base, unsigned exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
    const auto bad = [&]() -> ParseError {
        return ParseError("not a rational number: '" + text + "'");
    };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const std::string num_s = text.substr(0, slash);
    const std::string den_s = slash == std::string::npos ? "1" : text.substr(slash + 1);
    const auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(num_s) || !is_int(den_s)) throw bad();
    Integer n, d;
    if (n.set_str(num_s, 10) != 0 || d.set_str(den_s, 10) != 0) throw bad();
    if (sgn(d) == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: 0 to a negative power");
    const unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
    Rational base = e < 0 ? Rational(1) / *this : *this;
    return Rational(int_pow(base.numerator(), ae), int_pow(base.denominator(), ae));
}

std::string Rational::str() const { return q_.get_str(); }

Rational binomial(const Rational& e, unsigned k) {
    Rational acc(1);
    for (unsigned i = 0; i < k; ++i) acc *= (e - Rational(static_cast<long>(i)));
    return acc / Rational(factorial(k), Integer(1));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace symprod
