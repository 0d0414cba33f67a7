#include "symprod/ypoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "symprod/errors.hpp"

namespace symprod {

YPolynomial::YPolynomial(const Rational& c) {
    if (!c.is_zero()) coeffs_.emplace(0u, c);
}

YPolynomial YPolynomial::monomial(const Rational& c, unsigned exp) {
    YPolynomial p;
    if (!c.is_zero()) p.coeffs_.emplace(exp, c);
    return p;
}

Rational YPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
}

Rational YPolynomial::coefficient(unsigned exp) const {
    const auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void YPolynomial::set(unsigned exp, const Rational& c) {
    if (c.is_zero())
        coeffs_.erase(exp);
    else
        coeffs_[exp] = c;
}

YPolynomial YPolynomial::operator-() const {
    YPolynomial r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) + c);
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
    for (const auto& [e, c] : o.coeffs_) set(e, coefficient(e) - c);
    return *this;
}

YPolynomial operator*(const YPolynomial& a, const YPolynomial& b) {
    YPolynomial r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.set(ea + eb, r.coefficient(ea + eb) + ca * cb);
    return r;
}

YPolynomial YPolynomial::scaled(const Rational& c) const {
    YPolynomial r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

YPolynomial YPolynomial::pow(unsigned e) const {
    YPolynomial acc(Rational(1));
    YPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

std::pair<YPolynomial, YPolynomial> YPolynomial::divmod(const YPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("YPolynomial: division by zero polynomial");
    YPolynomial quotient;
    YPolynomial rem = *this;
    const int dd = divisor.degree();
    const Rational dl = divisor.leading_coefficient();
    while (!rem.is_zero() && rem.degree() >= dd) {
        const unsigned shift = static_cast<unsigned>(rem.degree() - dd);
        const Rational factor = rem.leading_coefficient() / dl;
        quotient.set(shift, quotient.coefficient(shift) + factor);
        rem -= divisor * monomial(factor, shift);
    }
    return {quotient, rem};
}

Rational YPolynomial::evaluate(const Rational& y0) const {
    // Horner over the sparse support, highest exponent first.
    Rational acc(0);
    unsigned prev_exp = 0;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (first) {
            acc = it->second;
            prev_exp = it->first;
            first = false;
            continue;
        }
        acc = acc * y0.pow(static_cast<long>(prev_exp - it->first)) + it->second;
        prev_exp = it->first;
    }
    if (first) return Rational(0);
    return acc * y0.pow(static_cast<long>(prev_exp));
}

YPolynomial YPolynomial::substitute_power(unsigned r) const {
    if (r == 0) throw std::domain_error("substitute_power: r must be >= 1");
    if (r == 1) return *this;
    YPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e * r, c);
    return out;
}

YPolynomial YPolynomial::negate_variable() const {
    YPolynomial out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, e % 2 == 1 ? -c : c);
    return out;
}

YPolynomial YPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coefficient());
}

YPolynomial poly_gcd(YPolynomial a, YPolynomial b) {
    while (!b.is_zero()) {
        YPolynomial r = a.divmod(b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string YPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) mag = -c;
        }
        first = false;
        if (e == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << "y";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Recursive-descent parser for integer-coefficient expressions in y.
class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    YPolynomial parse() {
        YPolynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    YPolynomial expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        YPolynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    YPolynomial term() {
        YPolynomial acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    YPolynomial factor() {
        YPolynomial base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            base = base.pow(integer_literal("exponent"));
        }
        return base;
    }

    YPolynomial atom() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            YPolynomial inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'y') {
            ++pos_;
            return YPolynomial::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return YPolynomial(Rational(Integer(digits()), Integer(1)));
        }
        fail("expected a number, 'y', or '('");
    }

    unsigned integer_literal(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        return static_cast<unsigned>(std::stoul(digits()));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("polynomial '" + s_ + "': " + why + " at position " +
                         std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

YPolynomial YPolynomial::parse(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace symprod
