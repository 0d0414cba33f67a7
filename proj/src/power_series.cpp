#include "symprod/power_series.hpp"

#include <stdexcept>

namespace symprod {

bool TruncatedPowerSeries::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

TruncatedPowerSeries TruncatedPowerSeries::operator-() const {
    TruncatedPowerSeries r(order());
    for (unsigned k = 0; k <= order(); ++k) r.c_[k] = -c_[k];
    return r;
}

static void require_same_order(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("TruncatedPowerSeries: mismatched truncation orders");
}

TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    require_same_order(a, b);
    TruncatedPowerSeries r(a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
}

TruncatedPowerSeries operator-(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    require_same_order(a, b);
    TruncatedPowerSeries r(a.order());
    for (unsigned k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
    require_same_order(a, b);
    TruncatedPowerSeries r(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= a.order(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

TruncatedPowerSeries TruncatedPowerSeries::scaled(const YRationalFunction& c) const {
    TruncatedPowerSeries r(order());
    for (unsigned k = 0; k <= order(); ++k) r.c_[k] = c_[k] * c;
    return r;
}

TruncatedPowerSeries TruncatedPowerSeries::reciprocal() const {
    if (c_[0].is_zero())
        throw std::domain_error("TruncatedPowerSeries: reciprocal needs a unit constant term");
    TruncatedPowerSeries r(order());
    const YRationalFunction inv0 = YRationalFunction(Rational(1)) / c_[0];
    r.c_[0] = inv0;
    for (unsigned n = 1; n <= order(); ++n) {
        YRationalFunction acc;  // sum_{k=1..n} c_k * r_{n-k}
        for (unsigned k = 1; k <= n; ++k) {
            if (c_[k].is_zero()) continue;
            acc += c_[k] * r.c_[n - k];
        }
        r.c_[n] = -(acc * inv0);
    }
    return r;
}

TruncatedPowerSeries TruncatedPowerSeries::pow(unsigned e) const {
    TruncatedPowerSeries acc(order(), YRationalFunction(Rational(1)));
    TruncatedPowerSeries base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

TruncatedPowerSeries TruncatedPowerSeries::substitute_scaled(const YRationalFunction& c) const {
    TruncatedPowerSeries r(order());
    YRationalFunction p(Rational(1));
    for (unsigned k = 0; k <= order(); ++k) {
        r.c_[k] = c_[k] * p;
        p *= c;
    }
    return r;
}

TruncatedPowerSeries TruncatedPowerSeries::exp() const {
    if (!c_[0].is_zero())
        throw std::domain_error("TruncatedPowerSeries: exp needs a zero constant term");
    // Horner: exp(a) = 1 + a(1 + a/2 (1 + a/3 (...))).
    TruncatedPowerSeries r(order(), YRationalFunction(Rational(1)));
    for (unsigned k = order(); k >= 1; --k) {
        r = (*this * r).scaled(YRationalFunction(Rational(1, static_cast<long>(k))));
        r.c_[0] += YRationalFunction(Rational(1));
    }
    return r;
}

}  // namespace symprod
