#ifndef SYMPROD_POWER_SERIES_HPP
#define SYMPROD_POWER_SERIES_HPP

#include <vector>

#include "symprod/yratfunc.hpp"

namespace symprod {

/// Truncated univariate power series over Q(y): coefficients c_0..c_N of a
/// formal variable, everything beyond order N discarded. The variable is
/// whatever the caller says it is (a Chern root, or t).
class TruncatedPowerSeries {
public:
    explicit TruncatedPowerSeries(unsigned order) : c_(order + 1) {}
    TruncatedPowerSeries(unsigned order, const YRationalFunction& constant)
        : TruncatedPowerSeries(order) {
        c_[0] = constant;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const YRationalFunction& operator[](unsigned k) const { return c_.at(k); }
    YRationalFunction& operator[](unsigned k) { return c_.at(k); }

    bool is_zero() const;

    TruncatedPowerSeries operator-() const;
    friend TruncatedPowerSeries operator+(const TruncatedPowerSeries& a,
                                          const TruncatedPowerSeries& b);
    friend TruncatedPowerSeries operator-(const TruncatedPowerSeries& a,
                                          const TruncatedPowerSeries& b);
    friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a,
                                          const TruncatedPowerSeries& b);

    TruncatedPowerSeries scaled(const YRationalFunction& c) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedPowerSeries reciprocal() const;

    TruncatedPowerSeries pow(unsigned e) const;

    /// x -> c * x.
    TruncatedPowerSeries substitute_scaled(const YRationalFunction& c) const;

    /// exp of a series with zero constant term.
    TruncatedPowerSeries exp() const;

    friend bool operator==(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
        return !(a == b);
    }

private:
    std::vector<YRationalFunction> c_;
};

}  // namespace symprod

#endif
