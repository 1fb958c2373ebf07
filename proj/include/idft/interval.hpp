#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace idft {

/// Closed real interval [lo, hi]. Immutable value type; a degenerate
/// interval (lo == hi) represents an ordinary real number.
class interval {
public:
    interval() : lo_(0.0), hi_(0.0) {}

    explicit interval(double point) : lo_(point), hi_(point) {
        if (!std::isfinite(point))
            throw std::invalid_argument("interval: endpoint is not finite");
    }

    interval(double lo, double hi) : lo_(lo), hi_(hi) {
        // Rejects lo > hi loudly instead of swapping; also catches NaN.
        if (!(lo <= hi))
            throw std::invalid_argument("interval: requires lo <= hi, got [" +
                                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    double mid() const { return 0.5 * (lo_ + hi_); }
    double rad() const { return 0.5 * (hi_ - lo_); }
    double width() const { return hi_ - lo_; }

    bool contains(double p) const { return lo_ <= p && p <= hi_; }
    bool contains(const interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool is_degenerate() const { return lo_ == hi_; }

    bool operator==(const interval& other) const { return lo_ == other.lo_ && hi_ == other.hi_; }
    bool operator!=(const interval& other) const { return !(*this == other); }

private:
    double lo_;
    double hi_;
};

using interval_vector = std::vector<interval>;

inline interval operator-(const interval& x) { return {-x.hi(), -x.lo()}; }

// [a,b] + [c,d] = [a+c, b+d]
inline interval operator+(const interval& x, const interval& y) {
    return {x.lo() + y.lo(), x.hi() + y.hi()};
}

// [a,b] - [c,d] = [a-d, b-c]
inline interval operator-(const interval& x, const interval& y) {
    return {x.lo() - y.hi(), x.hi() - y.lo()};
}

// [a,b] * [c,d] = [min(ac,ad,bc,bd), max(ac,ad,bc,bd)]
inline interval operator*(const interval& x, const interval& y) {
    const double p1 = x.lo() * y.lo();
    const double p2 = x.lo() * y.hi();
    const double p3 = x.hi() * y.lo();
    const double p4 = x.hi() * y.hi();
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

/// Scaling by a real: exact range of {c*x : x in [lo,hi]}.
inline interval operator*(double c, const interval& x) {
    return c >= 0.0 ? interval{c * x.lo(), c * x.hi()} : interval{c * x.hi(), c * x.lo()};
}

inline interval operator*(const interval& x, double c) { return c * x; }

// [a,b] / [c,d] = [a,b] * [1/d, 1/c], defined only for 0 not in [c,d].
// Evaluated as endpoint quotients, which is the same range but exact for
// degenerate operands.
inline interval operator/(const interval& x, const interval& y) {
    if (y.contains(0.0))
        throw std::domain_error("interval division: divisor contains zero");
    const double q1 = x.lo() / y.lo();
    const double q2 = x.lo() / y.hi();
    const double q3 = x.hi() / y.lo();
    const double q4 = x.hi() / y.hi();
    return {std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4})};
}

inline interval& operator+=(interval& x, const interval& y) { return x = x + y; }
inline interval& operator-=(interval& x, const interval& y) { return x = x - y; }
inline interval& operator*=(interval& x, const interval& y) { return x = x * y; }

/// Smallest interval containing both arguments.
inline interval hull(const interval& x, const interval& y) {
    return {std::min(x.lo(), y.lo()), std::max(x.hi(), y.hi())};
}

namespace detail {

/// Sign-case multiplication. Faster than the four-product rule for wide
/// pipelines; kept internal and property-tested equal to operator*.
inline interval mul_by_sign(const interval& x, const interval& y) {
    const double a = x.lo(), b = x.hi(), c = y.lo(), d = y.hi();
    if (a >= 0.0) {
        if (c >= 0.0) return {a * c, b * d};
        if (d <= 0.0) return {b * c, a * d};
        return {b * c, b * d};
    }
    if (b <= 0.0) {
        if (c >= 0.0) return {a * d, b * c};
        if (d <= 0.0) return {b * d, a * c};
        return {a * d, a * c};
    }
    if (c >= 0.0) return {a * d, b * d};
    if (d <= 0.0) return {b * c, a * c};
    return {std::min(a * d, b * c), std::max(a * c, b * d)};
}

} // namespace detail

} // namespace idft
