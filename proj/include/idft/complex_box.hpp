#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <span>

#include "idft/interval.hpp"

namespace idft {

/// Planar point; the complex plane doubles as R^2 throughout.
using point = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Maps an angle to (-pi, pi].
inline double wrap_angle(double a) {
    const double r = std::remainder(a, 2.0 * pi);
    return r <= -pi ? pi : r;
}

/// Angular interval with endpoints in (-pi, pi]. A set straddling the
/// branch cut gets the minimal containing arc with lo > hi numerically
/// and `wrapped` set; the arc then runs lo -> pi -> hi.
struct arc {
    double lo = 0.0;
    double hi = 0.0;
    bool wrapped = false;

    double width() const { return wrapped ? 2.0 * pi - (lo - hi) : hi - lo; }

    bool contains(double theta, double tol = 0.0) const {
        double delta = std::fmod(theta - lo, 2.0 * pi);
        if (delta < 0.0) delta += 2.0 * pi;
        return delta <= width() + tol || delta >= 2.0 * pi - tol;
    }

    bool operator==(const arc& other) const {
        return lo == other.lo && hi == other.hi && wrapped == other.wrapped;
    }
};

/// Minimal arc containing the given angles. Requires the angles to span
/// less than pi, which holds for the directions of any convex set that
/// avoids the origin.
inline arc minimal_arc(std::span<const double> angles) {
    const double ref = angles.front();
    double below = 0.0, above = 0.0; // extreme offsets relative to ref
    for (double a : angles) {
        const double d = std::remainder(a - ref, 2.0 * pi);
        below = std::min(below, d);
        above = std::max(above, d);
    }
    const double lo = wrap_angle(ref + below);
    const double hi = wrap_angle(ref + above);
    return {lo, hi, lo > hi};
}

/// Rectangular complex interval: a box in the complex plane with
/// non-interactive Re and Im components.
struct complex_box {
    interval re;
    interval im;

    /// The four (possibly coincident) corners, in (re, im) coordinates:
    /// (lo,lo), (hi,lo), (lo,hi), (hi,hi).
    std::array<point, 4> vertices() const {
        return {point{re.lo(), im.lo()}, point{re.hi(), im.lo()},
                point{re.lo(), im.hi()}, point{re.hi(), im.hi()}};
    }

    bool contains_origin() const { return re.contains(0.0) && im.contains(0.0); }
    bool contains(point p) const { return re.contains(p.real()) && im.contains(p.imag()); }

    bool operator==(const complex_box& other) const {
        return re == other.re && im == other.im;
    }
    bool operator!=(const complex_box& other) const { return !(*this == other); }
};

inline complex_box operator+(const complex_box& z, const complex_box& w) {
    return {z.re + w.re, z.im + w.im};
}

inline complex_box operator-(const complex_box& z, const complex_box& w) {
    return {z.re - w.re, z.im - w.im};
}

/// Exact amplitude range |z| over the box. The maximum is always attained
/// at a corner; the minimum depends on where the origin sits relative to
/// the box (inside, beside an axis strip, or fully outside).
inline interval box_amplitude(const complex_box& z) {
    double max_amp = 0.0;
    double min_vertex = std::numeric_limits<double>::infinity();
    for (const point& p : z.vertices()) {
        const double a = std::hypot(p.real(), p.imag());
        max_amp = std::max(max_amp, a);
        min_vertex = std::min(min_vertex, a);
    }
    const bool zero_in_re = z.re.contains(0.0);
    const bool zero_in_im = z.im.contains(0.0);
    double min_amp;
    if (zero_in_re && zero_in_im)
        min_amp = 0.0;
    else if (zero_in_re)
        min_amp = std::min(std::abs(z.im.lo()), std::abs(z.im.hi()));
    else if (zero_in_im)
        min_amp = std::min(std::abs(z.re.lo()), std::abs(z.re.hi()));
    else
        min_amp = min_vertex;
    return {min_amp, max_amp};
}

/// Exact argument range over the box, undefined (nullopt) when the origin
/// lies in the closed box. Extremes are attained at corners.
inline std::optional<arc> box_argument(const complex_box& z) {
    if (z.contains_origin()) return std::nullopt;
    std::array<double, 4> angles{};
    const auto verts = z.vertices();
    for (std::size_t i = 0; i < 4; ++i)
        angles[i] = std::atan2(verts[i].imag(), verts[i].real());
    return minimal_arc(angles);
}

/// Oriented segment in the complex plane: the exact joint set of
/// (u*x, v*x) over a common generator interval x. p0 is the image of the
/// generator's lo endpoint, p1 of its hi endpoint.
struct diagonal {
    point p0;
    point p1;
    int source_index = -1; // signal component that generated this diagonal

    bool is_degenerate() const { return p0 == p1; }
    point edge() const { return p1 - p0; }

    /// Tightest box around the segment; equals the componentwise
    /// rectangular product (u*x) + i(v*x).
    complex_box bounding_box() const {
        return {interval{std::min(p0.real(), p1.real()), std::max(p0.real(), p1.real())},
                interval{std::min(p0.imag(), p1.imag()), std::max(p0.imag(), p1.imag())}};
    }
};

/// Exact united set of x * (u + i v): the segment from (u*lo, v*lo) to
/// (u*hi, v*hi). The rectangular product only bounds it; the diagonal
/// keeps the dependence between real and imaginary parts.
inline diagonal scale_diagonal(const interval& x, double u, double v, int source_index = -1) {
    return {point{u * x.lo(), v * x.lo()}, point{u * x.hi(), v * x.hi()}, source_index};
}

namespace detail {

/// Sum/difference evaluated the long way, over all 16 vertex pairs.
/// Agrees with the componentwise operators; kept for cross-checking.
inline complex_box add_sub_by_vertices(bool subtract, const complex_box& z, const complex_box& w) {
    double re_lo = std::numeric_limits<double>::infinity(), re_hi = -re_lo;
    double im_lo = re_lo, im_hi = -re_lo;
    for (const point& a : z.vertices()) {
        for (const point& b : w.vertices()) {
            const point s = subtract ? a - b : a + b;
            re_lo = std::min(re_lo, s.real());
            re_hi = std::max(re_hi, s.real());
            im_lo = std::min(im_lo, s.imag());
            im_hi = std::max(im_hi, s.imag());
        }
    }
    return {interval{re_lo, re_hi}, interval{im_lo, im_hi}};
}

} // namespace detail

} // namespace idft
