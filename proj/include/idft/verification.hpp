#pragma once

#include <random>

#include "idft/dft.hpp"

namespace idft {

/// Enumeration guard for the corner oracle: 2^N corner images.
inline constexpr std::size_t corner_enumeration_limit = 20;

/// Outcome of the independent checks for one harmonic. `pass` follows the
/// fixed rule: geometric gaps within tolerance and no escaped samples.
struct oracle_report {
    std::int64_t harmonic = 0;
    double hausdorff_distance = 0.0;
    double box_deviation = 0.0;
    double area_ratio = 1.0;
    long samples_outside = 0;
    bool corner_checked = false;
    double tolerance = geom_tol;
    bool pass = true;

    void refresh_verdict() {
        pass = hausdorff_distance <= tolerance && box_deviation <= tolerance &&
               samples_outside == 0;
    }
};

/// Hausdorff distance between convex polygons, computed vertex-to-set in
/// both directions (the farthest point of a convex set from another
/// convex set is one of its vertices).
inline double hausdorff_distance(const convex_polygon& p, const convex_polygon& q) {
    double worst = 0.0;
    for (const point& v : p.verts) worst = std::max(worst, exterior_distance(q, v));
    for (const point& v : q.verts) worst = std::max(worst, exterior_distance(p, v));
    return worst;
}

/// Brute-force united set: the pointwise DFT evaluated at every corner of
/// the input box (component n is bit n of the configuration index, bit 0
/// meaning lo), hulled. Independent of the Minkowski machinery.
inline convex_polygon corner_hull(const interval_vector& x, std::int64_t h) {
    detail::check_harmonic(x, h);
    if (x.size() > corner_enumeration_limit)
        throw std::invalid_argument("corner_hull: refusing 2^N enumeration for N > 20");
    const std::size_t corners = std::size_t{1} << x.size();
    std::vector<point> images;
    images.reserve(corners);
    std::vector<double> samples(x.size());
    for (std::size_t mask = 0; mask < corners; ++mask) {
        for (std::size_t n = 0; n < x.size(); ++n)
            samples[n] = (mask >> n) & 1u ? x[n].hi() : x[n].lo();
        images.push_back(dft_point(samples, h));
    }
    return convex_polygon::hull_of(images);
}

/// Draws uniform samples from the input box, maps them through the
/// pointwise DFT and counts those that escape the polygon by more than
/// the tolerance. Deterministic for a given seed.
inline oracle_report sample_check(const interval_vector& x, std::int64_t h,
                                  const convex_polygon& polygon, long count,
                                  std::uint64_t seed) {
    detail::check_harmonic(x, h);
    oracle_report report;
    report.harmonic = h;
    report.tolerance = geom_tol * std::max(1.0, polygon.diameter());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> samples(x.size());
    for (long i = 0; i < count; ++i) {
        for (std::size_t n = 0; n < x.size(); ++n)
            samples[n] = x[n].lo() + unit(rng) * x[n].width();
        if (exterior_distance(polygon, dft_point(samples, h)) > report.tolerance)
            ++report.samples_outside;
    }
    report.refresh_verdict();
    return report;
}

/// Compares the exact polygon against the naive box: the coordinate gap
/// between the polygon's range and the interval extension (zero by the
/// optimality of the extension), plus the area ratio polygon/box as a
/// conservatism metric (1 for degenerate boxes by convention).
inline oracle_report compare_naive(const interval_vector& x, std::int64_t h,
                                   zonogon_mode mode = zonogon_mode::fast) {
    const convex_polygon polygon = united_set(x, h, mode);
    const complex_box box = interval_dft_box(x, h);
    const complex_box range = polygon_range(polygon);

    oracle_report report;
    report.harmonic = h;
    report.tolerance = geom_tol * std::max(1.0, polygon.diameter());
    report.box_deviation = std::max({std::abs(range.re.lo() - box.re.lo()),
                                     std::abs(range.re.hi() - box.re.hi()),
                                     std::abs(range.im.lo() - box.im.lo()),
                                     std::abs(range.im.hi() - box.im.hi())});
    const double box_area = box.re.width() * box.im.width();
    const double thin = geom_tol * std::max(1.0, polygon.diameter());
    if (box.re.width() <= thin || box.im.width() <= thin)
        report.area_ratio = 1.0; // flat or point-like boxes count as exact
    else
        report.area_ratio = polygon.signed_area() / box_area;
    report.refresh_verdict();
    return report;
}

struct verify_options {
    long samples = 100000;
    std::uint64_t seed = 1;
    zonogon_mode mode = zonogon_mode::fast;
    bool corner_oracle = true; // silently skipped above the enumeration guard
};

/// Runs every applicable oracle for one harmonic and merges the outcome.
inline oracle_report verify_harmonic(const interval_vector& x, std::int64_t h,
                                     const verify_options& options = {}) {
    const convex_polygon polygon = united_set(x, h, options.mode);
    oracle_report report = compare_naive(x, h, options.mode);
    const oracle_report sampled = sample_check(x, h, polygon, options.samples, options.seed);
    report.samples_outside = sampled.samples_outside;
    if (options.corner_oracle && x.size() <= corner_enumeration_limit) {
        report.corner_checked = true;
        report.hausdorff_distance = hausdorff_distance(polygon, corner_hull(x, h));
    }
    report.refresh_verdict();
    return report;
}

} // namespace idft
