#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "idft/polygon.hpp"

namespace idft {

/// Fourier coefficient w = exp(-2 pi i k / N) for integer k. The caller
/// reduces nothing: k is folded modulo N here, in integer arithmetic, and
/// the four axis values come out exact. Values on the lower half circle
/// are conjugates of the upper half, so w(N-k) == conj(w(k)) exactly.
inline point unit_coefficient(std::int64_t k, std::int64_t n_samples) {
    k %= n_samples;
    if (k < 0) k += n_samples;
    const bool conjugate = 2 * k > n_samples;
    if (conjugate) k = n_samples - k;
    point w;
    if (k == 0)
        w = {1.0, 0.0};
    else if (2 * k == n_samples)
        w = {-1.0, 0.0};
    else if (4 * k == n_samples)
        w = {0.0, -1.0};
    else {
        const double theta = 2.0 * pi * static_cast<double>(k) / static_cast<double>(n_samples);
        w = {std::cos(theta), -std::sin(theta)};
    }
    return conjugate ? std::conj(w) : w;
}

/// w_hn = exp(-i 2 pi h n / N) as (u, v) = (cos, -sin); depends on
/// h*n mod N only.
inline point coefficient(std::int64_t n_samples, std::int64_t h, std::int64_t n) {
    return unit_coefficient(h * n, n_samples);
}

/// Coefficient row for harmonic h: (u_hn, v_hn) for n = 0..N-1.
inline std::vector<point> coefficient_row(std::int64_t n_samples, std::int64_t h) {
    std::vector<point> row;
    row.reserve(static_cast<std::size_t>(n_samples));
    std::int64_t k = 0;
    const std::int64_t step = ((h % n_samples) + n_samples) % n_samples;
    for (std::int64_t n = 0; n < n_samples; ++n) {
        row.push_back(unit_coefficient(k, n_samples));
        k += step;
        if (k >= n_samples) k -= n_samples;
    }
    return row;
}

/// Classic pointwise DFT of a real sample vector at harmonic h.
inline point dft_point(std::span<const double> samples, std::int64_t h) {
    const auto n_samples = static_cast<std::int64_t>(samples.size());
    point acc{0.0, 0.0};
    std::int64_t k = 0;
    const std::int64_t step = ((h % n_samples) + n_samples) % n_samples;
    for (std::int64_t n = 0; n < n_samples; ++n) {
        acc += samples[static_cast<std::size_t>(n)] * unit_coefficient(k, n_samples);
        k += step;
        if (k >= n_samples) k -= n_samples;
    }
    return acc;
}

namespace detail {

inline void check_harmonic(const interval_vector& x, std::int64_t h) {
    if (x.empty()) throw std::invalid_argument("interval DFT: empty signal");
    if (h < 0 || h >= static_cast<std::int64_t>(x.size()))
        throw std::out_of_range("interval DFT: harmonic out of [0, N)");
}

} // namespace detail

/// Naive interval extension of the DFT: componentwise interval sums of
/// u_hn * x_n and v_hn * x_n. Optimal as a box (no repeated variables),
/// but it discards the Re/Im dependence within each addend.
inline complex_box interval_dft_box(const interval_vector& x, std::int64_t h) {
    detail::check_harmonic(x, h);
    const auto n_samples = static_cast<std::int64_t>(x.size());
    interval re_acc, im_acc;
    std::int64_t k = 0;
    const std::int64_t step = h % n_samples;
    for (const interval& xn : x) {
        const point w = unit_coefficient(k, n_samples);
        re_acc += w.real() * xn;
        im_acc += w.imag() * xn;
        k += step;
        if (k >= n_samples) k -= n_samples;
    }
    return {re_acc, im_acc};
}

/// The exact reachable set Z_h of the interval DFT at harmonic h: the
/// zonogon spanned by the diagonals x_n * w_hn, with edge provenance for
/// endpoint-configuration recovery.
inline convex_polygon united_set(const interval_vector& x, std::int64_t h,
                                 zonogon_mode mode = zonogon_mode::fast) {
    detail::check_harmonic(x, h);
    const auto n_samples = static_cast<std::int64_t>(x.size());
    std::vector<diagonal> diagonals;
    diagonals.reserve(x.size());
    std::int64_t k = 0;
    const std::int64_t step = h % n_samples;
    for (std::size_t n = 0; n < x.size(); ++n) {
        const point w = unit_coefficient(k, n_samples);
        diagonals.push_back(scale_diagonal(x[n], w.real(), w.imag(), static_cast<int>(n)));
        k += step;
        if (k >= n_samples) k -= n_samples;
    }
    return zonogon_from_diagonals(diagonals, mode);
}

enum class amplitude_target { max_amplitude, min_amplitude };

namespace detail {

inline std::vector<endpoint_choice> config_at_vertex(const convex_polygon& p, std::size_t k) {
    std::vector<endpoint_choice> config = p.start_config;
    for (std::size_t e = 0; e < k; ++e)
        for (const edge_step& s : p.edge_tags(e))
            config[static_cast<std::size_t>(s.source)] =
                s.to_hi ? endpoint_choice::hi : endpoint_choice::lo;
    return config;
}

} // namespace detail

/// Recovers which input endpoints attain the amplitude extreme. For the
/// maximum this is always a polygon vertex; walking the boundary from the
/// canonical start and replaying the edge provenance yields the lo/hi
/// assignment (zero-width components stay `any`). For the minimum the
/// result is nullopt ("interior") when the nearest point of the set is
/// not a vertex, i.e. the origin is inside or the minimizer lies mid-edge.
inline std::optional<std::vector<endpoint_choice>> critical_configuration(
    const convex_polygon& p, amplitude_target target) {
    if (!p.has_provenance())
        throw std::invalid_argument("critical_configuration: polygon carries no provenance");

    if (target == amplitude_target::max_amplitude) {
        std::size_t best = 0;
        double best_norm = std::abs(p.verts[0]);
        for (std::size_t k = 1; k < p.verts.size(); ++k) {
            const double norm_k = std::abs(p.verts[k]);
            if (norm_k > best_norm) { // ties keep the first in boundary order
                best_norm = norm_k;
                best = k;
            }
        }
        return detail::config_at_vertex(p, best);
    }

    if (locate_origin(p) == origin_location::interior) return std::nullopt;
    const double tol = geom_tol * std::max(1.0, p.diameter());
    double min_dist;
    if (p.size() == 1) {
        min_dist = std::abs(p.verts[0]);
    } else if (p.size() == 2) {
        min_dist = dist_point_segment({0.0, 0.0}, p.verts[0], p.verts[1]);
    } else {
        min_dist = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < p.verts.size(); ++i)
            min_dist = std::min(min_dist, dist_point_segment({0.0, 0.0}, p.verts[i],
                                                             p.verts[(i + 1) % p.verts.size()]));
    }
    for (std::size_t k = 0; k < p.verts.size(); ++k)
        if (std::abs(p.verts[k]) <= min_dist + tol) return detail::config_at_vertex(p, k);
    return std::nullopt; // minimizer sits strictly inside an edge
}

/// Everything the transform reports for one harmonic.
struct spectrum_bounds {
    std::int64_t harmonic = 0;
    convex_polygon polygon;             // united set Z_h, with provenance
    complex_box box;                    // naive interval extension z_h
    interval amplitude;                 // exact |Z_h| range
    std::optional<arc> phase;           // exact argument range, nullopt if undefined
    origin_location origin = origin_location::outside; // reason when phase is undefined
    std::vector<endpoint_choice> config_max;
    std::optional<std::vector<endpoint_choice>> config_min; // nullopt = interior
};

inline spectrum_bounds harmonic_bounds(const interval_vector& x, std::int64_t h,
                                       zonogon_mode mode = zonogon_mode::fast) {
    spectrum_bounds out;
    out.harmonic = h;
    out.polygon = united_set(x, h, mode);
    out.box = interval_dft_box(x, h);
    out.amplitude = polygon_amplitude(out.polygon);
    out.origin = locate_origin(out.polygon);
    out.phase = polygon_argument(out.polygon);
    out.config_max = *critical_configuration(out.polygon, amplitude_target::max_amplitude);
    out.config_min = critical_configuration(out.polygon, amplitude_target::min_amplitude);
    return out;
}

inline std::vector<std::int64_t> all_harmonics(std::size_t n_samples) {
    std::vector<std::int64_t> hs(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) hs[i] = static_cast<std::int64_t>(i);
    return hs;
}

/// Harmonics 0..floor(N/2); the rest mirror by conjugate symmetry.
inline std::vector<std::int64_t> half_harmonics(std::size_t n_samples) {
    std::vector<std::int64_t> hs(n_samples / 2 + 1);
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i] = static_cast<std::int64_t>(i);
    return hs;
}

/// Bounds for a set of harmonics; independent per harmonic, computed on
/// up to `threads` workers with results in request order.
inline std::vector<spectrum_bounds> spectrum(const interval_vector& x,
                                             std::span<const std::int64_t> harmonics,
                                             zonogon_mode mode = zonogon_mode::fast,
                                             unsigned threads = 1) {
    for (std::int64_t h : harmonics) detail::check_harmonic(x, h);
    std::vector<spectrum_bounds> out(harmonics.size());
    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(harmonics.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < harmonics.size(); ++i)
            out[i] = harmonic_bounds(x, harmonics[i], mode);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < harmonics.size(); i += workers)
                out[i] = harmonic_bounds(x, harmonics[i], mode);
        });
    for (std::thread& th : pool) th.join();
    return out;
}

} // namespace idft
