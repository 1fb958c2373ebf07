#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "idft/complex_box.hpp"

namespace idft {

/// Absolute geometric tolerance on coordinates scaled by the figure's
/// diameter; used for collinearity, coincidence and containment tests.
inline constexpr double geom_tol = 1e-9;

inline double cross(point a, point b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(point a, point b) { return a.real() * b.real() + a.imag() * b.imag(); }

/// Lexicographic (y, then x) order; the canonical start vertex of a
/// polygon is the minimum under this order, i.e. the support point in
/// direction (0,-1) with ties broken towards smaller x.
inline bool lex_less_yx(point a, point b) {
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
}

inline double dist_point_segment(point p, point a, point b) {
    const point ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

/// One generator crossing on a boundary edge: traversing the edge moves
/// generator `source` from lo to hi (to_hi) or back.
struct edge_step {
    std::int32_t source;
    bool to_hi;

    int sign() const { return to_hi ? +1 : -1; }
    bool operator==(const edge_step&) const = default;
};

/// Which endpoint of a generator a configuration picks; `any` marks a
/// zero-width generator whose choice is immaterial.
enum class endpoint_choice : std::uint8_t { lo, hi, any };

/// Convex polygon in the plane, counter-clockwise, starting at the
/// canonical vertex (lowest y, then lowest x). Degenerate forms: one
/// vertex is a point, two vertices a segment.
///
/// Zonogon-built polygons additionally carry edge provenance: per edge,
/// the generator endpoint flips that traversing it performs, stored as a
/// flat step pool indexed by offsets. `start_config` records each
/// generator's endpoint at the canonical start vertex.
struct convex_polygon {
    std::vector<point> verts;

    std::vector<std::uint32_t> tag_offsets; // size edge_count()+1 when tracked, else empty
    std::vector<edge_step> tag_steps;
    std::vector<endpoint_choice> start_config; // per generator, else empty

    static convex_polygon from_point(point p) {
        convex_polygon poly;
        poly.verts = {p};
        return poly;
    }

    static convex_polygon from_segment(point a, point b) {
        if (a == b) return from_point(a);
        convex_polygon poly;
        poly.verts = lex_less_yx(a, b) ? std::vector<point>{a, b} : std::vector<point>{b, a};
        return poly;
    }

    /// Strict convex hull (no collinear vertices) of arbitrary points,
    /// via Andrew's monotone chain.
    static convex_polygon hull_of(std::span<const point> pts);

    std::size_t size() const { return verts.size(); }

    std::size_t edge_count() const {
        if (verts.size() <= 1) return 0;
        if (verts.size() == 2) return 2; // there and back
        return verts.size();
    }

    point vertex(std::size_t i) const { return verts[i]; }

    point edge_vector(std::size_t e) const {
        if (verts.size() == 2) return e == 0 ? verts[1] - verts[0] : verts[0] - verts[1];
        return verts[(e + 1) % verts.size()] - verts[e];
    }

    bool has_edge_tags() const { return !tag_offsets.empty(); }
    bool has_provenance() const { return has_edge_tags() && !start_config.empty(); }

    std::span<const edge_step> edge_tags(std::size_t e) const {
        return {tag_steps.data() + tag_offsets[e], tag_steps.data() + tag_offsets[e + 1]};
    }

    /// Diagonal of the bounding box; the length scale for tolerances.
    double diameter() const {
        double xmin = verts[0].real(), xmax = xmin, ymin = verts[0].imag(), ymax = ymin;
        for (const point& v : verts) {
            xmin = std::min(xmin, v.real());
            xmax = std::max(xmax, v.real());
            ymin = std::min(ymin, v.imag());
            ymax = std::max(ymax, v.imag());
        }
        return std::hypot(xmax - xmin, ymax - ymin);
    }

    double signed_area() const {
        if (verts.size() < 3) return 0.0;
        double twice = 0.0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            twice += cross(verts[i], verts[(i + 1) % verts.size()]);
        return 0.5 * twice;
    }
};

namespace detail {

inline int angle_half(point v) {
    // 0 for polar angle in [0, pi), 1 for [pi, 2pi); v must be nonzero.
    if (v.imag() > 0.0) return 0;
    if (v.imag() < 0.0) return 1;
    return v.real() > 0.0 ? 0 : 1;
}

inline bool angle_less(point a, point b) {
    const int ha = angle_half(a), hb = angle_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0.0;
}

inline bool parallel_same_direction(point a, point b) {
    const double c = cross(a, b);
    return dot(a, b) > 0.0 && c * c <= geom_tol * geom_tol * std::norm(a) * std::norm(b);
}

/// Edge of a polygonal chain with a slice of the shared step pool.
struct tagged_edge {
    point vec;
    std::uint32_t tag_begin = 0;
    std::uint32_t tag_end = 0;
};

/// Builds the polygon whose boundary starts at `anchor` (the tail of
/// edges.front()) and follows `edges`, which must be sorted by polar
/// angle over [0, 2pi). Merges near-parallel neighbours (cyclically),
/// walks the vertices and rotates them to the canonical start.
inline convex_polygon assemble_from_edges(point anchor, std::vector<tagged_edge> edges,
                                          const std::vector<edge_step>& step_pool,
                                          bool tracked) {
    if (edges.empty()) return convex_polygon::from_point(anchor);

    // Adjacent merge: equal-angle edges collapse into their vector sum.
    std::vector<tagged_edge> merged;
    std::vector<edge_step> steps;
    merged.reserve(edges.size());
    steps.reserve(tracked ? step_pool.size() : 0);
    auto append_steps = [&](const tagged_edge& e) {
        steps.insert(steps.end(), step_pool.begin() + e.tag_begin, step_pool.begin() + e.tag_end);
    };
    for (const tagged_edge& e : edges) {
        if (!merged.empty() && parallel_same_direction(merged.back().vec, e.vec)) {
            merged.back().vec += e.vec;
            if (tracked) {
                append_steps(e);
                merged.back().tag_end = static_cast<std::uint32_t>(steps.size());
            }
        } else {
            tagged_edge out = e;
            if (tracked) {
                out.tag_begin = static_cast<std::uint32_t>(steps.size());
                append_steps(e);
                out.tag_end = static_cast<std::uint32_t>(steps.size());
            }
            merged.push_back(out);
        }
    }

    // Cyclic closure: the last edge may be parallel to the first, in
    // which case the anchor sits mid-edge and moves one step forward.
    while (merged.size() >= 2 && parallel_same_direction(merged.back().vec, merged.front().vec)) {
        anchor += merged.front().vec;
        merged.back().vec += merged.front().vec;
        if (tracked) {
            // Steps of the swallowed first edge migrate to the combined one.
            const auto b = merged.front().tag_begin, e = merged.front().tag_end;
            steps.reserve(steps.size() + (e - b));
            steps.insert(steps.end(), steps.begin() + b, steps.begin() + e);
            merged.back().tag_end = static_cast<std::uint32_t>(steps.size());
        }
        merged.erase(merged.begin());
    }

    convex_polygon poly;
    if (merged.size() == 2) {
        poly.verts = {anchor, anchor + merged[0].vec};
    } else {
        poly.verts.reserve(merged.size());
        point cursor = anchor;
        for (const tagged_edge& e : merged) {
            poly.verts.push_back(cursor);
            cursor += e.vec;
        }
    }

    // Rotate to the canonical start vertex.
    std::size_t start = 0;
    for (std::size_t i = 1; i < poly.verts.size(); ++i)
        if (lex_less_yx(poly.verts[i], poly.verts[start])) start = i;
    if (start != 0) {
        std::rotate(poly.verts.begin(), poly.verts.begin() + start, poly.verts.end());
        std::rotate(merged.begin(), merged.begin() + start, merged.end());
    }

    if (tracked) {
        poly.tag_offsets.reserve(merged.size() + 1);
        poly.tag_offsets.push_back(0);
        poly.tag_steps.reserve(steps.size());
        for (const tagged_edge& e : merged) {
            poly.tag_steps.insert(poly.tag_steps.end(), steps.begin() + e.tag_begin,
                                  steps.begin() + e.tag_end);
            poly.tag_offsets.push_back(static_cast<std::uint32_t>(poly.tag_steps.size()));
        }
    }
    return poly;
}

/// Rotates a CSR edge-tag layout so edge `s` becomes edge 0.
inline void rotate_csr(std::vector<std::uint32_t>& offsets, std::vector<edge_step>& steps,
                       std::size_t s) {
    if (s == 0 || offsets.size() <= 1) return;
    const std::uint32_t cut = offsets[s];
    const std::uint32_t total = offsets.back();
    std::rotate(steps.begin(), steps.begin() + cut, steps.end());
    const std::size_t edges = offsets.size() - 1;
    std::vector<std::uint32_t> fresh;
    fresh.reserve(offsets.size());
    fresh.push_back(0);
    for (std::size_t k = 1; k <= edges; ++k) {
        const std::size_t idx = s + k;
        fresh.push_back(idx <= edges ? offsets[idx] - cut : offsets[idx - edges] + (total - cut));
    }
    offsets = std::move(fresh);
}

/// General polar-angle merge of two edge-sorted polygons, writing the
/// result (vertices + concatenated provenance) in a single pass.
inline convex_polygon merge_general(const convex_polygon& p, const convex_polygon& q) {
    const bool tracked = p.has_edge_tags() || q.has_edge_tags();
    const std::size_t ep = p.edge_count(), eq = q.edge_count();

    convex_polygon out;
    std::vector<point> evecs;
    evecs.reserve(ep + eq);
    if (tracked) {
        out.tag_offsets.reserve(ep + eq + 1);
        out.tag_offsets.push_back(0);
        out.tag_steps.reserve(p.tag_steps.size() + q.tag_steps.size());
    }
    auto push_edge = [&](const convex_polygon& src, std::size_t idx, point vec) {
        const bool merges = !evecs.empty() && parallel_same_direction(evecs.back(), vec);
        if (merges)
            evecs.back() += vec;
        else
            evecs.push_back(vec);
        if (tracked) {
            if (src.has_edge_tags()) {
                const auto tags = src.edge_tags(idx);
                out.tag_steps.insert(out.tag_steps.end(), tags.begin(), tags.end());
            }
            const auto end = static_cast<std::uint32_t>(out.tag_steps.size());
            if (merges)
                out.tag_offsets.back() = end;
            else
                out.tag_offsets.push_back(end);
        }
    };

    std::size_t i = 0, j = 0;
    point pe = p.edge_vector(0), qe = q.edge_vector(0);
    while (i < ep && j < eq) {
        if (angle_less(qe, pe)) {
            push_edge(q, j, qe);
            if (++j < eq) qe = q.edge_vector(j);
        } else {
            push_edge(p, i, pe);
            if (++i < ep) pe = p.edge_vector(i);
        }
    }
    for (; i < ep; ++i) push_edge(p, i, p.edge_vector(i));
    for (; j < eq; ++j) push_edge(q, j, q.edge_vector(j));

    point anchor = p.verts[0] + q.verts[0];
    // Cyclic closure: the last edge may be parallel to the first, in
    // which case the anchor sits mid-edge and moves one step forward.
    while (evecs.size() > 2 && parallel_same_direction(evecs.back(), evecs.front())) {
        anchor += evecs.front();
        evecs.back() += evecs.front();
        evecs.erase(evecs.begin());
        if (tracked) {
            const std::uint32_t cut = out.tag_offsets[1];
            std::rotate(out.tag_steps.begin(), out.tag_steps.begin() + cut, out.tag_steps.end());
            out.tag_offsets.erase(out.tag_offsets.begin() + 1);
            for (std::size_t k = 1; k < out.tag_offsets.size(); ++k) out.tag_offsets[k] -= cut;
            out.tag_offsets.back() = static_cast<std::uint32_t>(out.tag_steps.size());
        }
    }

    if (evecs.size() == 2) {
        out.verts = {anchor, anchor + evecs[0]};
    } else {
        out.verts.reserve(evecs.size());
        point cursor = anchor;
        for (const point& e : evecs) {
            out.verts.push_back(cursor);
            cursor += e;
        }
    }

    std::size_t start = 0;
    for (std::size_t k = 1; k < out.verts.size(); ++k)
        if (lex_less_yx(out.verts[k], out.verts[start])) start = k;
    if (start != 0) {
        std::rotate(out.verts.begin(), out.verts.begin() + start, out.verts.end());
        if (tracked) rotate_csr(out.tag_offsets, out.tag_steps, start);
    }
    return out;
}

inline constexpr std::size_t no_merge = static_cast<std::size_t>(-1);

/// Adds a segment to a polygon with at least three vertices by splicing
/// the segment's two edge vectors into the sorted edge cycle: two binary
/// searches and block copies instead of a full merge pass. This is the
/// hot step of the chained Minkowski series.
inline convex_polygon sum_polygon_segment(const convex_polygon& p, const convex_polygon& q) {
    const std::size_t m = p.verts.size();
    const point qv0 = q.verts[0], qv1 = q.verts[1];
    const point f0 = qv1 - qv0; // angle in [0, pi) by canonical ordering
    const point f1 = qv0 - qv1;

    const auto edge_at = [&](std::size_t k) { return p.verts[(k + 1) % m] - p.verts[k]; };
    const auto position_of = [&](point f, std::size_t from) {
        std::size_t lo = from, hi = m;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (angle_less(edge_at(mid), f))
                lo = mid + 1;
            else
                hi = mid;
        }
        return lo;
    };
    const std::size_t pos0 = position_of(f0, 0);
    const std::size_t pos1 = position_of(f1, pos0);

    // A splice landing at the seam of the edge cycle may have to combine
    // with the wrap-around edge; leave that to the general merge.
    if ((pos0 == 0 && parallel_same_direction(edge_at(m - 1), f0)) ||
        (pos1 == m && parallel_same_direction(f1, edge_at(0))))
        return merge_general(p, q);

    auto merge_target = [&](point f, std::size_t pos) {
        if (pos > 0 && parallel_same_direction(edge_at(pos - 1), f)) return pos - 1;
        if (pos < m && parallel_same_direction(edge_at(pos), f)) return pos;
        return no_merge;
    };
    const std::size_t merge0 = merge_target(f0, pos0);
    const std::size_t merge1 = merge_target(f1, pos1);

    // Vertex regions: p + qv0 up to the first splice, p + qv1 between the
    // splices, p + qv0 after the second. A merged splice consumes the
    // adjacent polygon edge.
    const bool merge0_prev = merge0 != no_merge && merge0 + 1 == pos0;
    const bool merge1_prev = merge1 != no_merge && merge1 + 1 == pos1;
    const std::size_t a_end = merge0_prev ? pos0 - 1 : pos0;
    const std::size_t b_start = merge0 == pos0 ? pos0 + 1 : pos0;
    const std::size_t b_end = merge1_prev ? pos1 - 1 : pos1;
    const std::size_t c_start = merge1 == pos1 ? pos1 + 1 : pos1;

    convex_polygon out;
    out.verts.reserve(m + 2);
    for (std::size_t i = 0; i <= a_end; ++i) out.verts.push_back(p.verts[i] + qv0);
    for (std::size_t i = b_start; i <= b_end; ++i) out.verts.push_back(p.verts[i % m] + qv1);
    for (std::size_t i = c_start; i < m; ++i) out.verts.push_back(p.verts[i] + qv0);

    const bool tracked = p.has_edge_tags() || q.has_edge_tags();
    if (tracked) {
        out.tag_offsets.reserve(out.verts.size() + 1);
        out.tag_steps.reserve(p.tag_steps.size() + q.tag_steps.size());
        out.tag_offsets.push_back(0);
        const auto copy_p_run = [&](std::size_t k0, std::size_t k1) { // p edges [k0, k1)
            if (k1 <= k0) return;
            if (p.has_edge_tags()) {
                const auto s0 = p.tag_offsets[k0];
                const std::int64_t shift =
                    static_cast<std::int64_t>(out.tag_steps.size()) - static_cast<std::int64_t>(s0);
                out.tag_steps.insert(out.tag_steps.end(), p.tag_steps.begin() + s0,
                                     p.tag_steps.begin() + p.tag_offsets[k1]);
                for (std::size_t k = k0 + 1; k <= k1; ++k)
                    out.tag_offsets.push_back(
                        static_cast<std::uint32_t>(p.tag_offsets[k] + shift));
            } else {
                for (std::size_t k = k0; k < k1; ++k)
                    out.tag_offsets.push_back(static_cast<std::uint32_t>(out.tag_steps.size()));
            }
        };
        const auto append_p_edge_steps = [&](std::size_t k) {
            if (!p.has_edge_tags()) return;
            const auto tags = p.edge_tags(k);
            out.tag_steps.insert(out.tag_steps.end(), tags.begin(), tags.end());
        };
        const auto append_q_edge_steps = [&](std::size_t k) {
            if (!q.has_edge_tags()) return;
            const auto tags = q.edge_tags(k);
            out.tag_steps.insert(out.tag_steps.end(), tags.begin(), tags.end());
        };
        const auto close_edge = [&] {
            out.tag_offsets.push_back(static_cast<std::uint32_t>(out.tag_steps.size()));
        };

        copy_p_run(0, a_end);
        if (merge0_prev) append_p_edge_steps(pos0 - 1);
        append_q_edge_steps(0);
        if (merge0 == pos0) append_p_edge_steps(pos0);
        close_edge();
        copy_p_run(b_start, b_end);
        if (merge1_prev) append_p_edge_steps(pos1 - 1);
        append_q_edge_steps(1);
        if (merge1 == pos1) append_p_edge_steps(pos1);
        close_edge();
        copy_p_run(c_start, m);
    }
    return out;
}

} // namespace detail

inline convex_polygon convex_polygon::hull_of(std::span<const point> pts) {
    if (pts.empty()) throw std::invalid_argument("hull_of: no points");
    std::vector<point> sorted(pts.begin(), pts.end());
    std::sort(sorted.begin(), sorted.end(), [](point a, point b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() == 1) return from_point(sorted[0]);

    std::vector<point> hull(2 * sorted.size());
    std::size_t k = 0;
    for (const point& p : sorted) { // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
        hull[k++] = p;
    }
    const std::size_t lower_end = k + 1;
    for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) { // upper chain
        while (k >= lower_end && cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0.0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1); // last point equals the first

    if (hull.size() == 2) return from_segment(hull[0], hull[1]);

    convex_polygon poly;
    poly.verts = std::move(hull);
    std::size_t start = 0;
    for (std::size_t i = 1; i < poly.verts.size(); ++i)
        if (lex_less_yx(poly.verts[i], poly.verts[start])) start = i;
    std::rotate(poly.verts.begin(), poly.verts.begin() + start, poly.verts.end());
    return poly;
}

/// Translates a polygon; provenance is unaffected.
inline convex_polygon translate(convex_polygon p, point offset) {
    for (point& v : p.verts) v += offset;
    return p;
}

/// Minkowski sum P (+) Q by the linear-time polar-angle edge merge: both
/// boundaries' edges, already sorted by angle, are merged into one
/// sequence and reassembled tail-to-head from the sum of the canonical
/// start vertices. At most |P| + |Q| vertices; parallel edges combine and
/// their provenance concatenates. Segment addends take a splice shortcut
/// with identical results.
inline convex_polygon minkowski_sum(const convex_polygon& p, const convex_polygon& q) {
    if (p.size() == 1) return translate(q, p.verts[0]);
    if (q.size() == 1) return translate(p, q.verts[0]);
    if (q.size() == 2 && p.size() >= 3) return detail::sum_polygon_segment(p, q);
    if (p.size() == 2 && q.size() >= 3) return detail::sum_polygon_segment(q, p);
    return detail::merge_general(p, q);
}

/// How the united-set polygon is assembled from its diagonals.
enum class zonogon_mode { chain, fast };

/// Zonogon spanned by the given diagonals: `chain` folds minkowski_sum
/// left to right over the addends; `fast` sorts all edge vectors once and
/// assembles the boundary directly. Zero-width diagonals contribute a
/// constant offset. Both modes agree within tolerance and yield at most
/// two vertices per non-degenerate diagonal.
inline convex_polygon zonogon_from_diagonals(std::span<const diagonal> diagonals,
                                             zonogon_mode mode = zonogon_mode::fast) {
    if (diagonals.empty()) throw std::invalid_argument("zonogon_from_diagonals: no diagonals");

    auto diagonal_polygon = [](const diagonal& d) {
        if (d.is_degenerate()) return convex_polygon::from_point(d.p0);
        convex_polygon poly = convex_polygon::from_segment(d.p0, d.p1);
        const bool forward = poly.verts[0] == d.p0; // edge 0 walks lo -> hi?
        poly.tag_steps = {edge_step{d.source_index, forward}, edge_step{d.source_index, !forward}};
        poly.tag_offsets = {0, 1, 2};
        return poly;
    };

    convex_polygon result;
    if (mode == zonogon_mode::chain) {
        result = diagonal_polygon(diagonals[0]);
        for (std::size_t n = 1; n < diagonals.size(); ++n)
            result = minkowski_sum(result, diagonal_polygon(diagonals[n]));
    } else {
        point offset{0.0, 0.0};
        std::vector<detail::tagged_edge> edges;
        std::vector<edge_step> pool;
        edges.reserve(2 * diagonals.size());
        pool.reserve(2 * diagonals.size());
        for (const diagonal& d : diagonals) {
            if (d.is_degenerate()) {
                offset += d.p0;
                continue;
            }
            const point e = d.edge();
            const bool lo_first = lex_less_yx(d.p0, d.p1);
            offset += lo_first ? d.p0 : d.p1; // endpoint at the bottom vertex
            const auto idx = static_cast<std::uint32_t>(pool.size());
            pool.push_back({d.source_index, lo_first});
            pool.push_back({d.source_index, !lo_first});
            edges.push_back({lo_first ? e : -e, idx, idx + 1});
            edges.push_back({lo_first ? -e : e, idx + 1, idx + 2});
        }
        if (edges.empty()) {
            result = convex_polygon::from_point(offset);
        } else {
            std::sort(edges.begin(), edges.end(),
                      [&](const detail::tagged_edge& a, const detail::tagged_edge& b) {
                          if (detail::angle_less(a.vec, b.vec)) return true;
                          if (detail::angle_less(b.vec, a.vec)) return false;
                          // Deterministic tie order by generator.
                          return pool[a.tag_begin].source < pool[b.tag_begin].source;
                      });
            result = detail::assemble_from_edges(offset, std::move(edges), pool, true);
        }
    }

    result.start_config.clear();
    result.start_config.reserve(diagonals.size());
    point anchor{0.0, 0.0}; // sum of the per-generator bottom endpoints
    for (const diagonal& d : diagonals) {
        if (d.is_degenerate()) {
            result.start_config.push_back(endpoint_choice::any);
            anchor += d.p0;
        } else if (lex_less_yx(d.p0, d.p1)) {
            result.start_config.push_back(endpoint_choice::lo);
            anchor += d.p0;
        } else {
            result.start_config.push_back(endpoint_choice::hi);
            anchor += d.p1;
        }
    }
    if (!result.has_edge_tags()) result.tag_offsets = {0}; // point zonogon, zero edges

    // start_config must describe vertex 0. The assembly walks from
    // `anchor`, which is vertex 0 except under exact lexicographic ties;
    // if the canonical rotation moved it, replay the flips from the
    // anchor vertex around to vertex 0.
    if (result.size() > 1 && result.verts[0] != anchor) {
        std::size_t at = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < result.verts.size(); ++k) {
            const double d = std::abs(result.verts[k] - anchor);
            if (d < best) {
                best = d;
                at = k;
            }
        }
        for (std::size_t e = at; e < result.edge_count(); ++e)
            for (const edge_step& s : result.edge_tags(e))
                result.start_config[static_cast<std::size_t>(s.source)] =
                    s.to_hi ? endpoint_choice::hi : endpoint_choice::lo;
    }
    return result;
}

/// Tightest axis-aligned box around the polygon.
inline complex_box polygon_range(const convex_polygon& p) {
    double xmin = p.verts[0].real(), xmax = xmin, ymin = p.verts[0].imag(), ymax = ymin;
    for (const point& v : p.verts) {
        xmin = std::min(xmin, v.real());
        xmax = std::max(xmax, v.real());
        ymin = std::min(ymin, v.imag());
        ymax = std::max(ymax, v.imag());
    }
    return {interval{xmin, xmax}, interval{ymin, ymax}};
}

/// Where the origin sits relative to the closed polygon. Degenerate
/// polygons have no interior: containment reports `boundary`.
enum class origin_location { outside, boundary, interior };

inline origin_location locate_origin(const convex_polygon& p) {
    const double tol = geom_tol * p.diameter();
    if (p.size() == 1)
        return std::abs(p.verts[0]) <= tol ? origin_location::boundary : origin_location::outside;
    if (p.size() == 2)
        return dist_point_segment({0.0, 0.0}, p.verts[0], p.verts[1]) <= tol
                   ? origin_location::boundary
                   : origin_location::outside;
    double min_signed = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.verts.size(); ++i) {
        const point e = p.edge_vector(i);
        const double signed_dist = cross(e, -p.verts[i]) / std::abs(e);
        min_signed = std::min(min_signed, signed_dist);
    }
    if (min_signed < -tol) return origin_location::outside;
    if (min_signed > tol) return origin_location::interior;
    return origin_location::boundary;
}

inline bool contains_origin(const convex_polygon& p) {
    return locate_origin(p) != origin_location::outside;
}

/// Distance from a point to the closed polygon; zero inside.
inline double exterior_distance(const convex_polygon& p, point q) {
    if (p.size() == 1) return std::abs(q - p.verts[0]);
    if (p.size() == 2) return dist_point_segment(q, p.verts[0], p.verts[1]);
    bool inside = true;
    for (std::size_t i = 0; i < p.verts.size() && inside; ++i)
        inside = cross(p.edge_vector(i), q - p.verts[i]) >= 0.0;
    if (inside) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.verts.size(); ++i)
        best = std::min(best, dist_point_segment(q, p.verts[i], p.verts[(i + 1) % p.verts.size()]));
    return best;
}

/// Exact amplitude range over the polygon: the maximum is a vertex norm;
/// the minimum is zero when the origin is inside, otherwise the distance
/// from the origin to the nearest boundary edge.
inline interval polygon_amplitude(const convex_polygon& p) {
    double max_amp = 0.0;
    for (const point& v : p.verts) max_amp = std::max(max_amp, std::hypot(v.real(), v.imag()));
    double min_amp;
    if (contains_origin(p)) {
        min_amp = 0.0;
    } else if (p.size() == 1) {
        min_amp = std::abs(p.verts[0]);
    } else if (p.size() == 2) {
        min_amp = dist_point_segment({0.0, 0.0}, p.verts[0], p.verts[1]);
    } else {
        min_amp = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < p.verts.size(); ++i)
            min_amp = std::min(min_amp, dist_point_segment({0.0, 0.0}, p.verts[i],
                                                           p.verts[(i + 1) % p.verts.size()]));
    }
    min_amp = std::min(min_amp, max_amp); // guards degenerate rounding
    return {min_amp, max_amp};
}

/// Exact argument range over the polygon, undefined when the origin lies
/// in the closed set. Extremes are attained at vertices.
inline std::optional<arc> polygon_argument(const convex_polygon& p) {
    if (contains_origin(p)) return std::nullopt;
    std::vector<double> angles;
    angles.reserve(p.verts.size());
    for (const point& v : p.verts) angles.push_back(std::atan2(v.imag(), v.real()));
    return minimal_arc(angles);
}

/// Normalization checks used by tests: counter-clockwise, convex within
/// tolerance, distinct consecutive vertices, canonical start vertex.
inline bool is_normalized_convex(const convex_polygon& p) {
    if (p.verts.empty()) return false;
    if (p.size() == 1) return true;
    const double tol = geom_tol * p.diameter();
    for (std::size_t i = 1; i < p.verts.size(); ++i)
        if (!lex_less_yx(p.verts[0], p.verts[i]) && p.verts[0] != p.verts[i]) return false;
    if (p.size() == 2) return std::abs(p.verts[1] - p.verts[0]) > tol;
    for (std::size_t i = 0; i < p.verts.size(); ++i) {
        const point a = p.edge_vector(i);
        const point b = p.edge_vector((i + 1) % p.verts.size());
        if (std::abs(a) <= tol) return false;
        if (cross(a, b) < -geom_tol * std::abs(a) * std::abs(b)) return false;
    }
    return p.signed_area() >= 0.0;
}

} // namespace idft
