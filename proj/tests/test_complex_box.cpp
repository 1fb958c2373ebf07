#include <catch2/catch_amalgamated.hpp>

#include "idft/complex_box.hpp"
#include "test_helpers.hpp"

using idft::arc;
using idft::complex_box;
using idft::interval;
using idft::point;
using testutil::rng_t;

namespace {

complex_box random_box(rng_t& rng, double degenerate_chance = 0.0) {
    return {testutil::random_interval(rng, degenerate_chance),
            testutil::random_interval(rng, degenerate_chance)};
}

// Extremes of |z| and arg z over a box lie on its boundary (or at the
// origin when inside), so dense inclusive edge sampling is an oracle.
std::vector<point> boundary_samples(const complex_box& z, int per_edge) {
    const auto v = z.vertices(); // (lo,lo) (hi,lo) (lo,hi) (hi,hi)
    const std::array<std::pair<point, point>, 4> edges{
        std::pair{v[0], v[1]}, {v[1], v[3]}, {v[3], v[2]}, {v[2], v[0]}};
    std::vector<point> pts;
    pts.reserve(static_cast<std::size_t>(4 * (per_edge + 1)));
    for (const auto& [a, b] : edges)
        for (int i = 0; i <= per_edge; ++i)
            pts.push_back(a + (static_cast<double>(i) / per_edge) * (b - a));
    return pts;
}

interval sampled_amplitude(const complex_box& z, int per_edge = 4000) {
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (const point& p : boundary_samples(z, per_edge)) {
        const double a = std::abs(p);
        lo = std::min(lo, a);
        hi = std::max(hi, a);
    }
    if (z.contains_origin()) lo = 0.0; // minimum attained at the origin itself
    return {lo, hi};
}

} // namespace

TEST_CASE("complex box addition and subtraction") {
    const complex_box a{interval(0, 1), interval(0, 1)};
    const complex_box b{interval(2, 3), interval(-1, 0)};
    REQUIRE(a + b == complex_box{interval(2, 4), interval(-1, 1)});

    const complex_box z{interval(1, 2), interval(1, 2)};
    REQUIRE(z - z == complex_box{interval(-1, 1), interval(-1, 1)});

    const complex_box origin{interval(0, 0), interval(0, 0)};
    REQUIRE(z + origin == z);
}

TEST_CASE("vertex-pair evaluation agrees with componentwise rules") {
    rng_t rng(90210);
    for (int trial = 0; trial < 200; ++trial) {
        const complex_box z = random_box(rng, 0.1);
        const complex_box w = random_box(rng, 0.1);
        REQUIRE(idft::detail::add_sub_by_vertices(false, z, w) == z + w);
        REQUIRE(idft::detail::add_sub_by_vertices(true, z, w) == z - w);
    }
}

TEST_CASE("box addition is inclusion monotonic") {
    rng_t rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const complex_box z = random_box(rng);
        const complex_box w = random_box(rng);
        const complex_box zs{testutil::random_subinterval(rng, z.re),
                             testutil::random_subinterval(rng, z.im)};
        const complex_box ws{testutil::random_subinterval(rng, w.re),
                             testutil::random_subinterval(rng, w.im)};
        const complex_box sum = z + w, subsum = zs + ws;
        REQUIRE(sum.re.contains(subsum.re));
        REQUIRE(sum.im.contains(subsum.im));
        const complex_box diff = z - w, subdiff = zs - ws;
        REQUIRE(diff.re.contains(subdiff.re));
        REQUIRE(diff.im.contains(subdiff.im));
    }
}

TEST_CASE("scale_diagonal") {
    SECTION("real-axis generator") {
        const idft::diagonal d = idft::scale_diagonal(interval(-2, 0), 1.0, 0.0);
        REQUIRE(d.p0 == point(-2.0, 0.0));
        REQUIRE(d.p1 == point(0.0, 0.0));
    }
    SECTION("zero-width generator degenerates to a point") {
        const idft::diagonal d = idft::scale_diagonal(interval(3.0), 0.5, -0.25);
        REQUIRE(d.is_degenerate());
        REQUIRE(d.p0 == point(1.5, -0.75));
    }
    SECTION("eighth-turn coefficient") {
        const double u = std::cos(idft::pi / 4), v = -std::sin(idft::pi / 4);
        const idft::diagonal d = idft::scale_diagonal(interval(1, 3), u, v);
        REQUIRE(d.p0.real() == Catch::Approx(0.7071).margin(1e-4));
        REQUIRE(d.p0.imag() == Catch::Approx(-0.7071).margin(1e-4));
        REQUIRE(d.p1.real() == Catch::Approx(2.1213).margin(1e-4));
        REQUIRE(d.p1.imag() == Catch::Approx(-2.1213).margin(1e-4));
    }
}

TEST_CASE("diagonal bounding box equals the rectangular product") {
    rng_t rng(246810);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const interval x = testutil::random_interval(rng, 0.1);
        const double u = coeff(rng), v = coeff(rng);
        const idft::diagonal d = idft::scale_diagonal(x, u, v);
        const complex_box box = d.bounding_box();
        REQUIRE(box == complex_box{u * x, v * x});
        // The diagonal is a subset of its box: dependence preserved vs discarded.
        REQUIRE(box.contains(d.p0));
        REQUIRE(box.contains(d.p1));
        REQUIRE(box.contains(0.5 * (d.p0 + d.p1)));
    }
}

TEST_CASE("box amplitude: the four origin cases") {
    SECTION("origin outside") {
        const interval amp = idft::box_amplitude({interval(1, 2), interval(1, 2)});
        REQUIRE(amp.lo() == Catch::Approx(std::sqrt(2.0)));
        REQUIRE(amp.hi() == Catch::Approx(2.0 * std::sqrt(2.0)));
    }
    SECTION("origin inside") {
        const interval amp = idft::box_amplitude({interval(-1, 1), interval(-1, 1)});
        REQUIRE(amp.lo() == 0.0);
        REQUIRE(amp.hi() == Catch::Approx(std::sqrt(2.0)));
    }
    SECTION("origin in the real span only") {
        const interval amp = idft::box_amplitude({interval(-1, 1), interval(2, 3)});
        REQUIRE(amp.lo() == 2.0);
        REQUIRE(amp.hi() == Catch::Approx(std::sqrt(10.0)));
    }
    SECTION("origin in the imaginary span only") {
        const interval amp = idft::box_amplitude({interval(2, 3), interval(-1, 1)});
        REQUIRE(amp.lo() == 2.0);
        REQUIRE(amp.hi() == Catch::Approx(std::sqrt(10.0)));
    }
}

TEST_CASE("box amplitude matches boundary sampling") {
    rng_t rng(112358);
    for (int trial = 0; trial < 60; ++trial) {
        const complex_box z = random_box(rng, 0.1);
        const interval amp = idft::box_amplitude(z);
        const interval sampled = sampled_amplitude(z);
        REQUIRE(amp.lo() <= sampled.lo() + 1e-12);
        REQUIRE(amp.hi() >= sampled.hi() - 1e-12);
        REQUIRE(sampled.lo() <= amp.lo() + 1e-5);
        REQUIRE(sampled.hi() >= amp.hi() - 1e-5);
    }
}

TEST_CASE("box argument examples") {
    SECTION("first-quadrant box") {
        const auto a = idft::box_argument({interval(1, 2), interval(1, 2)});
        REQUIRE(a.has_value());
        REQUIRE_FALSE(a->wrapped);
        REQUIRE(a->lo == Catch::Approx(std::atan2(1.0, 2.0)));
        REQUIRE(a->hi == Catch::Approx(std::atan2(2.0, 1.0)));
    }
    SECTION("origin inside is undefined") {
        REQUIRE_FALSE(idft::box_argument({interval(-1, 1), interval(-1, 1)}).has_value());
    }
    SECTION("origin on the boundary is undefined") {
        REQUIRE_FALSE(idft::box_argument({interval(0, 1), interval(0, 1)}).has_value());
        REQUIRE_FALSE(idft::box_argument({interval(-1, 1), interval(0, 2)}).has_value());
    }
    SECTION("positive real point") {
        const auto a = idft::box_argument({interval(1, 1), interval(0, 0)});
        REQUIRE(a.has_value());
        REQUIRE(a->lo == 0.0);
        REQUIRE(a->hi == 0.0);
    }
    SECTION("imaginary-axis point uses atan2 semantics") {
        const auto up = idft::box_argument({interval(0, 0), interval(1, 2)});
        REQUIRE(up.has_value());
        REQUIRE(up->lo == Catch::Approx(idft::pi / 2));
        REQUIRE(up->hi == Catch::Approx(idft::pi / 2));
    }
    SECTION("box straddling the negative real axis wraps") {
        const auto a = idft::box_argument({interval(-2, -1), interval(-1, 1)});
        REQUIRE(a.has_value());
        REQUIRE(a->wrapped);
        REQUIRE(a->lo == Catch::Approx(std::atan2(1.0, -1.0)));   //  3*pi/4
        REQUIRE(a->hi == Catch::Approx(std::atan2(-1.0, -1.0)));  // -3*pi/4
        REQUIRE(a->lo > a->hi);
        REQUIRE(a->contains(idft::pi));
        REQUIRE_FALSE(a->contains(0.0));
    }
}

TEST_CASE("box argument contains all boundary directions") {
    rng_t rng(13579);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const complex_box z = random_box(rng);
        const auto a = idft::box_argument(z);
        if (!a) {
            REQUIRE(z.contains_origin());
            continue;
        }
        ++checked;
        bool lo_attained = false, hi_attained = false;
        for (const point& p : boundary_samples(z, 500)) {
            const double theta = std::atan2(p.imag(), p.real());
            REQUIRE(a->contains(theta, 1e-9));
            lo_attained = lo_attained || std::abs(std::remainder(theta - a->lo, 2 * idft::pi)) < 1e-7;
            hi_attained = hi_attained || std::abs(std::remainder(theta - a->hi, 2 * idft::pi)) < 1e-7;
        }
        REQUIRE(lo_attained);
        REQUIRE(hi_attained);
    }
    REQUIRE(checked >= 30);
}

TEST_CASE("minimal arc width stays below pi for origin-avoiding boxes") {
    rng_t rng(8642);
    for (int trial = 0; trial < 200; ++trial) {
        const complex_box z = random_box(rng);
        const auto a = idft::box_argument(z);
        if (a) REQUIRE(a->width() < idft::pi);
    }
}
