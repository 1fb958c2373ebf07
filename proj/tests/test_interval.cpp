#include <catch2/catch_amalgamated.hpp>

#include "idft/interval.hpp"
#include "test_helpers.hpp"

using idft::interval;
using testutil::rng_t;

namespace {

// Inclusive grid sampling of op over x times y: the independent oracle
// for the closed-form endpoint rules.
template <typename Op>
interval sampled_range(const interval& x, const interval& y, Op op, int grid = 200) {
    const auto grid_point = [grid](const interval& z, int i) {
        if (i == 0) return z.lo();
        if (i == grid) return z.hi(); // exact corners; no rounding past the ends
        return z.lo() + (z.width() * i) / grid;
    };
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i <= grid; ++i) {
        const double a = grid_point(x, i);
        for (int j = 0; j <= grid; ++j) {
            const double v = op(a, grid_point(y, j));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

interval random_nonzero(rng_t& rng) {
    for (;;) {
        const interval y = testutil::random_interval(rng);
        if (!y.contains(0.0)) return y;
    }
}

} // namespace

TEST_CASE("interval construction enforces lo <= hi") {
    REQUIRE_THROWS_AS(interval(2.0, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(interval(std::nan(""), 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(interval(std::nan("")), std::invalid_argument);
    REQUIRE_NOTHROW(interval(1.0, 1.0));
}

TEST_CASE("interval queries") {
    REQUIRE(interval(0.0, 2.0).mid() == 1.0);
    REQUIRE(interval(-1.0, 3.0).rad() == 2.0);
    REQUIRE(interval(-1.0, 3.0).width() == 4.0);
    REQUIRE(interval(0.0, 1.0).contains(0.5));
    REQUIRE(interval(0.0, 1.0).contains(0.0));
    REQUIRE_FALSE(interval(0.0, 1.0).contains(1.0 + 1e-12));
}

TEST_CASE("arithmetic endpoint formulas") {
    REQUIRE(interval(1, 2) + interval(3, 5) == interval(4, 7));
    // x - x widens to [-w, w]: the components are non-interactive.
    REQUIRE(interval(0, 1) - interval(0, 1) == interval(-1, 1));
    REQUIRE(interval(-1, 2) * interval(3, 4) == interval(-4, 8));
    REQUIRE(interval(1, 2) / interval(4, 5) == interval(1, 2) * interval(0.2, 0.25));
    REQUIRE_THROWS_AS(interval(1, 2) / interval(-1, 1), std::domain_error);
    REQUIRE_THROWS_AS(interval(1, 2) / interval(0, 0), std::domain_error);
    REQUIRE_THROWS_AS(interval(1, 2) / interval(0, 3), std::domain_error);
}

TEST_CASE("scalar scaling is the exact range") {
    REQUIRE(2.0 * interval(-1, 3) == interval(-2, 6));
    REQUIRE(-2.0 * interval(-1, 3) == interval(-6, 2));
    REQUIRE(0.0 * interval(-1, 3) == interval(0, 0));
}

TEST_CASE("binary operations match dense sampling of the united set") {
    rng_t rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const interval x = testutil::random_interval(rng, 0.1);
        const interval y = testutil::random_interval(rng, 0.1);
        const interval ynz = random_nonzero(rng);

        const interval sum = x + y;
        const interval sampled_sum = sampled_range(x, y, [](double a, double b) { return a + b; });
        REQUIRE(sum.contains(sampled_sum));
        REQUIRE(sampled_sum.lo() <= sum.lo() + 1e-12);
        REQUIRE(sampled_sum.hi() >= sum.hi() - 1e-12);

        const interval diff = x - y;
        const interval sampled_diff = sampled_range(x, y, [](double a, double b) { return a - b; });
        REQUIRE(diff.contains(sampled_diff));
        REQUIRE(sampled_diff.lo() <= diff.lo() + 1e-12);
        REQUIRE(sampled_diff.hi() >= diff.hi() - 1e-12);

        const interval prod = x * y;
        const interval sampled_prod = sampled_range(x, y, [](double a, double b) { return a * b; });
        REQUIRE(prod.contains(sampled_prod));
        REQUIRE(sampled_prod.lo() <= prod.lo() + 1e-12);
        REQUIRE(sampled_prod.hi() >= prod.hi() - 1e-12);

        const interval quot = x / ynz;
        const interval sampled_quot =
            sampled_range(x, ynz, [](double a, double b) { return a / b; });
        const double tol = 1e-12 * std::max({1.0, std::abs(quot.lo()), std::abs(quot.hi())});
        REQUIRE(quot.lo() - tol <= sampled_quot.lo());
        REQUIRE(quot.hi() + tol >= sampled_quot.hi());
        REQUIRE(sampled_quot.lo() <= quot.lo() + tol);
        REQUIRE(sampled_quot.hi() >= quot.hi() - tol);
    }
}

TEST_CASE("inclusion monotonicity of the four operations") {
    rng_t rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const interval x = testutil::random_interval(rng);
        const interval y = testutil::random_interval(rng);
        const interval xs = testutil::random_subinterval(rng, x);
        const interval ys = testutil::random_subinterval(rng, y);
        REQUIRE((x + y).contains(xs + ys));
        REQUIRE((x - y).contains(xs - ys));
        REQUIRE((x * y).contains(xs * ys));
        if (!y.contains(0.0)) {
            const interval ysnz = testutil::random_subinterval(rng, y);
            REQUIRE((x / y).contains(x / ysnz));
            REQUIRE((x / y).contains(xs / ysnz));
        }
    }
}

TEST_CASE("degenerate operands reduce to real arithmetic") {
    rng_t rng(5150);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = val(rng), b = val(rng);
        REQUIRE(interval(a) + interval(b) == interval(a + b));
        REQUIRE(interval(a) - interval(b) == interval(a - b));
        REQUIRE(interval(a) * interval(b) == interval(a * b));
        if (b != 0.0) REQUIRE(interval(a) / interval(b) == interval(a / b));
    }
}

TEST_CASE("sign-case multiplication equals the four-product rule") {
    rng_t rng(424242);
    for (int trial = 0; trial < 500; ++trial) {
        const interval x = testutil::random_interval(rng, 0.15);
        const interval y = testutil::random_interval(rng, 0.15);
        REQUIRE(idft::detail::mul_by_sign(x, y) == x * y);
    }
    // sign boundary cases
    const interval zero(0.0, 0.0);
    REQUIRE(idft::detail::mul_by_sign(zero, interval(-3, 4)) == zero * interval(-3, 4));
    REQUIRE(idft::detail::mul_by_sign(interval(-2, 0), interval(0, 5)) ==
            interval(-2, 0) * interval(0, 5));
}

TEST_CASE("hull") {
    REQUIRE(idft::hull(interval(0, 1), interval(3, 4)) == interval(0, 4));
    REQUIRE(idft::hull(interval(0, 5), interval(1, 2)) == interval(0, 5));
}
