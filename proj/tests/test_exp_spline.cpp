#include "fracwave/exp_spline.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace fracwave;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("stencil values at p = h = 1")
{
    const SplineGrid g(5.0, 5, 1.0);
    REQUIRE(g.h() == 1.0);
    const auto st = stencils(g);
    // sinh(1) - 1 = 0.1752011936, 2(cosh(1) - sinh(1)) = 0.7357588823
    CHECK(st.v0 == 1.0);
    CHECK(st.v1 == doctest::Approx(0.2381231105).epsilon(1e-9));
    CHECK(st.d1 == doctest::Approx(0.7381231105).epsilon(1e-9));
    CHECK(st.w0 == doctest::Approx(-3.1945280495).epsilon(1e-9));
    CHECK(st.w1 == doctest::Approx(1.5972640247).epsilon(1e-9));
    CHECK(st.w0 == -2.0 * st.w1);
}

TEST_CASE("cubic spline limit")
{
    const double h = 0.05;
    const auto st = stencils(SplineGrid(1.0, 20, 1e-4));
    CHECK(std::abs(st.v1 - 0.25) <= 1e-6);
    CHECK(rel(st.v1, 0.25) <= 1e-6);
    CHECK(rel(st.d1, 3.0 / (4.0 * h)) <= 1e-6);
    CHECK(rel(st.w1, 3.0 / (2.0 * h * h)) <= 1e-6);
    CHECK(rel(st.w0, -3.0 / (h * h)) <= 1e-6);

    const auto unit = stencils(SplineGrid(10.0, 10, 1e-6));
    CHECK(knot_row(-1, KnotDerivative::second, unit) == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(knot_row(0, KnotDerivative::second, unit) == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(knot_row(1, KnotDerivative::second, unit) == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("series and direct formulas agree at the crossover")
{
    // just below the threshold the series branch is taken
    const SplineGrid g(1.0, 100, 1.0 - 1e-9);
    REQUIRE(g.p() * g.h() < kSplineSeriesThreshold);
    const auto series = stencils(g);
    const auto direct = stencils_direct(g);
    CHECK(rel(series.v1, direct.v1) <= 1e-10);
    CHECK(rel(series.d1, direct.d1) <= 1e-10);
    CHECK(rel(series.w1, direct.w1) <= 1e-10);

    for (double x : {1e-8, 1e-5, 1e-3, 0.00999}) {
        CHECK(rel(sinh_minus_x(x), x * x * x / 6.0 * (1.0 + x * x / 20.0 + x * x * x * x / 840.0)) <= 1e-12);
        CHECK(rel(x_cosh_minus_sinh(x), x * x * x / 3.0 * (1.0 + x * x / 10.0 + x * x * x * x / 280.0)) <= 1e-12);
        CHECK(rel(cosh_minus_one(x), x * x / 2.0 * (1.0 + x * x / 12.0 + x * x * x * x / 360.0)) <= 1e-12);
    }
}

TEST_CASE("tension must be positive")
{
    CHECK_THROWS_AS(SplineGrid(1.0, 10, 0.0), std::domain_error);
    CHECK_THROWS_AS(SplineGrid(1.0, 10, -1.0), std::domain_error);
    CHECK_THROWS_AS(SplineGrid(0.0, 10, 1.0), std::domain_error);
    CHECK_THROWS_AS(SplineGrid(1.0, 0, 1.0), std::domain_error);
}

TEST_CASE("basis values at knots")
{
    const SplineGrid g(5.0, 5, 1.0);
    CHECK(eval_B(2, g.knot(2), g) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eval_B(2, g.knot(4), g) == 0.0);
    CHECK(eval_B(2, g.knot(0), g) == 0.0);
    CHECK(eval_B(2, g.knot(3), g) == doctest::Approx(stencils(g).v1).epsilon(1e-13));
    CHECK(eval_B(-1, 0.0, g) == doctest::Approx(stencils(g).v1).epsilon(1e-13));
    CHECK(eval_B(6, 5.0, g) == doctest::Approx(stencils(g).v1).epsilon(1e-13));
    CHECK_THROWS_AS(eval_B(-2, 0.0, g), std::domain_error);
    CHECK_THROWS_AS(eval_B(7, 0.0, g), std::domain_error);
    CHECK_THROWS_AS(eval_B(0, 5.5, g), std::domain_error);

    const SplineGrid grid(1.0, 20, 1.0);
    CHECK(grid.h() * grid.n_h() == doctest::Approx(grid.ell()).epsilon(1e-14));
    CHECK(grid.basis_size() == 23);
}

TEST_CASE("knot rows follow the collocation sign convention")
{
    const auto st = stencils(SplineGrid(5.0, 5, 1.0));
    CHECK(knot_row(-1, KnotDerivative::value, st) == doctest::Approx(0.2381231105));
    CHECK(knot_row(0, KnotDerivative::value, st) == 1.0);
    CHECK(knot_row(1, KnotDerivative::value, st) == doctest::Approx(0.2381231105));
    CHECK(knot_row(-1, KnotDerivative::first, st) == doctest::Approx(-0.7381231105));
    CHECK(knot_row(0, KnotDerivative::first, st) == 0.0);
    CHECK(knot_row(1, KnotDerivative::first, st) == doctest::Approx(0.7381231105));
    CHECK_THROWS_AS(knot_row(2, KnotDerivative::value, st), std::domain_error);

    // derivative signs against central differences of the basis itself
    const SplineGrid g(5.0, 5, 1.0);
    const double d = 1e-5;
    const double x2 = g.knot(2);
    const double left = (eval_B(1, x2 + d, g) - eval_B(1, x2 - d, g)) / (2 * d);
    const double right = (eval_B(3, x2 + d, g) - eval_B(3, x2 - d, g)) / (2 * d);
    CHECK(left == doctest::Approx(knot_row(-1, KnotDerivative::first, st)).epsilon(1e-8));
    CHECK(right == doctest::Approx(knot_row(1, KnotDerivative::first, st)).epsilon(1e-8));
    const double curv =
        (eval_B(2, x2 + d, g) - 2 * eval_B(2, x2, g) + eval_B(2, x2 - d, g)) / (d * d);
    CHECK(curv == doctest::Approx(st.w0).epsilon(1e-5));
}

TEST_CASE("continuity audit over random tensions")
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> log_ph(std::log(1e-3), std::log(3.0));
    std::uniform_real_distribution<double> log_h(std::log(0.01), std::log(1.0));
    for (int trial = 0; trial < 10; ++trial) {
        const double h = std::exp(log_h(rng));
        const double ph = std::exp(log_ph(rng));
        const int n_h = 8;
        const SplineGrid g(h * n_h, n_h, ph / h);
        const auto st = stencils(g);
        const int j = 4;
        const double expected[5] = {0.0, st.v1, 1.0, st.v1, 0.0};
        for (int o = -2; o <= 2; ++o) {
            CHECK(std::abs(eval_B(j, g.knot(j + o), g) - expected[o + 2]) <= 1e-9);
        }
        if (ph >= 0.1) {
            // closed-form pieces are usable once ph is moderate
            const auto coeffs = piece_coeffs(g);
            for (int o = -2; o <= 2; ++o) {
                CHECK(std::abs(eval_B_pieces(j, g.knot(j + o), g, coeffs) - expected[o + 2]) <=
                      1e-9);
            }
            for (int s = 1; s < 40; ++s) {
                const double x = g.knot(j - 2) + s * 4.0 * h / 40.0;
                CHECK(std::abs(eval_B_pieces(j, x, g, coeffs) - eval_B(j, x, g)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("basis is C2 across piece boundaries")
{
    for (double ph : {0.05, 0.7, 2.5}) {
        const double h = 0.1;
        const SplineGrid g(1.0, 10, ph / h);
        const int j = 5;
        const double step = 1e-3 * h;
        auto B = [&](double x) { return eval_B(j, x, g); };
        for (int o = -2; o <= 2; ++o) {
            const double xb = g.knot(j + o);
            const double value_jump = std::abs(B(xb + step) - B(xb - step));
            const double d_right = (B(xb + step) - B(xb)) / step;
            const double d_left = (B(xb) - B(xb - step)) / step;
            const double dd_right = (B(xb + 2 * step) - 2 * B(xb + step) + B(xb)) / (step * step);
            const double dd_left = (B(xb) - 2 * B(xb - step) + B(xb - 2 * step)) / (step * step);
            const double scale = 1.0 / (h * h * h);
            CHECK(value_jump <= 4.0 * step / h);
            CHECK(std::abs(d_right - d_left) <= 10.0 * step / (h * h));
            CHECK(std::abs(dd_right - dd_left) <= 10.0 * step * scale);
        }
    }
}
