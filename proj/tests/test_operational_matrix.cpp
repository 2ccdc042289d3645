#include "fracwave/errors.hpp"
#include "fracwave/operational_matrix.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

using namespace fracwave;

namespace {

// printed 4-decimal J^{0.5} for k = 1, M = 1
constexpr double kGoldenJ[6][6] = {
    {0.5319, -0.0209, -0.1715, 0.4407, 0.0180, 0.0821},
    {-0.0209, 0.1651, 0.0991, 0.0180, 0.0061, 0.0148},
    {0.1715, -0.0991, 0.2243, -0.0821, -0.0148, -0.0449},
    {0, 0, 0, 0.5319, -0.0209, -0.1715},
    {0, 0, 0, -0.0209, 0.1651, 0.0991},
    {0, 0, 0, 0.1715, -0.0991, 0.2243},
};

}  // namespace

TEST_CASE("Block-Pulse fractional integration matrix")
{
    const auto f1 = build_bpf_frac_matrix(1.0, 4);
    CHECK(f1(0, 0) == doctest::Approx(0.125).epsilon(1e-15));
    for (int c = 1; c < 4; ++c) {
        CHECK(f1(0, c) == doctest::Approx(0.25).epsilon(1e-15));
    }
    CHECK(build_bpf_frac_matrix(0.5, 2)(0, 0) ==
          doctest::Approx(1.0 / (std::sqrt(2.0) * std::tgamma(2.5))).epsilon(1e-14));
    CHECK(build_bpf_frac_matrix(0.5, 2)(0, 0) == doctest::Approx(0.53192).epsilon(1e-5));
    const auto f11 = build_bpf_frac_matrix(0.5, 1);
    REQUIRE(f11.rows() == 1);
    CHECK(f11(0, 0) == doctest::Approx(1.0 / std::tgamma(2.5)).epsilon(1e-14));

    const int n = 9;
    const auto f = build_bpf_frac_matrix(0.3, n);
    for (int r = 0; r < n; ++r) {
        CHECK(f(r, r) == doctest::Approx(1.0 / (std::pow(n, 0.3) * std::tgamma(2.3))));
        for (int c = 0; c < n; ++c) {
            if (c < r) {
                CHECK(f(r, c) == 0.0);
            } else if (r > 0 && c > 0) {
                CHECK(f(r, c) == f(r - 1, c - 1));
            }
        }
    }
    CHECK_THROWS_AS(build_bpf_frac_matrix(0.0, 3), std::domain_error);
    CHECK_THROWS_AS(build_bpf_frac_matrix(1.5, 3), std::domain_error);
    CHECK_THROWS_AS(build_bpf_frac_matrix(0.5, 0), std::domain_error);
}

TEST_CASE("wavelet-to-Block-Pulse matrix")
{
    CHECK(build_q(WaveletGrid(0, 0))(0, 0) == doctest::Approx(1.0).epsilon(1e-15));

    const WaveletGrid g(1, 1);
    const auto q = build_q(g);
    CHECK((q.block(0, 0, 3, 3) - q.block(3, 3, 3, 3)).cwiseAbs().maxCoeff() <= 1e-14);
    for (int c = 0; c < 3; ++c) {
        CHECK(q(0, c) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    }
    // Psi(1/12) is the first column
    CHECK((eval_wavelet_vector(g, 1.0 / 12.0) - q.col(0)).cwiseAbs().maxCoeff() <= 1e-12);

    for (int k = 0; k <= 3; ++k) {
        for (int M = 0; M <= 2; ++M) {
            const WaveletGrid grid(k, M);
            const auto qq = build_q(grid);
            for (int r = 0; r < grid.size(); ++r) {
                for (int c = 0; c < grid.size(); ++c) {
                    if (grid.block_of(r) != grid.block_of(c)) {
                        CHECK(qq(r, c) == 0.0);
                    }
                }
            }
            // midpoint identity: stacked Psi(t_i) rows form q^T
            for (int i = 0; i < grid.size(); ++i) {
                const auto psi = eval_wavelet_vector(grid, grid.midpoint(i));
                CHECK((psi - qq.col(i)).cwiseAbs().maxCoeff() <= 1e-12);
            }
        }
    }
}

TEST_CASE("blockwise inversion")
{
    const WaveletGrid g(2, 1);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(g.size(), g.size());
    CHECK((invert_block_diag(eye, g) - eye).cwiseAbs().maxCoeff() == 0.0);
    CHECK(invert_block_diag(build_q(WaveletGrid(0, 0)), WaveletGrid(0, 0))(0, 0) ==
          doctest::Approx(1.0));

    const WaveletGrid g11(1, 1);
    const auto q = build_q(g11);
    const auto inv = invert_block_diag(q, g11);
    CHECK((inv - q.inverse()).cwiseAbs().maxCoeff() <= 1e-12);

    for (int k = 0; k <= 4; ++k) {
        for (int M = 0; M <= 3; ++M) {
            const WaveletGrid grid(k, M);
            const auto qq = build_q(grid);
            const auto qi = invert_block_diag(qq, grid);
            const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(grid.size(), grid.size());
            const double err = (qq * qi - id).cwiseAbs().rowwise().sum().maxCoeff();
            CHECK(err <= 1e-12 * grid.modes());
        }
    }

    Eigen::MatrixXd bad = build_q(g);
    bad.block(6, 6, 3, 3).setZero();
    try {
        invert_block_diag(bad, g);
        FAIL("expected a singular block");
    } catch (const SingularMatrixError& e) {
        CHECK(e.block_index() == 2);
    }
}

TEST_CASE("golden J^0.5 for k=1, M=1")
{
    const auto ops = build_j(0.5, WaveletGrid(1, 1));
    double worst = 0.0;
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
            worst = std::max(worst, std::abs(ops.j(r, c) - kGoldenJ[r][c]));
        }
    }
    CHECK(worst <= 5e-5);
    CHECK(ops.j(3, 5) == doctest::Approx(-0.1715).epsilon(3e-4));
    CHECK(ops.j.block(3, 0, 3, 3).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("J structure")
{
    CHECK(build_j(1.0, WaveletGrid(0, 0)).j(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double mu : {0.3, 0.5, 0.8, 1.0}) {
        for (int k = 0; k <= 3; ++k) {
            for (int M = 0; M <= 2; ++M) {
                const WaveletGrid grid(k, M);
                const auto ops = build_j(mu, grid);
                CHECK((ops.j * ops.q - ops.q * ops.f).cwiseAbs().maxCoeff() <= 1e-10);
                for (int r = 0; r < grid.size(); ++r) {
                    for (int c = 0; c < grid.size(); ++c) {
                        if (grid.block_of(c) < grid.block_of(r)) {
                            CHECK(std::abs(ops.j(r, c)) <= 1e-14);
                        }
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(build_j(0.0, WaveletGrid(1, 1)), std::domain_error);
}

TEST_CASE("Riemann-Liouville oracle against closed forms")
{
    const std::vector<double> none;
    CHECK(rl_integral_oracle([](double) { return 1.0; }, none, 0.5, 1.0) ==
          doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-12));
    CHECK(rl_integral_oracle([](double) { return 1.0; }, none, 0.5, 1.0) ==
          doctest::Approx(1.12837).epsilon(1e-5));
    CHECK(rl_integral_oracle([](double x) { return x; }, none, 1.0, 0.5) ==
          doctest::Approx(0.125).epsilon(1e-14));
    CHECK(rl_integral_oracle([](double x) { return x; }, none, 0.5, 1.0) ==
          doctest::Approx(0.75225).epsilon(1e-5));

    // monomial rule J^mu t^beta = Gamma(beta+1)/Gamma(beta+1+mu) t^{beta+mu}
    for (double mu : {0.1, 0.3, 0.5, 0.7, 1.0}) {
        for (double beta : {0.0, 1.0, 2.0, 3.5}) {
            for (double t : {0.05, 0.37, 1.0}) {
                const double exact =
                    std::tgamma(beta + 1.0) / std::tgamma(beta + 1.0 + mu) * std::pow(t, beta + mu);
                const double got =
                    rl_integral_oracle([beta](double x) { return std::pow(x, beta); }, none, mu, t);
                CHECK(std::abs(got - exact) <= 1e-12);
            }
        }
    }

    // step function switching off at 0.4
    const std::array<double, 1> bp{0.4};
    for (double mu : {0.3, 0.5, 1.0}) {
        const double t = 0.9;
        const double exact = (std::pow(t, mu) - std::pow(t - 0.4, mu)) / std::tgamma(mu + 1.0);
        const double got = rl_integral_oracle([](double x) { return x < 0.4 ? 1.0 : 0.0; }, bp, mu, t);
        CHECK(std::abs(got - exact) <= 1e-12);
    }
    CHECK_THROWS_AS(rl_integral_oracle([](double) { return 1.0; }, none, 0.5, 0.0),
                    std::domain_error);
}

TEST_CASE("operational matrix error follows the wavelet scaling law")
{
    // Absolute midpoint error scales like 2^{k(1/2 - mu)}: flat for mu = 1/2,
    // growing below, shrinking above.
    for (int M : {1, 2}) {
        for (double mu : {0.3, 0.5, 1.0}) {
            std::vector<double> errs;
            for (int k = 1; k <= 3; ++k) {
                errs.push_back(oracle_midpoint_error(build_j(mu, WaveletGrid(k, M))));
            }
            for (std::size_t i = 1; i < errs.size(); ++i) {
                CHECK(errs[i] / errs[i - 1] == doctest::Approx(std::pow(2.0, 0.5 - mu)).epsilon(1e-6));
            }
            if (mu == 1.0) {
                CHECK(errs[1] < errs[0]);
                CHECK(errs[2] < errs[1]);
            }
        }
    }
}

TEST_CASE("J^1 applied twice tracks the double integral of the constant wavelet")
{
    std::vector<double> errs;
    for (int k = 1; k <= 4; ++k) {
        const WaveletGrid g(k, 1);
        const auto j1 = build_j(1.0, g).j;
        const Eigen::MatrixXd j2 = j1 * j1;
        const double w = std::ldexp(1.0, -k);
        const double amp = std::sqrt(std::ldexp(1.0, k));
        double worst = 0.0;
        for (int i = 0; i < g.size(); ++i) {
            const double t = g.midpoint(i);
            const double approx = (j2 * eval_wavelet_vector(g, t))[0];
            const double exact = t < w ? amp * t * t / 2.0 : amp * (w * w / 2.0 + w * (t - w));
            worst = std::max(worst, std::abs(approx - exact));
        }
        errs.push_back(worst);
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
        CHECK(errs[i] < errs[i - 1]);
    }
}
