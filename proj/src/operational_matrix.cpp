#include "fracwave/operational_matrix.hpp"

#include "fracwave/errors.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <string>
#include <vector>

namespace fracwave {

Eigen::MatrixXd build_bpf_frac_matrix(double mu, int n_t)
{
    if (!(mu > 0.0 && mu <= 1.0)) {
        throw std::domain_error("fractional order mu must lie in (0,1]");
    }
    if (n_t < 1) {
        throw std::domain_error("Block-Pulse count must be positive");
    }
    const double scale = 1.0 / (std::pow(static_cast<double>(n_t), mu) * std::tgamma(mu + 2.0));
    std::vector<double> first_row(n_t);
    first_row[0] = 1.0;
    const double e = mu + 1.0;
    for (int k = 1; k < n_t; ++k) {
        first_row[k] = std::pow(k + 1.0, e) - 2.0 * std::pow(k, e) + std::pow(k - 1.0, e);
    }
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(n_t, n_t);
    for (int c = 0; c < n_t; ++c) {
        for (int r = 0; r <= c; ++r) {
            f(r, c) = scale * first_row[c - r];
        }
    }
    return f;
}

Eigen::MatrixXd build_q(const WaveletGrid& grid)
{
    const int n_t = grid.size();
    const int b = grid.modes();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n_t, n_t);
    for (int n = 0; n < grid.blocks(); ++n) {
        for (int jj = 0; jj < b; ++jj) {
            const int col = n * b + jj;
            const double t = grid.midpoint(col);
            for (int m = 0; m < b; ++m) {
                q(n * b + m, col) = eval_wavelet(n, m, grid, t);
            }
        }
    }
    return q;
}

Eigen::MatrixXd invert_block_diag(const Eigen::MatrixXd& q, const WaveletGrid& grid)
{
    const int n_t = grid.size();
    const int b = grid.modes();
    if (q.rows() != n_t || q.cols() != n_t) {
        throw std::invalid_argument("matrix does not match wavelet grid dimensions");
    }
    Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(n_t, n_t);
    for (int n = 0; n < grid.blocks(); ++n) {
        const Eigen::MatrixXd block = q.block(n * b, n * b, b, b);
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(block);
        const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
        if (!(min_pivot >= 1e-13)) {
            throw SingularMatrixError("singular block " + std::to_string(n) +
                                          " in block-diagonal inversion",
                                      n);
        }
        inv.block(n * b, n * b, b, b) = lu.inverse();
    }
    return inv;
}

OperationalMatrices build_j(double mu, const WaveletGrid& grid)
{
    OperationalMatrices ops{grid, mu, build_q(grid), {}, build_bpf_frac_matrix(mu, grid.size()), {}};
    ops.q_inv = invert_block_diag(ops.q, grid);
    ops.j = ops.q * ops.f * ops.q_inv;
    return ops;
}

double rl_integral_oracle(const std::function<double(double)>& g,
                          std::span<const double> breakpoints, double mu, double t)
{
    if (!(t > 0.0)) {
        throw std::domain_error("fractional integral requires t > 0");
    }
    if (!(mu > 0.0 && mu <= 1.0)) {
        throw std::domain_error("fractional order mu must lie in (0,1]");
    }
    using Rule = boost::math::quadrature::gauss<double, 20>;
    constexpr int kPanels = 8;
    constexpr int kGradedLevels = 40;

    // sigma-images of the breakpoints, ascending in sigma
    std::vector<double> nodes{0.0, std::pow(t, mu)};
    for (double xi : breakpoints) {
        if (xi > 0.0 && xi < t) {
            nodes.push_back(std::pow(t - xi, mu));
        }
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    const double inv_mu = 1.0 / mu;
    auto integrand = [&](double sigma) { return g(t - std::pow(sigma, inv_mu)); };

    double total = 0.0;
    for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
        const double lo = nodes[s];
        const double width = (nodes[s + 1] - lo) / kPanels;
        for (int p = 0; p < kPanels; ++p) {
            const double a = lo + p * width;
            const double b = a + width;
            if (s == 0 && p == 0) {
                // g(t - sigma^{1/mu}) has limited smoothness at sigma = 0; grade toward it
                double right = b;
                for (int level = 0; level < kGradedLevels; ++level) {
                    total += Rule::integrate(integrand, 0.5 * right, right);
                    right *= 0.5;
                }
                total += Rule::integrate(integrand, 0.0, right);
            } else {
                total += Rule::integrate(integrand, a, b);
            }
        }
    }
    return total / std::tgamma(mu + 1.0);
}

double oracle_midpoint_error(const OperationalMatrices& ops)
{
    const WaveletGrid& grid = ops.grid;
    const double width = std::ldexp(1.0, -grid.k());
    double worst = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        const double t = grid.midpoint(i);
        const Eigen::VectorXd approx = ops.j * eval_wavelet_vector(grid, t);
        for (int r = 0; r < grid.size(); ++r) {
            const int n = grid.block_of(r);
            const int m = grid.mode_of(r);
            const std::array<double, 2> support{n * width, (n + 1) * width};
            const auto g = [&](double xi) {
                return (xi >= 0.0 && xi < 1.0) ? eval_wavelet(n, m, grid, xi) : 0.0;
            };
            const double exact = rl_integral_oracle(g, support, ops.mu, t);
            worst = std::max(worst, std::abs(exact - approx[r]));
        }
    }
    return worst;
}

}  // namespace fracwave
