#pragma once

#include "fracwave/wavelet_basis.hpp"

#include <Eigen/Dense>
#include <functional>
#include <span>

namespace fracwave {

/// Fractional integration of order mu expressed in the sine-cosine basis.
///
/// q maps Block-Pulse coefficients to wavelets (block-diagonal, one block per
/// translate), f is the Block-Pulse fractional integration matrix, and
/// j = q * f * q^{-1}, so that J^mu Psi(t) ~ Psi(t) j^T.
struct OperationalMatrices {
    WaveletGrid grid;
    double mu;
    Eigen::MatrixXd q;
    Eigen::MatrixXd q_inv;
    Eigen::MatrixXd f;
    Eigen::MatrixXd j;
};

/// Upper-triangular Toeplitz matrix with first row (1, xi_1, ..., xi_{N-1}) / (N^mu Gamma(mu+2)),
/// xi_k = (k+1)^{mu+1} - 2k^{mu+1} + (k-1)^{mu+1}. Requires 0 < mu <= 1.
Eigen::MatrixXd build_bpf_frac_matrix(double mu, int n_t);

/// Wavelet values at the Block-Pulse midpoints: q(r, i) = Psi_r(t_i).
Eigen::MatrixXd build_q(const WaveletGrid& grid);

/// Inverse of a block-diagonal q, one partially pivoted LU per (2M+1)-block.
/// Throws SingularMatrixError naming the block when a pivot falls below 1e-13.
Eigen::MatrixXd invert_block_diag(const Eigen::MatrixXd& q, const WaveletGrid& grid);

OperationalMatrices build_j(double mu, const WaveletGrid& grid);

/// Riemann-Liouville integral (1/Gamma(mu)) int_0^t g(xi) (t-xi)^{mu-1} dxi.
///
/// The substitution sigma = (t-xi)^mu turns the weakly singular kernel into
/// (1/Gamma(mu+1)) int_0^{t^mu} g(t - sigma^{1/mu}) dsigma, which is integrated
/// by composite Gauss-Legendre between the images of the breakpoints of g.
double rl_integral_oracle(const std::function<double(double)>& g,
                          std::span<const double> breakpoints, double mu, double t);

/// max over Block-Pulse midpoints t_i and wavelets r of |(J psi(t_i))_r - J^mu psi_r(t_i)|,
/// the right-hand side computed by rl_integral_oracle.
double oracle_midpoint_error(const OperationalMatrices& ops);

}  // namespace fracwave
