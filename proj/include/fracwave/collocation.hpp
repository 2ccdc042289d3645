#pragma once

#include "fracwave/exp_spline.hpp"
#include "fracwave/problem.hpp"
#include "fracwave/wavelet_basis.hpp"

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace fracwave {

struct CollocationPoints {
    std::vector<double> times;  // Block-Pulse midpoints (2i-1)/(2 N_t), i = 1..N_t
    std::vector<double> knots;  // x_j = j h, j = 0..N_h
};

CollocationPoints collocation_points(const WaveletGrid& wgrid, const SplineGrid& sgrid);

/// Rows Psi(t_i) J^{1-alpha,T} and Psi(t_i) J^{1,T} at the collocation times.
struct TimeBlocks {
    Eigen::MatrixXd p_alpha;
    Eigen::MatrixXd p;
};

/// Uses the midpoint identity: the stacked Psi(t_i) is q^T, so the rows are (q F^mu)^T.
TimeBlocks build_time_blocks(const WaveletGrid& wgrid, double alpha);

/// Evaluates Psi(t_i) and multiplies by J^T explicitly; kept as an independent route.
TimeBlocks build_time_blocks_by_rows(const WaveletGrid& wgrid, double alpha);

/// Square matrix of (block_rows x block_rows) dense square blocks, nonzero only
/// within two block diagonals of the main one.
class BlockBandedMatrix {
public:
    static constexpr int kBandwidth = 2;

    BlockBandedMatrix(int block_rows, int block_size);

    int block_rows() const { return block_rows_; }
    int block_size() const { return block_size_; }
    int size() const { return block_rows_ * block_size_; }

    /// Zero-initialized on first access. |col - row| must not exceed kBandwidth.
    Eigen::MatrixXd& block(int row, int col);
    /// nullptr when the block was never touched.
    const Eigen::MatrixXd* find(int row, int col) const;

    Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd to_dense() const;

private:
    Eigen::MatrixXd* slot(int row, int col);
    const Eigen::MatrixXd* slot(int row, int col) const;

    int block_rows_;
    int block_size_;
    std::vector<std::array<Eigen::MatrixXd, 2 * kBandwidth + 1>> blocks_;
};

/// Collocation equations for one problem.
///
/// Unknown block l+1 holds C_l (l = -1..N_h+1), each ordered by wavelet flat index.
/// Equation block row 0 is the left boundary, row j+1 the interior knot x_j, and
/// row N_h+2 the right boundary; inside a block row equations follow the times t_i.
struct CollocationSystem {
    WaveletGrid wgrid;
    SplineGrid sgrid;
    BlockBandedMatrix matrix;
    Eigen::VectorXd rhs;

    int n_unknowns() const { return matrix.size(); }
};

CollocationSystem assemble(const ProblemSpec& problem, const WaveletGrid& wgrid,
                           const SplineGrid& sgrid);

/// Variant taking precomputed time blocks.
CollocationSystem assemble(const ProblemSpec& problem, const WaveletGrid& wgrid,
                           const SplineGrid& sgrid, const TimeBlocks& time_blocks);

struct SolveResult {
    Eigen::VectorXd coefficients;
    double relative_residual = 0.0;  // ||Ax - b||_inf / ||b||_inf
    bool residual_ok = true;         // relative_residual <= kResidualTolerance
};

inline constexpr double kResidualTolerance = 1e-9;
inline constexpr int kDenseSolveLimit = 5000;

/// Block Gaussian elimination down the block band, partial pivoting inside each
/// diagonal block only. Throws SingularMatrixError with the block row index on
/// pivot breakdown.
SolveResult solve_block_banded(const BlockBandedMatrix& matrix, const Eigen::VectorXd& rhs);

SolveResult solve(const CollocationSystem& system);

/// Row-equilibrated dense LU of the whole system; refused above kDenseSolveLimit unknowns.
SolveResult solve_dense(const CollocationSystem& system);

/// Everything needed to evaluate y_N(x,t) = H(x) (x) Psi(t) J^{1,T} C + phi(x).
struct SolutionField {
    Eigen::VectorXd coefficients;
    ProblemSpec problem;
    WaveletGrid wgrid;
    SplineGrid sgrid;
    Eigen::MatrixXd j1;
};

struct SolveOutcome {
    SolutionField field;
    double relative_residual = 0.0;
    bool residual_ok = true;
};

/// Assemble, solve with the block path and package the field.
SolveOutcome solve_problem(const ProblemSpec& problem, const WaveletGrid& wgrid,
                           const SplineGrid& sgrid);

/// y_N(x,t) for 0 <= x <= ell, 0 <= t < 1. Returns phi(x) at t = 0.
double reconstruct(const SolutionField& field, double x, double t);

}  // namespace fracwave
