#include "fracwave/collocation.hpp"

#include "fracwave/errors.hpp"
#include "fracwave/operational_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fracwave {

CollocationPoints collocation_points(const WaveletGrid& wgrid, const SplineGrid& sgrid)
{
    CollocationPoints pts;
    pts.times.resize(wgrid.size());
    for (int i = 0; i < wgrid.size(); ++i) {
        pts.times[i] = wgrid.midpoint(i);
    }
    pts.knots.resize(sgrid.n_h() + 1);
    for (int j = 0; j <= sgrid.n_h(); ++j) {
        pts.knots[j] = sgrid.knot(j);
    }
    pts.knots.back() = sgrid.ell();
    return pts;
}

TimeBlocks build_time_blocks(const WaveletGrid& wgrid, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("order alpha must lie in (0,1)");
    }
    const Eigen::MatrixXd q = build_q(wgrid);
    return TimeBlocks{
        (q * build_bpf_frac_matrix(1.0 - alpha, wgrid.size())).transpose(),
        (q * build_bpf_frac_matrix(1.0, wgrid.size())).transpose(),
    };
}

TimeBlocks build_time_blocks_by_rows(const WaveletGrid& wgrid, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("order alpha must lie in (0,1)");
    }
    const auto frac = build_j(1.0 - alpha, wgrid);
    const auto whole = build_j(1.0, wgrid);
    const int n_t = wgrid.size();
    TimeBlocks out{Eigen::MatrixXd(n_t, n_t), Eigen::MatrixXd(n_t, n_t)};
    for (int i = 0; i < n_t; ++i) {
        const Eigen::VectorXd psi = eval_wavelet_vector(wgrid, wgrid.midpoint(i));
        out.p_alpha.row(i) = (frac.j * psi).transpose();
        out.p.row(i) = (whole.j * psi).transpose();
    }
    return out;
}

BlockBandedMatrix::BlockBandedMatrix(int block_rows, int block_size)
    : block_rows_(block_rows), block_size_(block_size), blocks_(block_rows)
{
    if (block_rows < 1 || block_size < 1) {
        throw std::invalid_argument("block matrix needs positive dimensions");
    }
}

Eigen::MatrixXd* BlockBandedMatrix::slot(int row, int col)
{
    const int offset = col - row;
    if (row < 0 || row >= block_rows_ || col < 0 || col >= block_rows_ ||
        std::abs(offset) > kBandwidth) {
        return nullptr;
    }
    return &blocks_[row][offset + kBandwidth];
}

const Eigen::MatrixXd* BlockBandedMatrix::slot(int row, int col) const
{
    return const_cast<BlockBandedMatrix*>(this)->slot(row, col);
}

Eigen::MatrixXd& BlockBandedMatrix::block(int row, int col)
{
    Eigen::MatrixXd* b = slot(row, col);
    if (b == nullptr) {
        throw std::out_of_range("block (" + std::to_string(row) + "," + std::to_string(col) +
                                ") outside the band");
    }
    if (b->size() == 0) {
        b->setZero(block_size_, block_size_);
    }
    return *b;
}

const Eigen::MatrixXd* BlockBandedMatrix::find(int row, int col) const
{
    const Eigen::MatrixXd* b = slot(row, col);
    return (b != nullptr && b->size() != 0) ? b : nullptr;
}

Eigen::VectorXd BlockBandedMatrix::multiply(const Eigen::VectorXd& x) const
{
    const int bs = block_size_;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(size());
    for (int r = 0; r < block_rows_; ++r) {
        for (int c = r - kBandwidth; c <= r + kBandwidth; ++c) {
            if (const auto* b = find(r, c)) {
                y.segment(r * bs, bs).noalias() += *b * x.segment(c * bs, bs);
            }
        }
    }
    return y;
}

Eigen::MatrixXd BlockBandedMatrix::to_dense() const
{
    const int bs = block_size_;
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(size(), size());
    for (int r = 0; r < block_rows_; ++r) {
        for (int c = r - kBandwidth; c <= r + kBandwidth; ++c) {
            if (const auto* b = find(r, c)) {
                dense.block(r * bs, c * bs, bs, bs) = *b;
            }
        }
    }
    return dense;
}

CollocationSystem assemble(const ProblemSpec& problem, const WaveletGrid& wgrid,
                           const SplineGrid& sgrid)
{
    return assemble(problem, wgrid, sgrid, build_time_blocks(wgrid, problem.alpha));
}

namespace {

double checked(double value, double x, double t, const char* what)
{
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-finite " << what << " at (x=" << x << ", t=" << t << ")";
        throw AssemblyError(msg.str());
    }
    return value;
}

}  // namespace

CollocationSystem assemble(const ProblemSpec& problem, const WaveletGrid& wgrid,
                           const SplineGrid& sgrid, const TimeBlocks& tb)
{
    const int n_t = wgrid.size();
    const int n_h = sgrid.n_h();
    const auto pts = collocation_points(wgrid, sgrid);
    const SplineStencils st = stencils(sgrid);

    CollocationSystem sys{wgrid, sgrid, BlockBandedMatrix(n_h + 3, n_t),
                          Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_t) * (n_h + 3))};
    auto& mat = sys.matrix;

    // boundary rows: values of B_{l}(x_0) and B_{l}(x_{N_h}) times P
    const int last = n_h + 2;
    for (int offset = -1; offset <= 1; ++offset) {
        const double v = knot_row(offset, KnotDerivative::value, st);
        mat.block(0, offset + 1) = v * tb.p;                   // l = offset
        mat.block(last, n_h + offset + 1) = v * tb.p;          // l = N_h + offset
    }
    const double phi_left = problem.phi(pts.knots.front());
    const double phi_right = problem.phi(pts.knots.back());
    for (int i = 0; i < n_t; ++i) {
        const double t = pts.times[i];
        sys.rhs[i] = checked(problem.g1(t), 0.0, t, "left boundary value") - phi_left;
        sys.rhs[last * n_t + i] =
            checked(problem.g2(t), sgrid.ell(), t, "right boundary value") - phi_right;
    }

    for (int j = 0; j <= n_h; ++j) {
        const double x = pts.knots[j];
        const double a = checked(problem.a_coeff(x), x, 0.0, "convection coefficient");
        const double b = checked(problem.b_coeff(x), x, 0.0, "diffusion coefficient");
        const int row = j + 1;
        for (int offset = -1; offset <= 1; ++offset) {
            const double v = knot_row(offset, KnotDerivative::value, st);
            const double d1 = knot_row(offset, KnotDerivative::first, st);
            const double d2 = knot_row(offset, KnotDerivative::second, st);
            auto& blk = mat.block(row, j + offset + 1);
            blk.noalias() = v * tb.p_alpha;
            blk.noalias() += (a * d1 + b * d2) * tb.p;
        }
        const double shift = a * problem.phi_x(x) + b * problem.phi_xx(x);
        checked(shift, x, 0.0, "initial-condition derivative term");
        for (int i = 0; i < n_t; ++i) {
            const double t = pts.times[i];
            sys.rhs[row * n_t + i] = checked(problem.forcing(x, t), x, t, "forcing") - shift;
        }
    }
    return sys;
}

namespace {

double relative_residual(const BlockBandedMatrix& matrix, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& rhs)
{
    const double r = (matrix.multiply(x) - rhs).lpNorm<Eigen::Infinity>();
    const double scale = rhs.lpNorm<Eigen::Infinity>();
    if (scale == 0.0) {
        return r;
    }
    return r / scale;
}

}  // namespace

SolveResult solve_block_banded(const BlockBandedMatrix& matrix, const Eigen::VectorXd& rhs)
{
    const int nb = matrix.block_rows();
    const int bs = matrix.block_size();
    constexpr int bw = BlockBandedMatrix::kBandwidth;
    if (rhs.size() != matrix.size()) {
        throw std::invalid_argument("right-hand side does not match the system size");
    }

    // Working copy; after the sweep, upper blocks hold D_r^{-1} U_rc and y holds D_r^{-1} b_r.
    BlockBandedMatrix work = matrix;
    Eigen::VectorXd y = rhs;
    for (int r = 0; r < nb; ++r) {
        const Eigen::MatrixXd& diag = work.block(r, r);
        const double scale = diag.cwiseAbs().maxCoeff();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(diag);
        const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
        if (!(scale > 0.0 && min_pivot >= 1e-12 * scale)) {
            throw SingularMatrixError("pivot breakdown in block row " + std::to_string(r), r);
        }
        for (int c = r + 1; c <= std::min(r + bw, nb - 1); ++c) {
            if (work.find(r, c) != nullptr) {
                Eigen::MatrixXd& upper = work.block(r, c);
                upper = lu.solve(upper);
            }
        }
        y.segment(r * bs, bs) = lu.solve(y.segment(r * bs, bs));

        for (int s = r + 1; s <= std::min(r + bw, nb - 1); ++s) {
            const Eigen::MatrixXd* lower = work.find(s, r);
            if (lower == nullptr) {
                continue;
            }
            for (int c = r + 1; c <= std::min(r + bw, nb - 1); ++c) {
                if (const auto* upper = work.find(r, c)) {
                    work.block(s, c).noalias() -= *lower * *upper;
                }
            }
            y.segment(s * bs, bs).noalias() -= *lower * y.segment(r * bs, bs);
        }
    }

    for (int r = nb - 1; r >= 0; --r) {
        for (int c = r + 1; c <= std::min(r + bw, nb - 1); ++c) {
            if (const auto* upper = work.find(r, c)) {
                y.segment(r * bs, bs).noalias() -= *upper * y.segment(c * bs, bs);
            }
        }
    }

    SolveResult out;
    out.relative_residual = relative_residual(matrix, y, rhs);
    out.residual_ok = out.relative_residual <= kResidualTolerance;
    out.coefficients = std::move(y);
    return out;
}

SolveResult solve(const CollocationSystem& system)
{
    return solve_block_banded(system.matrix, system.rhs);
}

SolveResult solve_dense(const CollocationSystem& system)
{
    if (system.n_unknowns() > kDenseSolveLimit) {
        throw std::length_error("dense solve refused for " + std::to_string(system.n_unknowns()) +
                                " unknowns (limit " + std::to_string(kDenseSolveLimit) + ")");
    }
    // boundary rows are O(1) while interior rows scale like h^-2; equilibrate rows first
    const Eigen::MatrixXd dense = system.matrix.to_dense();
    const Eigen::VectorXd row_scale = dense.rowwise().lpNorm<Eigen::Infinity>().cwiseInverse();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(row_scale.asDiagonal() * dense);
    SolveResult out;
    out.coefficients = lu.solve(row_scale.asDiagonal() * system.rhs);
    out.relative_residual = relative_residual(system.matrix, out.coefficients, system.rhs);
    out.residual_ok = out.relative_residual <= kResidualTolerance;
    return out;
}

SolveOutcome solve_problem(const ProblemSpec& problem, const WaveletGrid& wgrid,
                           const SplineGrid& sgrid)
{
    const auto system = assemble(problem, wgrid, sgrid);
    auto result = solve(system);
    return SolveOutcome{
        SolutionField{std::move(result.coefficients), problem, wgrid, sgrid, build_j(1.0, wgrid).j},
        result.relative_residual,
        result.residual_ok,
    };
}

double reconstruct(const SolutionField& field, double x, double t)
{
    const auto& sg = field.sgrid;
    const auto& wg = field.wgrid;
    const double slack = 1e-12 * sg.ell();
    if (!(x >= -slack && x <= sg.ell() + slack) || !(t >= 0.0 && t < 1.0)) {
        throw std::domain_error("reconstruction point outside [0,ell] x [0,1)");
    }
    const double phi = field.problem.phi(x);
    if (t == 0.0) {
        return phi;
    }
    // Psi(t) lives in one support block, so J1 * Psi(t) needs only those columns
    const Eigen::VectorXd psi = eval_wavelet_vector(wg, t);
    const int n = static_cast<int>(std::floor(std::ldexp(t, wg.k())));
    const int b = wg.modes();
    const Eigen::VectorXd weights = field.j1.middleCols(n * b, b) * psi.segment(n * b, b);

    const int n_t = wg.size();
    const int cell = static_cast<int>(std::floor(x / sg.h()));
    double acc = 0.0;
    for (int l = std::max(-1, cell - 1); l <= std::min(sg.n_h() + 1, cell + 2); ++l) {
        const double basis = eval_B(l, std::clamp(x, 0.0, sg.ell()), sg);
        if (basis != 0.0) {
            acc += basis * weights.dot(field.coefficients.segment((l + 1) * n_t, n_t));
        }
    }
    return acc + phi;
}

}  // namespace fracwave
