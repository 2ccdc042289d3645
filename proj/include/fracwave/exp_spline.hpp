#pragma once

namespace fracwave {

/// Uniform knots x_j = j*h on [0, ell], with three ghost knots on each side,
/// and a scalar tension p.
class SplineGrid {
public:
    SplineGrid(double ell, int n_h, double p);

    double ell() const { return ell_; }
    int n_h() const { return n_h_; }
    double h() const { return h_; }
    double p() const { return p_; }
    double knot(int j) const { return j * h_; }

    /// Number of basis functions B_{-1}..B_{N_h+1}.
    int basis_size() const { return n_h_ + 3; }

private:
    double ell_;
    int n_h_;
    double h_;
    double p_;
};

/// Knot values of B_j and its first two derivatives.
///
/// B_j(x_j) = v0 = 1, B_j(x_{j+-1}) = v1, |B'_j(x_{j+-1})| = d1,
/// B''_j(x_j) = w0, B''_j(x_{j+-1}) = w1. All other knot values vanish.
struct SplineStencils {
    double v0;
    double v1;
    double d1;
    double w0;
    double w1;
};

/// Coefficients of the four-piece closed form of B_j: e on the outer pieces,
/// a + b*u + c*exp(p*u) + d*exp(-p*u) on the inner ones.
struct SplinePieceCoeffs {
    double e_c;
    double a_c;
    double b_c;
    double c_c;
    double d_c;
};

/// Below this value of p*h the hyperbolic differences are summed as series.
inline constexpr double kSplineSeriesThreshold = 1e-2;

SplineStencils stencils(const SplineGrid& grid);

/// Stencils from the textbook sinh/cosh expressions with no series fallback.
/// Loses accuracy like eps/(ph)^3; exposed to audit the series crossover.
SplineStencils stencils_direct(const SplineGrid& grid);

/// Closed-form piece coefficients. They grow like (ph)^{-5}, so piecewise
/// evaluation from them is only reliable for moderate ph.
SplinePieceCoeffs piece_coeffs(const SplineGrid& grid);

/// B_j(x) for j in [-1, N_h+1] and x in [0, ell], evaluated in a form that
/// stays accurate as p -> 0.
double eval_B(int j, double x, const SplineGrid& grid);

/// B_j(x) evaluated literally from the piece coefficients.
double eval_B_pieces(int j, double x, const SplineGrid& grid, const SplinePieceCoeffs& coeffs);

enum class KnotDerivative { value, first, second };

/// Entry of the collocation row at knot x_j for column l = j + offset
/// (offset in {-1, 0, +1}): value (v1, 1, v1), first (-d1, 0, d1), second (w1, w0, w1).
double knot_row(int offset, KnotDerivative which, const SplineStencils& st);

// Cancellation-free hyperbolic differences.
double sinh_minus_x(double x);
double x_cosh_minus_sinh(double x);
double cosh_minus_one(double x);

}  // namespace fracwave
