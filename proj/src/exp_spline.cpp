#include "fracwave/exp_spline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracwave {

namespace {

// sum_{n>=n0} coef(n) x^{2n+offset} / (2n+offset)!, stopped once terms are negligible
template <class Coef>
double hyperbolic_series(double x, int n0, int offset, Coef coef)
{
    const double x2 = x * x;
    double power = std::pow(x, 2 * n0 + offset);
    double fact = std::tgamma(2.0 * n0 + offset + 1.0);
    double sum = 0.0;
    for (int n = n0; n < n0 + 12; ++n) {
        const double term = coef(n) * power / fact;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) {
            break;
        }
        power *= x2;
        fact *= (2.0 * n + offset + 1.0) * (2.0 * n + offset + 2.0);
    }
    return sum;
}

}  // namespace

double sinh_minus_x(double x)
{
    if (std::abs(x) < kSplineSeriesThreshold) {
        return hyperbolic_series(x, 1, 1, [](int) { return 1.0; });
    }
    return std::sinh(x) - x;
}

double x_cosh_minus_sinh(double x)
{
    // x cosh x - sinh x = sum_{n>=1} 2n x^{2n+1} / (2n+1)!
    if (std::abs(x) < kSplineSeriesThreshold) {
        return hyperbolic_series(x, 1, 1, [](int n) { return 2.0 * n; });
    }
    return x * std::cosh(x) - std::sinh(x);
}

double cosh_minus_one(double x)
{
    if (std::abs(x) < kSplineSeriesThreshold) {
        return hyperbolic_series(x, 1, 0, [](int) { return 1.0; });
    }
    return std::cosh(x) - 1.0;
}

SplineGrid::SplineGrid(double ell, int n_h, double p) : ell_(ell), n_h_(n_h), h_(0.0), p_(p)
{
    if (!(ell > 0.0)) {
        throw std::domain_error("domain length must be positive");
    }
    if (n_h < 1) {
        throw std::domain_error("number of spatial intervals must be positive");
    }
    if (!(p > 0.0)) {
        throw std::domain_error("tension parameter p must be positive");
    }
    h_ = ell / n_h;
}

SplineStencils stencils(const SplineGrid& grid)
{
    const double p = grid.p();
    const double x = p * grid.h();
    const double denom = x_cosh_minus_sinh(x);
    const double w1 = p * p * std::sinh(x) / (2.0 * denom);
    return SplineStencils{
        1.0,
        sinh_minus_x(x) / (2.0 * denom),
        p * cosh_minus_one(x) / (2.0 * denom),
        -2.0 * w1,
        w1,
    };
}

SplineStencils stencils_direct(const SplineGrid& grid)
{
    const double p = grid.p();
    const double ph = p * grid.h();
    const double s = std::sinh(ph);
    const double c = std::cosh(ph);
    const double denom = ph * c - s;
    return SplineStencils{
        1.0,
        (s - ph) / (2.0 * denom),
        std::abs(p * (1.0 - c) / (2.0 * denom)),
        -p * p * s / denom,
        p * p * s / (2.0 * denom),
    };
}

SplinePieceCoeffs piece_coeffs(const SplineGrid& grid)
{
    const double p = grid.p();
    const double ph = p * grid.h();
    const double s = std::sinh(ph);
    const double c = std::cosh(ph);
    const double denom = ph * c - s;
    const double ep = std::exp(ph);
    const double em = std::exp(-ph);
    return SplinePieceCoeffs{
        p / (2.0 * denom),
        ph * c / denom,
        0.5 * p * (c * (c - 1.0) + s * s) / (denom * (1.0 - c)),
        0.25 * (em * (1.0 - c) + s * (em - 1.0)) / (denom * (1.0 - c)),
        0.25 * (ep * (c - 1.0) + s * (ep - 1.0)) / (denom * (1.0 - c)),
    };
}

namespace {

void check_basis_args(int j, double x, const SplineGrid& grid)
{
    if (j < -1 || j > grid.n_h() + 1) {
        throw std::domain_error("basis index " + std::to_string(j) + " outside [-1, N_h+1]");
    }
    const double slack = 1e-12 * grid.ell();
    if (!(x >= -slack && x <= grid.ell() + slack)) {
        throw std::domain_error("spline argument outside [0, ell]");
    }
}

}  // namespace

double eval_B(int j, double x, const SplineGrid& grid)
{
    check_basis_args(j, x, grid);
    const double h = grid.h();
    const double p = grid.p();
    const double d = std::abs(x - grid.knot(j));
    if (d >= 2.0 * h) {
        return 0.0;
    }
    const double denom = 2.0 * x_cosh_minus_sinh(p * h);
    const double outer = sinh_minus_x(p * (2.0 * h - d));
    if (d >= h) {
        return outer / denom;
    }
    // inner piece: outer piece continued plus the C^2-matching correction at x_{j+-1}
    const double c = std::cosh(p * h);
    return (outer - 2.0 * (1.0 + c) * sinh_minus_x(p * (h - d))) / denom;
}

double eval_B_pieces(int j, double x, const SplineGrid& grid, const SplinePieceCoeffs& k)
{
    check_basis_args(j, x, grid);
    const double h = grid.h();
    const double p = grid.p();
    const double xj = grid.knot(j);
    if (x <= xj - 2.0 * h || x >= xj + 2.0 * h) {
        return 0.0;
    }
    if (x <= xj - h) {
        const double z = (xj - 2.0 * h) - x;
        return k.e_c * z - (k.e_c / p) * std::sinh(p * z);
    }
    if (x >= xj + h) {
        const double z = x - (xj + 2.0 * h);
        return k.e_c * z - (k.e_c / p) * std::sinh(p * z);
    }
    const double u = std::abs(x - xj);
    return k.a_c + k.b_c * u + k.c_c * std::exp(p * u) + k.d_c * std::exp(-p * u);
}

double knot_row(int offset, KnotDerivative which, const SplineStencils& st)
{
    if (offset < -1 || offset > 1) {
        throw std::domain_error("knot row offset must be -1, 0 or +1");
    }
    switch (which) {
    case KnotDerivative::value:
        return offset == 0 ? st.v0 : st.v1;
    case KnotDerivative::first:
        // B_{j-1} is past its peak at x_j, B_{j+1} is still rising
        return offset * st.d1;
    case KnotDerivative::second:
        return offset == 0 ? st.w0 : st.w1;
    }
    return 0.0;
}

}  // namespace fracwave
