#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fracwave {

using SpaceFn = std::function<double(double)>;
using SpaceTimeFn = std::function<double(double, double)>;

/// One instance of
///   D_t^alpha y + a(x) y_x + b(x) y_xx = f(x,t),  0 <= x <= ell, 0 < t <= 1,
///   y(x,0) = phi(x),  y(0,t) = g1(t),  y(ell,t) = g2(t),
/// with a Caputo time derivative of order 0 < alpha < 1.
struct ProblemSpec {
    std::string name;
    double alpha = 0.5;
    double ell = 1.0;
    SpaceFn a_coeff;
    SpaceFn b_coeff;
    SpaceTimeFn forcing;
    SpaceFn phi;
    SpaceFn phi_x;
    SpaceFn phi_xx;
    SpaceFn g1;
    SpaceFn g2;
    std::optional<SpaceTimeFn> exact;
};

/// Caputo derivative of t^beta: Gamma(beta+1)/Gamma(beta+1-alpha) t^{beta-alpha}; zero for beta = 0.
double caputo_monomial(double beta, double alpha, double t);

/// The three benchmark problems, id in {1,2,3}.
ProblemSpec builtin_example(int id, double alpha);

/// Closed forms of a chosen exact solution and the derivatives the equation needs.
struct ManufacturedSolution {
    SpaceTimeFn y;
    SpaceTimeFn caputo_t;
    SpaceTimeFn y_x;
    SpaceTimeFn y_xx;
};

/// f = D_t^alpha y + a y_x + b y_xx; phi, g1, g2 are traces of y.
ProblemSpec manufactured(double alpha, const ManufacturedSolution& solution, SpaceFn a_coeff,
                         SpaceFn b_coeff, double ell = 1.0);

/// Polynomial in x with coefficients in ascending powers.
struct Polynomial {
    std::vector<double> coeffs;

    double operator()(double x) const;
    Polynomial derivative() const;
};

/// coef * x^x_power * t^t_power
struct SeparableTerm {
    double coef = 0.0;
    int x_power = 0;
    double t_power = 0.0;
};

/// Exact solution built from a sum of separable monomial terms, with exact derivatives.
ManufacturedSolution separable_solution(std::span<const SeparableTerm> terms, double alpha);

}  // namespace fracwave
