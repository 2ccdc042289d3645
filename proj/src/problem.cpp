#include "fracwave/problem.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fracwave {

double caputo_monomial(double beta, double alpha, double t)
{
    if (t < 0.0) {
        throw std::domain_error("Caputo derivative requires t >= 0");
    }
    if (beta < 0.0) {
        throw std::domain_error("monomial exponent must be non-negative");
    }
    if (beta == 0.0) {
        return 0.0;
    }
    return std::tgamma(beta + 1.0) / std::tgamma(beta + 1.0 - alpha) * std::pow(t, beta - alpha);
}

ProblemSpec builtin_example(int id, double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("order alpha must lie in (0,1)");
    }
    ProblemSpec spec;
    spec.alpha = alpha;
    spec.ell = 1.0;
    const auto zero = [](double) { return 0.0; };
    switch (id) {
    case 1: {
        spec.name = "example1";
        spec.a_coeff = [](double) { return 1.0; };
        spec.b_coeff = [](double) { return -1.0; };
        const double g = std::tgamma(4.0 - alpha);
        spec.forcing = [alpha, g](double x, double t) {
            return 6.0 * x * x * std::pow(t, 3.0 - alpha) / g - 2.0 * t * t * t * (1.0 - x);
        };
        spec.phi = zero;
        spec.phi_x = zero;
        spec.phi_xx = zero;
        spec.g1 = zero;
        spec.g2 = [](double t) { return t * t * t; };
        spec.exact = [](double x, double t) { return t * t * t * x * x; };
        break;
    }
    case 2: {
        spec.name = "example2";
        spec.a_coeff = [](double x) { return x; };
        spec.b_coeff = [](double) { return -1.0; };
        const double ratio = std::tgamma(1.0 + 2.0 * alpha) / std::tgamma(1.0 + alpha);
        spec.forcing = [alpha, ratio](double x, double t) {
            return ratio * std::pow(t, alpha) * (x - x * x * x) +
                   (1.0 + std::pow(t, 2.0 * alpha)) * (7.0 * x - 3.0 * x * x * x);
        };
        spec.phi = [](double x) { return x - x * x * x; };
        spec.phi_x = [](double x) { return 1.0 - 3.0 * x * x; };
        spec.phi_xx = [](double x) { return -6.0 * x; };
        spec.g1 = zero;
        spec.g2 = zero;
        spec.exact = [alpha](double x, double t) {
            return (1.0 + std::pow(t, 2.0 * alpha)) * (x - x * x * x);
        };
        break;
    }
    case 3: {
        spec.name = "example3";
        spec.a_coeff = [](double) { return 1.0; };
        spec.b_coeff = [](double x) { return -x; };
        const double g = std::tgamma(3.0 - alpha);
        spec.forcing = [alpha, g](double x, double t) {
            return 2.0 * std::pow(t, 2.0 - alpha) * x * x * x / g - 3.0 * (1.0 + t * t) * x * x;
        };
        spec.phi = [](double x) { return x * x * x; };
        spec.phi_x = [](double x) { return 3.0 * x * x; };
        spec.phi_xx = [](double x) { return 6.0 * x; };
        spec.g1 = zero;
        spec.g2 = [](double t) { return 1.0 + t * t; };
        spec.exact = [](double x, double t) { return (1.0 + t * t) * x * x * x; };
        break;
    }
    default:
        throw std::invalid_argument("unknown built-in example " + std::to_string(id));
    }
    return spec;
}

ProblemSpec manufactured(double alpha, const ManufacturedSolution& solution, SpaceFn a_coeff,
                         SpaceFn b_coeff, double ell)
{
    ProblemSpec spec;
    spec.name = "manufactured";
    spec.alpha = alpha;
    spec.ell = ell;
    spec.forcing = [s = solution, a = a_coeff, b = b_coeff](double x, double t) {
        return s.caputo_t(x, t) + a(x) * s.y_x(x, t) + b(x) * s.y_xx(x, t);
    };
    spec.a_coeff = std::move(a_coeff);
    spec.b_coeff = std::move(b_coeff);
    spec.phi = [y = solution.y](double x) { return y(x, 0.0); };
    spec.phi_x = [d = solution.y_x](double x) { return d(x, 0.0); };
    spec.phi_xx = [d = solution.y_xx](double x) { return d(x, 0.0); };
    spec.g1 = [y = solution.y](double t) { return y(0.0, t); };
    spec.g2 = [y = solution.y, ell](double t) { return y(ell, t); };
    spec.exact = solution.y;
    return spec;
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    Polynomial d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        d.coeffs.push_back(static_cast<double>(i) * coeffs[i]);
    }
    return d;
}

namespace {

// x^n * n(n-1)...(n-order+1)
double x_power_derivative(int n, int order, double x)
{
    double factor = 1.0;
    for (int i = 0; i < order; ++i) {
        factor *= n - i;
    }
    if (factor == 0.0) {
        return 0.0;
    }
    return factor * std::pow(x, n - order);
}

}  // namespace

ManufacturedSolution separable_solution(std::span<const SeparableTerm> terms, double alpha)
{
    std::vector<SeparableTerm> owned(terms.begin(), terms.end());
    for (const auto& term : owned) {
        if (term.x_power < 0 || term.t_power < 0.0) {
            throw std::domain_error("separable terms need non-negative powers");
        }
    }
    auto spatial = [owned](int order, bool caputo, double alpha_) {
        return [owned, order, caputo, alpha_](double x, double t) {
            double acc = 0.0;
            for (const auto& term : owned) {
                const double time_part =
                    caputo ? caputo_monomial(term.t_power, alpha_, t)
                           : (term.t_power == 0.0 ? 1.0 : std::pow(t, term.t_power));
                acc += term.coef * x_power_derivative(term.x_power, order, x) * time_part;
            }
            return acc;
        };
    };
    return ManufacturedSolution{
        spatial(0, false, alpha),
        spatial(0, true, alpha),
        spatial(1, false, alpha),
        spatial(2, false, alpha),
    };
}

}  // namespace fracwave
