#include "fracwave/wavelet_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracwave {

namespace {

void check_unit_time(double t)
{
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::domain_error("time " + std::to_string(t) + " outside [0,1)");
    }
}

}  // namespace

WaveletGrid::WaveletGrid(int k, int M) : k_(k), M_(M)
{
    if (k < 0 || k > 20) {
        throw std::domain_error("wavelet level k must be in [0,20]");
    }
    if (M < 0) {
        throw std::domain_error("harmonic count M must be non-negative");
    }
    size_ = (1 << k) * (2 * M + 1);
}

double eval_scw(int m, int M, double t)
{
    using std::numbers::pi;
    if (m < 0 || m > 2 * M) {
        throw std::domain_error("mode index " + std::to_string(m) + " outside [0," +
                                std::to_string(2 * M) + "]");
    }
    if (m == 0) {
        return std::numbers::sqrt2 / 2.0;
    }
    if (m <= M) {
        return std::cos(2.0 * m * pi * t);
    }
    return std::sin(2.0 * (m - M) * pi * t);
}

double eval_wavelet(int n, int m, const WaveletGrid& grid, double t)
{
    check_unit_time(t);
    if (n < 0 || n >= grid.blocks()) {
        throw std::domain_error("translation index " + std::to_string(n) + " out of range");
    }
    const double scale = std::ldexp(1.0, grid.k());
    const double local = scale * t - n;
    if (local < 0.0 || local >= 1.0) {
        // still validate m so a bad index never passes silently
        eval_scw(m, grid.M(), 0.0);
        return 0.0;
    }
    return std::sqrt(2.0 * scale) * eval_scw(m, grid.M(), local);
}

Eigen::VectorXd eval_wavelet_vector(const WaveletGrid& grid, double t)
{
    check_unit_time(t);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(grid.size());
    const double scale = std::ldexp(1.0, grid.k());
    // scale is a power of two, so scale*t and the floor are exact
    const int n = static_cast<int>(std::floor(scale * t));
    const double local = scale * t - n;
    const double amplitude = std::sqrt(2.0 * scale);
    for (int m = 0; m < grid.modes(); ++m) {
        out[grid.flat_index(n, m)] = amplitude * eval_scw(m, grid.M(), local);
    }
    return out;
}

double block_pulse_eval(int i, int n_t, double t)
{
    check_unit_time(t);
    if (n_t < 1 || i < 0 || i >= n_t) {
        throw std::domain_error("block-pulse index out of range");
    }
    const double lo = static_cast<double>(i) / n_t;
    const double hi = static_cast<double>(i + 1) / n_t;
    return (t >= lo && t < hi) ? 1.0 : 0.0;
}

}  // namespace fracwave
