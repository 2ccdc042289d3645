#pragma once

#include <Eigen/Dense>

namespace fracwave {

/// Temporal discretization: 2^k translates of a (2M+1)-mode sine-cosine family on [0,1).
///
/// Wavelets are laid out n-major, m-minor: flat index n*(2M+1)+m.
class WaveletGrid {
public:
    WaveletGrid(int k, int M);

    int k() const { return k_; }
    int M() const { return M_; }
    int blocks() const { return 1 << k_; }
    int modes() const { return 2 * M_ + 1; }
    int size() const { return size_; }

    int flat_index(int n, int m) const { return n * modes() + m; }
    int block_of(int flat) const { return flat / modes(); }
    int mode_of(int flat) const { return flat % modes(); }

    /// Midpoint of the i-th Block-Pulse interval, i = 0..N_t-1.
    double midpoint(int i) const { return (2.0 * i + 1.0) / (2.0 * size_); }

    bool operator==(const WaveletGrid&) const = default;

private:
    int k_;
    int M_;
    int size_;
};

/// The unscaled sine-cosine profile scw_m(t). Defined for all real t.
double eval_scw(int m, int M, double t);

/// psi_{n,m}(t) on the half-open support [n/2^k, (n+1)/2^k). Throws for t outside [0,1).
double eval_wavelet(int n, int m, const WaveletGrid& grid, double t);

/// Psi(t) as a length N_t vector in flat order; only one support block is nonzero.
Eigen::VectorXd eval_wavelet_vector(const WaveletGrid& grid, double t);

/// Indicator of [i/N_t, (i+1)/N_t).
double block_pulse_eval(int i, int n_t, double t);

}  // namespace fracwave
