#pragma once

#include "fracwave/collocation.hpp"

#include <optional>
#include <string>
#include <span>
#include <utility>
#include <vector>

namespace fracwave {

struct NodeError {
    double x;
    double abs_error;
};

/// Errors at the interior knots x_j, j = 1..N_h-1, at a fixed time:
/// e2 = sqrt(h * sum |y - y_N|^2), einf = max |y - y_N|.
struct ErrorReport {
    double t_eval = 0.0;
    int n_h = 0;
    double e2 = 0.0;
    double einf = 0.0;
    std::vector<NodeError> per_node;
};

ErrorReport error_norms(const SpaceTimeFn& approx, const SpaceTimeFn& exact, double ell, int n_h,
                        double t);

/// Requires problem.exact. 0 < t < 1.
ErrorReport error_norms(const SolutionField& field, double t);

/// |y - y_N| at arbitrary x, through the continuous reconstruction.
std::vector<double> absolute_errors(const SolutionField& field, std::span<const double> xs,
                                    double t);

struct ConvergenceRow {
    int n_h = 0;
    double e2 = 0.0;
    std::optional<double> rate2;
    double einf = 0.0;
    std::optional<double> rate_inf;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;
};

/// rate(row i) = log2(e(row i-1) / e(row i)) from the stored errors; the first row has none.
void fill_rates(ConvergenceTable& table);

/// One solve per N_h (expected to double from row to row).
ConvergenceTable convergence_study(const ProblemSpec& problem, const WaveletGrid& wgrid, double p,
                                   std::span<const int> n_h_list, double t_eval);

struct PSweepRow {
    double p = 0.0;
    double e2 = 0.0;
    double einf = 0.0;
};

/// One solve per tension value on the spatial grid of sgrid_base (its own p is ignored).
std::vector<PSweepRow> p_sweep(const ProblemSpec& problem, const WaveletGrid& wgrid,
                               const SplineGrid& sgrid_base, std::span<const double> p_list,
                               double t_eval);

/// Absolute errors at fixed x positions for several (k, M) temporal resolutions.
struct NodalErrorTable {
    std::string problem;
    double alpha = 0.0;
    double p = 0.0;
    int n_h = 0;
    double t_eval = 0.0;
    std::vector<double> xs;
    std::vector<std::pair<int, int>> columns;  // (k, M)
    std::vector<std::vector<double>> errors;   // [x index][column]
    double max_relative_residual = 0.0;
};

NodalErrorTable nodal_error_table(const ProblemSpec& problem,
                                  std::span<const std::pair<int, int>> columns, int n_h, double p,
                                  double t_eval, std::span<const double> xs);

/// Example 1 errors at t = 0.25 for (k,M) in {(2,1),(3,1),(4,1),(5,1)}, x = 0.1..0.9.
NodalErrorTable table1(double alpha = 0.2, double p = 1.0, int n_h = 20, double t_eval = 0.25);

/// Example 2 errors at t = 0.5 for (k,M) in {(4,1),(5,2),(6,1),(7,2)}, x = 0.1..0.9.
NodalErrorTable table2(double alpha = 0.7, double p = 1.0, int n_h = 10, double t_eval = 0.5);

struct AlphaConvergence {
    double alpha = 0.0;
    double t_eval = 0.0;
    ConvergenceTable table;
};

/// Example 3 convergence in N_h at the last collocation time.
std::vector<AlphaConvergence> table3(std::span<const double> alphas, int k = 6, int M = 2,
                                     double p = 0.025, std::span<const int> n_h_list = {});

}  // namespace fracwave
