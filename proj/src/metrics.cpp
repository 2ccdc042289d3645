#include "fracwave/metrics.hpp"

#include "fracwave/operational_matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fracwave {

ErrorReport error_norms(const SpaceTimeFn& approx, const SpaceTimeFn& exact, double ell, int n_h,
                        double t)
{
    if (n_h < 1) {
        throw std::domain_error("error norms need N_h >= 1");
    }
    ErrorReport report;
    report.t_eval = t;
    report.n_h = n_h;
    const double h = ell / n_h;
    double sum = 0.0;
    for (int j = 1; j < n_h; ++j) {
        const double x = j * h;
        const double err = std::abs(exact(x, t) - approx(x, t));
        report.per_node.push_back({x, err});
        sum += err * err;
        report.einf = std::max(report.einf, err);
    }
    report.e2 = std::sqrt(h * sum);
    return report;
}

ErrorReport error_norms(const SolutionField& field, double t)
{
    if (!field.problem.exact) {
        throw std::invalid_argument("problem '" + field.problem.name + "' has no exact solution");
    }
    if (!(t > 0.0 && t < 1.0)) {
        throw std::domain_error("error evaluation time must lie in (0,1)");
    }
    return error_norms([&field](double x, double tt) { return reconstruct(field, x, tt); },
                       *field.problem.exact, field.sgrid.ell(), field.sgrid.n_h(), t);
}

std::vector<double> absolute_errors(const SolutionField& field, std::span<const double> xs,
                                    double t)
{
    if (!field.problem.exact) {
        throw std::invalid_argument("problem '" + field.problem.name + "' has no exact solution");
    }
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        out.push_back(std::abs((*field.problem.exact)(x, t) - reconstruct(field, x, t)));
    }
    return out;
}

void fill_rates(ConvergenceTable& table)
{
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        auto& row = table.rows[i];
        if (i == 0) {
            row.rate2.reset();
            row.rate_inf.reset();
            continue;
        }
        const auto& prev = table.rows[i - 1];
        row.rate2 = std::log2(prev.e2 / row.e2);
        row.rate_inf = std::log2(prev.einf / row.einf);
    }
}

ConvergenceTable convergence_study(const ProblemSpec& problem, const WaveletGrid& wgrid, double p,
                                   std::span<const int> n_h_list, double t_eval)
{
    ConvergenceTable table;
    for (int n_h : n_h_list) {
        const auto outcome = solve_problem(problem, wgrid, SplineGrid(problem.ell, n_h, p));
        const auto report = error_norms(outcome.field, t_eval);
        table.rows.push_back({n_h, report.e2, std::nullopt, report.einf, std::nullopt});
    }
    fill_rates(table);
    return table;
}

std::vector<PSweepRow> p_sweep(const ProblemSpec& problem, const WaveletGrid& wgrid,
                               const SplineGrid& sgrid_base, std::span<const double> p_list,
                               double t_eval)
{
    // P and P_alpha do not depend on p
    const TimeBlocks tb = build_time_blocks(wgrid, problem.alpha);
    const Eigen::MatrixXd j1 = build_j(1.0, wgrid).j;
    std::vector<PSweepRow> rows;
    for (double p : p_list) {
        const SplineGrid sgrid(sgrid_base.ell(), sgrid_base.n_h(), p);
        auto result = solve(assemble(problem, wgrid, sgrid, tb));
        const SolutionField field{std::move(result.coefficients), problem, wgrid, sgrid, j1};
        const auto report = error_norms(field, t_eval);
        rows.push_back({p, report.e2, report.einf});
    }
    return rows;
}

NodalErrorTable nodal_error_table(const ProblemSpec& problem,
                                  std::span<const std::pair<int, int>> columns, int n_h, double p,
                                  double t_eval, std::span<const double> xs)
{
    NodalErrorTable table;
    table.problem = problem.name;
    table.alpha = problem.alpha;
    table.p = p;
    table.n_h = n_h;
    table.t_eval = t_eval;
    table.xs.assign(xs.begin(), xs.end());
    table.columns.assign(columns.begin(), columns.end());
    table.errors.assign(xs.size(), std::vector<double>(columns.size(), 0.0));
    const SplineGrid sgrid(problem.ell, n_h, p);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const WaveletGrid wgrid(columns[c].first, columns[c].second);
        const auto outcome = solve_problem(problem, wgrid, sgrid);
        table.max_relative_residual =
            std::max(table.max_relative_residual, outcome.relative_residual);
        const auto errs = absolute_errors(outcome.field, xs, t_eval);
        for (std::size_t r = 0; r < xs.size(); ++r) {
            table.errors[r][c] = errs[r];
        }
    }
    return table;
}

namespace {

constexpr std::array<double, 9> kTableXs{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

}  // namespace

NodalErrorTable table1(double alpha, double p, int n_h, double t_eval)
{
    constexpr std::array<std::pair<int, int>, 4> cols{{{2, 1}, {3, 1}, {4, 1}, {5, 1}}};
    return nodal_error_table(builtin_example(1, alpha), cols, n_h, p, t_eval, kTableXs);
}

NodalErrorTable table2(double alpha, double p, int n_h, double t_eval)
{
    constexpr std::array<std::pair<int, int>, 4> cols{{{4, 1}, {5, 2}, {6, 1}, {7, 2}}};
    return nodal_error_table(builtin_example(2, alpha), cols, n_h, p, t_eval, kTableXs);
}

std::vector<AlphaConvergence> table3(std::span<const double> alphas, int k, int M, double p,
                                     std::span<const int> n_h_list)
{
    constexpr std::array<int, 4> kDefaultNh{5, 10, 20, 40};
    if (n_h_list.empty()) {
        n_h_list = kDefaultNh;
    }
    const WaveletGrid wgrid(k, M);
    const double t_last = wgrid.midpoint(wgrid.size() - 1);
    std::vector<AlphaConvergence> out;
    for (double alpha : alphas) {
        out.push_back({alpha, t_last,
                       convergence_study(builtin_example(3, alpha), wgrid, p, n_h_list, t_last)});
    }
    return out;
}

}  // namespace fracwave
