#pragma once

#include "fracwave/metrics.hpp"

#include <Eigen/Dense>
#include <ostream>
#include <span>
#include <string>

namespace fracwave {

/// Locale-independent "%.6e".
std::string format_error(double value);
/// Locale-independent "%.17g".
std::string format_exact(double value);
/// "%.12g", for echoing input parameters.
std::string format_param(double value);

void write_nodal_table_csv(std::ostream& out, const NodalErrorTable& table);
void write_nodal_table_human(std::ostream& out, const NodalErrorTable& table);

void write_convergence_csv(std::ostream& out, std::span<const AlphaConvergence> blocks);
void write_convergence_human(std::ostream& out, std::span<const AlphaConvergence> blocks);

void write_psweep_csv(std::ostream& out, std::span<const PSweepRow> rows);
void write_psweep_human(std::ostream& out, std::span<const PSweepRow> rows);

/// Solution at the knots x_0..x_{N_h}: x, y_numeric, y_exact, abs_error.
void write_solution_csv(std::ostream& out, const SolutionField& field, double t);
void write_solution_human(std::ostream& out, const SolutionField& field, double t);

/// Row-major, full precision.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);

}  // namespace fracwave
