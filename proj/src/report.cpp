#include "fracwave/report.hpp"

#include <cmath>
#include <cstdio>

namespace fracwave {

// snprintf formats with the "C" locale unless the process calls setlocale, which we never do.
std::string format_error(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", value);
    return buf;
}

std::string format_exact(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_param(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

namespace {

std::string column_label(const std::pair<int, int>& km)
{
    return "k" + std::to_string(km.first) + "_M" + std::to_string(km.second);
}

std::string rate_or_dash(const std::optional<double>& rate)
{
    if (!rate) {
        return "-";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *rate);
    return buf;
}

std::string fixed(double v, const char* fmt)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

void write_nodal_table_csv(std::ostream& out, const NodalErrorTable& table)
{
    out << "x";
    for (const auto& km : table.columns) {
        out << ',' << column_label(km);
    }
    out << '\n';
    for (std::size_t r = 0; r < table.xs.size(); ++r) {
        out << fixed(table.xs[r], "%.4g");
        for (double e : table.errors[r]) {
            out << ',' << format_error(e);
        }
        out << '\n';
    }
}

void write_nodal_table_human(std::ostream& out, const NodalErrorTable& table)
{
    out << "absolute errors, " << table.problem << ", alpha=" << fixed(table.alpha, "%g")
        << ", p=" << fixed(table.p, "%g") << ", N_h=" << table.n_h
        << ", t=" << fixed(table.t_eval, "%g") << '\n';
    out << "   x";
    for (const auto& km : table.columns) {
        out << "   k=" << km.first << ",M=" << km.second << " ";
    }
    out << '\n';
    for (std::size_t r = 0; r < table.xs.size(); ++r) {
        out << fixed(table.xs[r], "%4.1f");
        for (double e : table.errors[r]) {
            out << "   " << format_error(e);
        }
        out << '\n';
    }
}

void write_convergence_csv(std::ostream& out, std::span<const AlphaConvergence> blocks)
{
    out << "alpha,N_h,e2,rate2,einf,rate_inf\n";
    for (const auto& block : blocks) {
        for (const auto& row : block.table.rows) {
            out << fixed(block.alpha, "%g") << ',' << row.n_h << ',' << format_error(row.e2) << ','
                << rate_or_dash(row.rate2) << ',' << format_error(row.einf) << ','
                << rate_or_dash(row.rate_inf) << '\n';
        }
    }
}

void write_convergence_human(std::ostream& out, std::span<const AlphaConvergence> blocks)
{
    for (const auto& block : blocks) {
        out << "alpha=" << fixed(block.alpha, "%g") << "  t=" << fixed(block.t_eval, "%.6f")
            << '\n';
        out << "  N_h            e2    rate          einf    rate\n";
        for (const auto& row : block.table.rows) {
            out << fixed(row.n_h, "%5.0f") << "  " << format_error(row.e2) << "  "
                << rate_or_dash(row.rate2) << "  " << format_error(row.einf) << "  "
                << rate_or_dash(row.rate_inf) << '\n';
        }
    }
}

void write_psweep_csv(std::ostream& out, std::span<const PSweepRow> rows)
{
    out << "p,e2,einf\n";
    for (const auto& row : rows) {
        out << format_param(row.p) << ',' << format_error(row.e2) << ',' << format_error(row.einf)
            << '\n';
    }
}

void write_psweep_human(std::ostream& out, std::span<const PSweepRow> rows)
{
    out << "           p            e2          einf\n";
    for (const auto& row : rows) {
        out << fixed(row.p, "%12.6g") << "  " << format_error(row.e2) << "  "
            << format_error(row.einf) << '\n';
    }
}

void write_solution_csv(std::ostream& out, const SolutionField& field, double t)
{
    const bool exact = field.problem.exact.has_value();
    out << "x,y_numeric" << (exact ? ",y_exact,abs_error" : "") << '\n';
    for (int j = 0; j <= field.sgrid.n_h(); ++j) {
        const double x = j == field.sgrid.n_h() ? field.sgrid.ell() : field.sgrid.knot(j);
        const double y = reconstruct(field, x, t);
        out << format_param(x) << ',' << format_exact(y);
        if (exact) {
            const double ye = (*field.problem.exact)(x, t);
            out << ',' << format_exact(ye) << ',' << format_error(std::abs(ye - y));
        }
        out << '\n';
    }
}

void write_solution_human(std::ostream& out, const SolutionField& field, double t)
{
    const bool exact = field.problem.exact.has_value();
    out << "solution at t=" << fixed(t, "%.6f") << '\n';
    for (int j = 0; j <= field.sgrid.n_h(); ++j) {
        const double x = j == field.sgrid.n_h() ? field.sgrid.ell() : field.sgrid.knot(j);
        const double y = reconstruct(field, x, t);
        out << fixed(x, "%8.4f") << "  " << fixed(y, "% .10e");
        if (exact) {
            out << "  err " << format_error(std::abs((*field.problem.exact)(x, t) - y));
        }
        out << '\n';
    }
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m)
{
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c != 0) {
                out << ',';
            }
            out << format_exact(m(r, c));
        }
        out << '\n';
    }
}

}  // namespace fracwave
