#include "fracwave/cli.hpp"

#include "fracwave/collocation.hpp"
#include "fracwave/metrics.hpp"
#include "fracwave/operational_matrix.hpp"
#include "fracwave/problem_config.hpp"
#include "fracwave/report.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracwave {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ProblemSpec resolve_problem(const RunConfig& cfg, const std::string& default_id)
{
    const std::string id = cfg.problem.value_or(default_id);
    const double default_alpha = id == "2" ? 0.7 : (id == "3" ? 0.3 : 0.2);
    if (id == "1" || id == "2" || id == "3") {
        return builtin_example(std::stoi(id), cfg.alpha.value_or(default_alpha));
    }
    return load_problem_file(id, cfg.alpha);
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write '" + path + "'");
    }
    return file;
}

// Writes the CSV rendering to config.out (if any) and the chosen rendering to `out`.
template <class CsvWriter, class HumanWriter>
void emit(const RunConfig& cfg, std::ostream& out, CsvWriter csv, HumanWriter human)
{
    if (!cfg.out.empty()) {
        auto file = open_output(cfg.out);
        csv(file);
    }
    if (cfg.format == OutputFormat::csv) {
        csv(out);
    } else {
        human(out);
    }
}

std::string seconds(std::chrono::steady_clock::time_point start)
{
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

void run_solve(const RunConfig& cfg, std::ostream& out, std::chrono::steady_clock::time_point start)
{
    const auto problem = resolve_problem(cfg, "1");
    const WaveletGrid wgrid(cfg.k.value_or(2), cfg.M.value_or(1));
    const SplineGrid sgrid(problem.ell, cfg.n_h.value_or(20), cfg.p.value_or(1.0));
    const double t = cfg.t_eval.value_or(wgrid.midpoint(wgrid.size() - 1));
    const auto outcome = solve_problem(problem, wgrid, sgrid);
    const auto& field = outcome.field;

    emit(
        cfg, out, [&](std::ostream& o) { write_solution_csv(o, field, t); },
        [&](std::ostream& o) { write_solution_human(o, field, t); });

    if (cfg.x) {
        const double y = reconstruct(field, *cfg.x, t);
        out << "y_N(" << format_param(*cfg.x) << ", " << format_param(t)
            << ") = " << format_exact(y);
        if (problem.exact) {
            out << "  |y - y_N| = " << format_error(std::abs((*problem.exact)(*cfg.x, t) - y));
        }
        out << '\n';
    }

    out << "solve problem=" << problem.name << " alpha=" << format_param(problem.alpha)
        << " N_t=" << wgrid.size() << " N_h=" << sgrid.n_h() << " p=" << format_param(sgrid.p())
        << " unknowns=" << field.coefficients.size() << " t=" << format_param(t);
    if (problem.exact && t > 0.0) {
        const auto report = error_norms(field, t);
        out << " e2=" << format_error(report.e2) << " einf=" << format_error(report.einf);
    }
    out << " residual=" << format_error(outcome.relative_residual)
        << (outcome.residual_ok ? "" : " (WARNING: above tolerance)") << " time=" << seconds(start)
        << '\n';
}

void run_nodal_table(const RunConfig& cfg, std::ostream& out,
                     std::chrono::steady_clock::time_point start, int which)
{
    const auto table = which == 1 ? table1(cfg.alpha.value_or(0.2), cfg.p.value_or(1.0),
                                           cfg.n_h.value_or(20), cfg.t_eval.value_or(0.25))
                                  : table2(cfg.alpha.value_or(0.7), cfg.p.value_or(1.0),
                                           cfg.n_h.value_or(10), cfg.t_eval.value_or(0.5));
    emit(
        cfg, out, [&](std::ostream& o) { write_nodal_table_csv(o, table); },
        [&](std::ostream& o) { write_nodal_table_human(o, table); });
    double worst = 0.0;
    for (const auto& row : table.errors) {
        for (double e : row) {
            worst = std::max(worst, e);
        }
    }
    out << "table" << which << " max_abs_error=" << format_error(worst)
        << " max_residual=" << format_error(table.max_relative_residual)
        << " time=" << seconds(start) << '\n';
}

void run_table3(const RunConfig& cfg, std::ostream& out, std::chrono::steady_clock::time_point start)
{
    std::vector<double> alphas = cfg.alphas;
    if (cfg.alpha) {
        alphas = {*cfg.alpha};
    }
    if (alphas.empty()) {
        alphas = {0.3, 0.6, 0.9};
    }
    const auto blocks = table3(alphas, cfg.k.value_or(6), cfg.M.value_or(2),
                               cfg.p.value_or(0.025), cfg.n_h_list);
    emit(
        cfg, out, [&](std::ostream& o) { write_convergence_csv(o, blocks); },
        [&](std::ostream& o) { write_convergence_human(o, blocks); });
    out << "table3 alphas=" << blocks.size() << " t=" << format_param(blocks.front().t_eval)
        << " time=" << seconds(start) << '\n';
}

void run_psweep(const RunConfig& cfg, std::ostream& out, std::chrono::steady_clock::time_point start)
{
    const auto problem = resolve_problem(cfg, "3");
    const WaveletGrid wgrid(cfg.k.value_or(6), cfg.M.value_or(1));
    const SplineGrid base(problem.ell, cfg.n_h.value_or(20), 1.0);
    std::vector<double> ps = cfg.p_list;
    if (ps.empty()) {
        ps = {0.001, 0.002, 0.0035, 0.005, 0.01, 0.1, 0.5, 1.0};
    }
    const double t = cfg.t_eval.value_or(wgrid.midpoint(wgrid.size() - 1));
    const auto rows = p_sweep(problem, wgrid, base, ps, t);
    emit(
        cfg, out, [&](std::ostream& o) { write_psweep_csv(o, rows); },
        [&](std::ostream& o) { write_psweep_human(o, rows); });
    const auto best = std::min_element(rows.begin(), rows.end(),
                                       [](const auto& a, const auto& b) { return a.e2 < b.e2; });
    out << "psweep problem=" << problem.name << " best_p=" << format_param(best->p)
        << " best_e2=" << format_error(best->e2) << " time=" << seconds(start) << '\n';
}

void run_opmatrix_check(const RunConfig& cfg, std::ostream& out,
                        std::chrono::steady_clock::time_point start)
{
    std::vector<double> mus = {0.3, 0.5, 1.0};
    if (cfg.mu) {
        mus = {*cfg.mu};
    }
    const int k_max = cfg.k.value_or(3);
    const int m = cfg.M.value_or(1);
    std::ostringstream csv;
    csv << "k,M,mu,max_midpoint_error\n";
    for (double mu : mus) {
        for (int k = 0; k <= k_max; ++k) {
            const double err = oracle_midpoint_error(build_j(mu, WaveletGrid(k, m)));
            csv << k << ',' << m << ',' << format_param(mu) << ',' << format_error(err) << '\n';
        }
    }
    if (!cfg.out.empty()) {
        open_output(cfg.out) << csv.str();
    }
    out << csv.str();
    out << "opmatrix-check M=" << m << " k<=" << k_max << " time=" << seconds(start) << '\n';
}

void run_dump(const RunConfig& cfg, std::ostream& out, std::chrono::steady_clock::time_point start)
{
    const double mu = cfg.mu.value_or(0.5);
    const auto ops = build_j(mu, WaveletGrid(cfg.k.value_or(1), cfg.M.value_or(1)));
    if (cfg.out.empty()) {
        write_matrix_csv(out, ops.j);
    } else {
        const std::array<std::pair<const char*, const Eigen::MatrixXd*>, 3> mats{
            {{"_Q.csv", &ops.q}, {"_F.csv", &ops.f}, {"_J.csv", &ops.j}}};
        for (const auto& [suffix, m] : mats) {
            auto file = open_output(cfg.out + suffix);
            write_matrix_csv(file, *m);
        }
    }
    out << "dump-matrices mu=" << format_param(mu) << " N_t=" << ops.grid.size()
        << " time=" << seconds(start) << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (config.command) {
        case Command::solve:
            run_solve(config, out, start);
            break;
        case Command::table1:
            run_nodal_table(config, out, start, 1);
            break;
        case Command::table2:
            run_nodal_table(config, out, start, 2);
            break;
        case Command::table3:
            run_table3(config, out, start);
            break;
        case Command::psweep:
            run_psweep(config, out, start);
            break;
        case Command::opmatrix_check:
            run_opmatrix_check(config, out, start);
            break;
        case Command::dump_matrices:
            run_dump(config, out, start);
            break;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace fracwave
