#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fracwave {

enum class Command { solve, table1, table2, table3, psweep, opmatrix_check, dump_matrices };
enum class OutputFormat { csv, human };

/// Parameters of one CLI invocation. Unset optionals take per-command defaults:
/// problem 1 (psweep uses 3), p = 1 (table3 and psweep use their own),
/// t = last collocation midpoint.
struct RunConfig {
    Command command = Command::solve;
    std::optional<double> alpha;
    std::optional<int> k;
    std::optional<int> M;
    std::optional<int> n_h;
    std::optional<double> p;
    std::optional<std::string> problem;  // built-in id or path to a problem file
    std::optional<double> t_eval;
    std::optional<double> x;
    std::string out;  // CSV destination (prefix for dump-matrices)
    OutputFormat format = OutputFormat::human;
    std::vector<double> p_list;
    std::vector<double> alphas;
    std::vector<int> n_h_list;
    std::optional<double> mu;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Executes one command. Tables go to `out` in the chosen format, CSV also to config.out
/// when set, and a one-line summary (with wall time) closes the output. Errors are
/// reported on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fracwave
