#include "fracwave/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <map>

int main(int argc, char** argv)
{
    using fracwave::Command;
    fracwave::RunConfig cfg;

    CLI::App app{"Time-fractional convection-diffusion solver (sine-cosine wavelets x exponential B-splines)"};
    app.require_subcommand(1);

    const std::map<std::string, fracwave::OutputFormat> formats{
        {"csv", fracwave::OutputFormat::csv}, {"human", fracwave::OutputFormat::human}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--alpha", cfg.alpha, "Caputo order in (0,1)");
        sub->add_option("--k", cfg.k, "wavelet level k (N_t = 2^k (2M+1))");
        sub->add_option("--M", cfg.M, "harmonics per wavelet block");
        sub->add_option("--Nh", cfg.n_h, "number of spatial intervals");
        sub->add_option("--p", cfg.p, "exponential spline tension");
        sub->add_option("--problem", cfg.problem, "built-in example 1|2|3 or a problem file");
        sub->add_option("--t", cfg.t_eval, "evaluation time");
        sub->add_option("--out", cfg.out, "CSV output path");
        sub->add_option("--format", cfg.format, "stdout rendering: csv|human")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    struct Sub {
        const char* name;
        const char* help;
        Command command;
    };
    const Sub subs[] = {
        {"solve", "solve one problem and report errors", Command::solve},
        {"table1", "example 1 absolute errors for several (k,M)", Command::table1},
        {"table2", "example 2 absolute errors for several (k,M)", Command::table2},
        {"table3", "example 3 spatial convergence study", Command::table3},
        {"psweep", "errors versus the spline tension p", Command::psweep},
        {"opmatrix-check", "operational matrix versus quadrature of the fractional integral",
         Command::opmatrix_check},
        {"dump-matrices", "write Q, F and J as CSV", Command::dump_matrices},
    };
    for (const auto& s : subs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub);
        sub->callback([&cfg, c = s.command] { cfg.command = c; });
        if (s.command == Command::solve) {
            sub->add_option("--x", cfg.x, "report y_N at this x (with --t)");
        }
        if (s.command == Command::psweep) {
            sub->add_option("--p-list", cfg.p_list, "tension values to sweep")->delimiter(',');
        }
        if (s.command == Command::table3) {
            sub->add_option("--alphas", cfg.alphas, "orders to tabulate")->delimiter(',');
            sub->add_option("--Nh-list", cfg.n_h_list, "doubling sequence of N_h")->delimiter(',');
        }
        if (s.command == Command::opmatrix_check || s.command == Command::dump_matrices) {
            sub->add_option("--mu", cfg.mu, "integration order in (0,1]");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return fracwave::kExitUsage;
    }
    return fracwave::run(cfg, std::cout, std::cerr);
}
