#pragma once

#include "fracwave/problem.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

namespace fracwave {

/// Malformed problem file; the message carries the line number.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a manufactured problem from "key = value" lines ('#' starts a comment):
///
///   name  = cubic          optional label
///   alpha = 0.5            order, unless overridden by the caller
///   ell   = 1              domain length (default 1)
///   a     = 1              convection coefficient, polynomial coefficients ascending in x
///   b     = 0 -1           diffusion coefficient, here b(x) = -x
///   term  = 1 3 2          adds coef * x^3 * t^2 to the exact solution; repeatable
///   term  = 1 1 2alpha     a time power may be written as a multiple of alpha
///
/// The forcing, initial and boundary data follow from the exact solution.
ProblemSpec parse_problem_config(std::istream& in, std::optional<double> alpha_override = {});

ProblemSpec load_problem_file(const std::string& path, std::optional<double> alpha_override = {});

}  // namespace fracwave
