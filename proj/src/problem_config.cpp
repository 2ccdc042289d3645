#include "fracwave/problem_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace fracwave {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& msg)
{
    throw ConfigError("problem file line " + std::to_string(line) + ": " + msg);
}

double to_number(const std::string& token, int line)
{
    double value = 0.0;
    const auto* begin = token.data();
    const auto* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        fail(line, "expected a number, got '" + token + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

// time power as written: a number, "alpha", or "<number>alpha"
struct TimePower {
    double constant = 0.0;
    double alpha_multiple = 0.0;
};

TimePower parse_time_power(const std::string& token, int line)
{
    constexpr std::string_view suffix = "alpha";
    if (token.size() >= suffix.size() &&
        token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0) {
        const std::string head = token.substr(0, token.size() - suffix.size());
        return TimePower{0.0, head.empty() ? 1.0 : to_number(head, line)};
    }
    return TimePower{to_number(token, line), 0.0};
}

struct RawTerm {
    double coef;
    int x_power;
    TimePower t_power;
};

}  // namespace

ProblemSpec parse_problem_config(std::istream& in, std::optional<double> alpha_override)
{
    std::string name = "custom";
    std::optional<double> alpha;
    double ell = 1.0;
    Polynomial a_poly;
    Polynomial b_poly;
    bool have_a = false;
    bool have_b = false;
    std::vector<RawTerm> raw_terms;

    std::string raw;
    for (int line = 1; std::getline(in, raw); ++line) {
        const std::string content = trim(raw.substr(0, raw.find('#')));
        if (content.empty()) {
            continue;
        }
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            fail(line, "expected 'key = value'");
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        const auto tokens = split(value);
        if (tokens.empty()) {
            fail(line, "missing value for '" + key + "'");
        }
        if (key == "name") {
            name = value;
        } else if (key == "alpha") {
            alpha = to_number(value, line);
        } else if (key == "ell") {
            ell = to_number(value, line);
        } else if (key == "a" || key == "b") {
            Polynomial poly;
            for (const auto& tok : tokens) {
                poly.coeffs.push_back(to_number(tok, line));
            }
            (key == "a" ? a_poly : b_poly) = poly;
            (key == "a" ? have_a : have_b) = true;
        } else if (key == "term") {
            if (tokens.size() != 3) {
                fail(line, "term needs 'coef x_power t_power'");
            }
            const double xp = to_number(tokens[1], line);
            if (xp < 0.0 || xp != static_cast<int>(xp)) {
                fail(line, "x power must be a non-negative integer");
            }
            raw_terms.push_back({to_number(tokens[0], line), static_cast<int>(xp),
                                 parse_time_power(tokens[2], line)});
        } else {
            fail(line, "unknown key '" + key + "'");
        }
    }

    if (alpha_override) {
        alpha = alpha_override;
    }
    if (!alpha) {
        throw ConfigError("problem file sets no alpha and none was given");
    }
    if (!(*alpha > 0.0 && *alpha < 1.0)) {
        throw ConfigError("alpha must lie in (0,1)");
    }
    if (!have_a || !have_b) {
        throw ConfigError("problem file must define both 'a' and 'b'");
    }
    std::vector<SeparableTerm> terms;
    for (const auto& rt : raw_terms) {
        const double tp = rt.t_power.constant + rt.t_power.alpha_multiple * *alpha;
        if (tp < 0.0) {
            throw ConfigError("negative time power in term");
        }
        terms.push_back({rt.coef, rt.x_power, tp});
    }

    auto spec = manufactured(*alpha, separable_solution(terms, *alpha),
                             [a_poly](double x) { return a_poly(x); },
                             [b_poly](double x) { return b_poly(x); }, ell);
    spec.name = name;
    return spec;
}

ProblemSpec load_problem_file(const std::string& path, std::optional<double> alpha_override)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open problem file '" + path + "'");
    }
    return parse_problem_config(in, alpha_override);
}

}  // namespace fracwave
