#pragma once

#include "fdt/error.hpp"
#include "fdt/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fdt {

/// Malformed problem text; carries the 1-based position of the fault.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what);
    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed text describing an invalid system; holds every violation.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations);
    [[nodiscard]] const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

struct Problem {
    DelaySystem system;
    SolverConfig config;
};

/// Parses and validates a problem file:
///
///     nu = 1/2
///     state_dim = 2
///     control_dim = 1
///     delays = 1/3, 2/3
///     horizon = 2/3
///     [A0] ... [Ar]   n rows of n comma-separated polynomials
///     [B]             n rows of m polynomials
///     [u]             m polynomials, one per line
///     [phi]           n polynomials, one per line
///     [solver]
///     K = 40
///     sample_step = 1/30
///
/// `#` starts a comment. A missing [A0] means the zero matrix.
Problem parse_problem(std::string_view text);

/// Inverse of parse_problem; coefficients are written with 17 significant
/// digits so the result parses back to an equal Problem.
std::string serialize_problem(const Problem& problem);

/// Polynomial literal: terms `c`, `c*t`, `c*t^k`, `t`, `t^k` joined by + or -
/// (ASCII or U+2212); coefficients are decimals or p/q rationals.
Polynomial parse_polynomial(std::string_view text);

std::string format_polynomial(const Polynomial& p);

} // namespace fdt
