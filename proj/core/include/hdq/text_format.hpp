#pragma once

#include "hdq/matrix.hpp"
#include "hdq/scalar.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hdq {

// Matrix text format: a header line "m n", then m lines of n
// whitespace-separated tokens. Blank lines and lines starting with '#' are
// ignored. Every line, including the last, ends with '\n'.

std::string format_matrix(const SignMatrix& m);
std::string format_matrix(const ExactMatrix& m);
std::string format_matrix(const FloatMatrix& m);

/// Exact mode: decimal literals are rejected.
ExactMatrix parse_exact_matrix(std::string_view text);
/// Float mode: accepts decimals, rationals and sqrt tokens.
FloatMatrix parse_float_matrix(std::string_view text);

/// Space-separated rational tokens on one line (no trailing newline).
std::string format_rationals(std::span<const Rational> values);
/// Accepts whitespace and/or comma separators.
std::vector<Rational> parse_rationals(std::string_view text);
std::vector<SignedRoot> parse_entries(std::string_view text);

}  // namespace hdq
