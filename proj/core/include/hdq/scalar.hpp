#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace hdq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Exact real number of the form sign * sqrt(square), square a nonnegative
/// rational. Every entry of a Hadamardesque matrix has this form, and the
/// family is closed under multiplication.
class SignedRoot {
public:
    SignedRoot() = default;
    SignedRoot(int sign, Rational square);
    SignedRoot(long value);  // NOLINT(google-explicit-constructor)

    static SignedRoot from_rational(const Rational& value);
    static SignedRoot root_of(const Rational& square) { return {1, square}; }

    int sign() const { return sign_; }
    const Rational& square() const { return square_; }
    bool is_zero() const { return sign_ == 0; }

    std::optional<Rational> to_rational() const;
    bool is_rational() const { return to_rational().has_value(); }
    double to_double() const;

    SignedRoot operator-() const { return {-sign_, square_}; }
    friend SignedRoot operator*(const SignedRoot& a, const SignedRoot& b);
    friend bool operator==(const SignedRoot& a, const SignedRoot& b);

private:
    int sign_ = 0;
    Rational square_ = 0;
};

/// Rational tokens: "p" or "p/q" with optional sign, canonical form
/// (q omitted when 1).
std::string format_rational(const Rational& x);
Rational parse_rational(std::string_view token);

/// Entry tokens: rational tokens plus "sqrt(p/q)" and "-sqrt(p/q)".
/// Rational-valued entries are always printed in rational form.
std::string format_entry(const SignedRoot& x);
SignedRoot parse_entry(std::string_view token);

/// True when the token is a decimal literal only meaningful in float mode.
bool is_decimal_token(std::string_view token);
double parse_decimal(std::string_view token);

}  // namespace hdq
