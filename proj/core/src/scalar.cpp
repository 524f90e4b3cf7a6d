#include "hdq/scalar.hpp"

#include "hdq/errors.hpp"

#include <charconv>
#include <cmath>

namespace hdq {

namespace {

std::optional<Integer> exact_isqrt(const Integer& n) {
    if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& x) {
    auto num = exact_isqrt(x.get_num());
    auto den = exact_isqrt(x.get_den());
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

SignedRoot::SignedRoot(int sign, Rational square) : square_(std::move(square)) {
    square_.canonicalize();
    if (sgn(square_) < 0) throw ArgumentError("SignedRoot: negative square");
    sign_ = (sign == 0 || sgn(square_) == 0) ? 0 : (sign > 0 ? 1 : -1);
    if (sign_ == 0) square_ = 0;
}

SignedRoot::SignedRoot(long value) : SignedRoot(from_rational(Rational(value))) {}

SignedRoot SignedRoot::from_rational(const Rational& value) {
    return {sgn(value), value * value};
}

std::optional<Rational> SignedRoot::to_rational() const {
    if (sign_ == 0) return Rational(0);
    auto root = exact_sqrt(square_);
    if (!root) return std::nullopt;
    return sign_ > 0 ? *root : Rational(-*root);
}

double SignedRoot::to_double() const {
    return sign_ * std::sqrt(square_.get_d());
}

SignedRoot operator*(const SignedRoot& a, const SignedRoot& b) {
    return {a.sign_ * b.sign_, a.square_ * b.square_};
}

bool operator==(const SignedRoot& a, const SignedRoot& b) {
    return a.sign_ == b.sign_ && a.square_ == b.square_;
}

std::string format_rational(const Rational& x) {
    Rational c = x;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational token '" + std::string(token) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (sgn(d) == 0) throw ParseError("zero denominator in token '" + std::string(token) + "'");
    Rational r(negative ? Integer(-n) : n, d);
    r.canonicalize();
    return r;
}

std::string format_entry(const SignedRoot& x) {
    if (auto r = x.to_rational()) return format_rational(*r);
    std::string body = "sqrt(" + format_rational(x.square()) + ")";
    return x.sign() < 0 ? "-" + body : body;
}

SignedRoot parse_entry(std::string_view token) {
    std::string_view body = token;
    int sign = 1;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        if (body.front() == '-') sign = -1;
        body.remove_prefix(1);
    }
    constexpr std::string_view open = "sqrt(";
    if (body.starts_with(open)) {
        if (!body.ends_with(')')) {
            throw ParseError("malformed sqrt token '" + std::string(token) + "'");
        }
        std::string_view inner = body.substr(open.size(), body.size() - open.size() - 1);
        if (inner.empty() || inner.front() == '-' || inner.front() == '+') {
            throw ParseError("malformed sqrt token '" + std::string(token) + "'");
        }
        Rational square;
        try {
            square = parse_rational(inner);
        } catch (const ParseError&) {
            throw ParseError("malformed sqrt token '" + std::string(token) + "'");
        }
        return {sign, square};
    }
    return SignedRoot::from_rational(parse_rational(token));
}

bool is_decimal_token(std::string_view token) {
    if (token.find("sqrt") != std::string_view::npos) return false;
    return token.find_first_of(".eE") != std::string_view::npos;
}

double parse_decimal(std::string_view token) {
    std::string_view body = token;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || ptr != body.data() + body.size() || !std::isfinite(value)) {
        throw ParseError("malformed decimal token '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace hdq
