#include "hdq/text_format.hpp"

#include "hdq/errors.hpp"

#include <charconv>
#include <cstdio>
#include <functional>

namespace hdq {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line, bool commas = false) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    auto is_sep = [commas](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || (commas && c == ',');
    };
    while (pos < line.size()) {
        while (pos < line.size() && is_sep(line[pos])) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && !is_sep(line[pos])) ++pos;
        if (pos > start) out.push_back(line.substr(start, pos - start));
    }
    return out;
}

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        out.push_back({number, line});
    }
    return out;
}

std::size_t parse_dimension(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
        throw ParseError("line " + std::to_string(line) + ": bad dimension '" + std::string(token) +
                         "'");
    }
    return value;
}

template <class T>
Matrix<T> parse_matrix(std::string_view text, const std::function<T(std::string_view)>& parse_token) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty matrix text: missing 'm n' header");
    auto header = split_tokens(lines.front().text);
    if (header.size() != 2) {
        throw ParseError("line " + std::to_string(lines.front().number) +
                         ": header must be 'm n'");
    }
    std::size_t rows = parse_dimension(header[0], lines.front().number);
    std::size_t cols = parse_dimension(header[1], lines.front().number);
    if (lines.size() - 1 != rows) {
        throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                         std::to_string(lines.size() - 1));
    }
    Matrix<T> out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Line& line = lines[r + 1];
        auto tokens = split_tokens(line.text);
        if (tokens.size() != cols) {
            throw ParseError("line " + std::to_string(line.number) + ": expected " +
                             std::to_string(cols) + " entries, found " +
                             std::to_string(tokens.size()));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            try {
                out(r, c) = parse_token(tokens[c]);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line.number) + ": " + e.what());
            }
        }
    }
    return out;
}

template <class T, class Fmt>
std::string format_any(const Matrix<T>& m, Fmt fmt) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ' ';
            out += fmt(m(r, c));
        }
        out += '\n';
    }
    return out;
}

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, ptr);
    // Keep float output distinguishable from exact tokens when re-read.
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

}  // namespace

std::string format_matrix(const SignMatrix& m) {
    return format_any(m, [](int x) { return std::to_string(x); });
}

std::string format_matrix(const ExactMatrix& m) {
    return format_any(m, [](const SignedRoot& x) { return format_entry(x); });
}

std::string format_matrix(const FloatMatrix& m) {
    return format_any(m, format_double);
}

ExactMatrix parse_exact_matrix(std::string_view text) {
    return parse_matrix<SignedRoot>(text, [](std::string_view token) {
        if (is_decimal_token(token)) {
            throw ParseError("decimal token '" + std::string(token) +
                             "' is not allowed in exact mode (use float mode)");
        }
        return parse_entry(token);
    });
}

FloatMatrix parse_float_matrix(std::string_view text) {
    return parse_matrix<double>(text, [](std::string_view token) {
        if (is_decimal_token(token)) return parse_decimal(token);
        return parse_entry(token).to_double();
    });
}

std::string format_rationals(std::span<const Rational> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ' ';
        out += format_rational(values[i]);
    }
    return out;
}

std::vector<Rational> parse_rationals(std::string_view text) {
    std::vector<Rational> out;
    for (auto token : split_tokens(text, true)) out.push_back(parse_rational(token));
    return out;
}

std::vector<SignedRoot> parse_entries(std::string_view text) {
    std::vector<SignedRoot> out;
    for (auto token : split_tokens(text, true)) {
        if (is_decimal_token(token)) {
            throw ParseError("decimal token '" + std::string(token) + "' is not allowed in exact mode");
        }
        out.push_back(parse_entry(token));
    }
    return out;
}

}  // namespace hdq
