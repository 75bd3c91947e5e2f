#pragma once

// Line/token splitting shared by the graph and script readers.

#include "lpaflow/errors.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace lpaflow::text {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;     // 1-based
    std::string_view body;  // comment stripped
    std::vector<Token> tokens;
};

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Tokens split on whitespace and on any character in `separators`, which are dropped.
inline std::vector<Token> split(std::string_view body, std::size_t first_column, std::string_view separators = {}) {
    std::vector<Token> tokens;
    auto is_break = [&](char c) { return is_space(c) || separators.find(c) != std::string_view::npos; };
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && is_break(body[i])) ++i;
        if (i >= body.size()) break;
        const std::size_t begin = i;
        while (i < body.size() && !is_break(body[i])) ++i;
        tokens.push_back({body.substr(begin, i - begin), first_column + begin});
    }
    return tokens;
}

// Non-blank lines only; '#' at the start of a token begins a comment.
inline std::vector<Line> lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view body = text.substr(pos, eol - pos);
        ++number;
        // A '#' inside a token (as in the split label v#1) is not a comment.
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (body[i] == '#' && (i == 0 || is_space(body[i - 1]))) {
                body = body.substr(0, i);
                break;
            }
        }
        Line line{number, body, split(body, 1)};
        if (!line.tokens.empty()) out.push_back(std::move(line));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return out;
}

template <typename T>
T parse_unsigned(std::size_t line, const Token& tok, const char* what) {
    T value{};
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, tok.column,
                         std::string("expected a non-negative integer for ") + what + ", found '" +
                             std::string(tok.text) + "'");
    }
    return value;
}

}  // namespace lpaflow::text
