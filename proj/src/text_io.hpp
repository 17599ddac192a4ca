#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

namespace msii::cli {

// Whitespace-separated token stream that remembers the current line number
// for error reporting.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        int c = in_.get();
        while (c != EOF && std::isspace(c)) {
            if (c == '\n') ++line_;
            c = in_.get();
        }
        token_line_ = line_;
        if (c == EOF) return std::nullopt;
        std::string token;
        while (c != EOF && !std::isspace(c)) {
            token.push_back(static_cast<char>(c));
            c = in_.get();
        }
        if (c == '\n') ++line_;
        return token;
    }

    // line on which the most recently read token started
    std::size_t line() const { return token_line_; }

private:
    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t token_line_ = 1;
};

// Raised on malformed input; carries the offending line number.
struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

template <typename T>
T parse_number(TokenReader& tok, const char* what) {
    const auto token = tok.next();
    if (!token) throw ParseError(tok.line(), std::string("unexpected end of input, expected ") + what);
    T value{};
    const char* first = token->data();
    const char* last = first + token->size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(tok.line(), std::string("expected ") + what + ", got \"" + *token + "\"");
    }
    return value;
}

inline std::string format_scalar(std::int64_t v) { return std::to_string(v); }

// Shortest decimal form that round-trips.
inline std::string format_scalar(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace msii::cli
