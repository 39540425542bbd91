#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "explog/parse_error.hpp"

namespace explog::detail {

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t pos;

    bool is(char symbol) const { return kind == Kind::Symbol && text.size() == 1 && text[0] == symbol; }
    bool is_ident(std::string_view name) const { return kind == Kind::Ident && text == name; }
    std::string describe() const {
        return kind == Kind::End ? "end of input" : "'" + text + "'";
    }
};

inline std::vector<Token> tokenize(std::string_view src, std::string_view symbols) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        unsigned char ch = static_cast<unsigned char>(src[i]);
        if (std::isspace(ch)) {
            ++i;
        } else if (std::isdigit(ch)) {
            std::size_t start = i;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)), start});
        } else if (std::isalpha(ch) || ch == '_') {
            std::size_t start = i;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), start});
        } else if (symbols.find(static_cast<char>(ch)) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(ch)), i});
            ++i;
        } else {
            throw ParseError(i, {}, "'" + std::string(1, static_cast<char>(ch)) + "'");
        }
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

/// Cursor over a token list with expectation-tracking helpers.
class TokenCursor {
public:
    explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
    }
    const Token& next() {
        const Token& t = tokens_[index_];
        if (index_ + 1 < tokens_.size()) ++index_;
        return t;
    }
    bool accept(char symbol) {
        if (peek().is(symbol)) {
            next();
            return true;
        }
        return false;
    }
    const Token& expect(char symbol) {
        if (!peek().is(symbol)) fail({"'" + std::string(1, symbol) + "'"});
        return next();
    }
    const Token& expect_ident(std::string_view name) {
        if (!peek().is_ident(name)) fail({"'" + std::string(name) + "'"});
        return next();
    }
    const Token& expect_number() {
        if (peek().kind != Token::Kind::Number) fail({"integer"});
        return next();
    }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(peek().pos, std::move(expected), peek().describe());
    }

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace explog::detail
