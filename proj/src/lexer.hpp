#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "amalgrade/errors.hpp"

namespace amalgrade::detail {

struct Token {
    enum Kind { Ident, Int, Punct, Str, End };
    Kind kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

// Shared tokenizer for polynomial expressions and instance files.
// '#' starts a comment running to end of line.
class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    bool at_punct(char c) const {
        return cur_.kind == Token::Punct && cur_.text.size() == 1 && cur_.text[0] == c;
    }
    bool at_ident(std::string_view s) const {
        return cur_.kind == Token::Ident && cur_.text == s;
    }

    Token expect_punct(char c, const std::string& what) {
        if (!at_punct(c)) fail("expected '" + std::string(1, c) + "' " + what);
        return next();
    }
    Token expect_ident(const std::string& what) {
        if (cur_.kind != Token::Ident) fail("expected identifier " + what);
        return next();
    }
    Token expect_int(const std::string& what) {
        if (cur_.kind != Token::Int) fail("expected integer " + what);
        return next();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + (cur_.kind == Token::End ? " at end of input"
                                                        : " near \"" + cur_.text + "\""),
                         cur_.line, cur_.col);
    }

private:
    void advance() {
        skip_space();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_.kind = Token::End;
            cur_.text.clear();
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t s = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            cur_.kind = Token::Ident;
            cur_.text.assign(src_.substr(s, pos_ - s));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t s = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                bump();
            cur_.kind = Token::Int;
            cur_.text.assign(src_.substr(s, pos_ - s));
        } else if (c == '"') {
            bump();
            std::string out;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                out += src_[pos_];
                bump();
            }
            if (pos_ >= src_.size())
                throw ParseError("unterminated string", cur_.line, cur_.col);
            bump();
            cur_.kind = Token::Str;
            cur_.text = std::move(out);
        } else {
            cur_.kind = Token::Punct;
            cur_.text.assign(1, c);
            bump();
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
};

} // namespace amalgrade::detail
