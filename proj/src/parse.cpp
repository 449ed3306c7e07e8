#include "adaptcoord/parse.hpp"

#include "adaptcoord/error.hpp"

#include <cctype>

namespace adaptcoord {

namespace {

constexpr long kMaxExponent = 10000;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : src_(s) {}

    Token next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Tok::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text = digits();
            if (pos_ < src_.size() && src_[pos_] == '/') {
                advance();
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError(ErrorCode::SyntaxError, "expected denominator after '/'", line_, col_);
                text += "/" + digits();
            }
            return {Tok::Number, text, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                text += src_[pos_];
                advance();
            }
            return {Tok::Ident, text, line, col};
        }
        // U+2212 MINUS SIGN in UTF-8.
        if (src_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            ++col_;
            return {Tok::Minus, "-", line, col};
        }
        advance();
        switch (c) {
        case '+': return {Tok::Plus, "+", line, col};
        case '-': return {Tok::Minus, "-", line, col};
        case '*': return {Tok::Star, "*", line, col};
        case '^': return {Tok::Caret, "^", line, col};
        case '(': return {Tok::LParen, "(", line, col};
        case ')': return {Tok::RParen, ")", line, col};
        default: break;
        }
        throw ParseError(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    std::string digits() {
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            out += src_[pos_];
            advance();
        }
        return out;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { tok_ = lex_.next(); }

    BiPoly parse() {
        BiPoly f = expr();
        if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(ErrorCode::SyntaxError, msg, tok_.line, tok_.column);
    }
    void bump() { tok_ = lex_.next(); }

    BiPoly expr() {
        BiPoly f = term();
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            bool minus = tok_.kind == Tok::Minus;
            bump();
            BiPoly g = term();
            f = minus ? f - g : f + g;
        }
        return f;
    }

    BiPoly term() {
        BiPoly f = unary();
        while (tok_.kind == Tok::Star) {
            bump();
            f = f * unary();
        }
        return f;
    }

    BiPoly unary() {
        if (tok_.kind == Tok::Minus) {
            bump();
            return -unary();
        }
        if (tok_.kind == Tok::Plus) {
            bump();
            return unary();
        }
        return power();
    }

    BiPoly power() {
        BiPoly base = primary();
        if (tok_.kind != Tok::Caret) return base;
        bump();
        Token at = tok_;
        BiPoly e = unary();
        Rational value = e.coeff(0, 0);
        bool constant = e.is_zero() || (e.size() == 1 && value != 0);
        if (!constant || !is_integer(value) || value < 0)
            throw ParseError(ErrorCode::NonIntegerExponent, "exponent must be a non-negative integer", at.line, at.column);
        if (value > kMaxExponent)
            throw ParseError(ErrorCode::SyntaxError, "exponent too large", at.line, at.column);
        return pow(base, static_cast<unsigned>(value.get_num().get_ui()));
    }

    BiPoly primary() {
        switch (tok_.kind) {
        case Tok::Number: {
            Integer den(tok_.text.find('/') == std::string::npos ? "1" : tok_.text.substr(tok_.text.find('/') + 1));
            if (den == 0) fail("zero denominator");
            Rational r = parse_rational(tok_.text);
            bump();
            return BiPoly::constant(r);
        }
        case Tok::Ident: {
            const std::string& v = tok_.text;
            BiPoly out;
            if (v == "x1" || v == "x")
                out = BiPoly::x1();
            else if (v == "x2" || v == "y")
                out = BiPoly::x2();
            else
                throw ParseError(ErrorCode::UnknownVariable, "unknown variable '" + v + "'", tok_.line, tok_.column);
            bump();
            return out;
        }
        case Tok::LParen: {
            bump();
            BiPoly f = expr();
            if (tok_.kind != Tok::RParen) fail("expected ')'");
            bump();
            return f;
        }
        case Tok::End: fail("unexpected end of input");
        default: fail("unexpected '" + tok_.text + "'");
        }
    }

    Lexer lex_;
    Token tok_;
};

} // namespace

BiPoly parse_polynomial(const std::string& src) { return Parser(src).parse(); }

} // namespace adaptcoord
