#include "gcdc/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>

namespace gcdc {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { number, ident, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t start = i;
        if (std::isdigit(c) || (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            if (j < src.size() && src[j] == '.') {
                ++j;
                while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
                    while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                    j = k;
                }
            }
            t.kind = Tok::number;
            t.text = src.substr(start, j - start);
            advance(j - start);
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Tok::ident;
            t.text = src.substr(start, j - start);
            advance(j - start);
        } else {
            static const char* two[] = {"->", "!=", "&&"};
            t.kind = Tok::punct;
            for (const char* p : two) {
                if (src.compare(i, 2, p) == 0) {
                    t.text = p;
                }
            }
            if (t.text.empty()) {
                if (std::string("(),+-*/^>").find(static_cast<char>(c)) == std::string::npos) {
                    throw ParseError(ParseError::Kind::syntax, line, col,
                                     std::string("unexpected character '") + static_cast<char>(c) + "'");
                }
                t.text = std::string(1, static_cast<char>(c));
            }
            advance(t.text.size());
        }
        out.push_back(t);
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(const std::string& src, std::vector<std::string> params) : toks_(lex(src)), params_(std::move(params)) {}

    ParsedMap map() {
        expect_ident("fn");
        expect("(");
        if (!peek_is(")")) {
            do {
                const Token& t = next();
                if (t.kind != Tok::ident) {
                    fail(t, "expected parameter name");
                }
                for (const std::string& p : params_) {
                    if (p == t.text) {
                        fail(t, "duplicate parameter '" + t.text + "'");
                    }
                }
                params_.push_back(t.text);
            } while (accept(","));
        }
        expect(")");
        expect("->");
        expect("(");
        std::vector<Expr> coords;
        if (!peek_is(")")) {
            do {
                coords.push_back(expr());
            } while (accept(","));
        }
        expect(")");
        Guard g;
        if (peek().kind == Tok::ident && peek().text == "where") {
            next();
            g = guard();
        }
        end();
        g = guard_and(g, Guard::from_domain_of(coords));
        return ParsedMap{params_, SmoothMap(params_.size(), std::move(coords), std::move(g))};
    }

    Expr lone_expr() {
        Expr e = expr();
        end();
        return e;
    }

    Guard lone_guard() {
        Guard g = guard();
        end();
        return g;
    }

private:
    Guard guard() {
        Guard g;
        do {
            Expr e = expr();
            bool positive = false;
            if (accept(">")) {
                positive = true;
            } else if (!accept("!=")) {
                fail(peek(), "expected '>' or '!='");
            }
            const Token& z = next();
            if (z.kind != Tok::number || Rational::from_decimal(z.text) != std::optional<Rational>(Rational(0))) {
                fail(z, "guard atoms compare against 0");
            }
            g.add({e, positive});
        } while (accept("&&"));
        return g;
    }

    Expr expr() {
        Expr e = term();
        while (peek_is("+") || peek_is("-")) {
            Op op = next().text == "+" ? Op::add : Op::sub;
            e = Expr::raw(op, e, term());
        }
        return e;
    }

    Expr term() {
        Expr e = factor();
        while (peek_is("*") || peek_is("/")) {
            Op op = next().text == "*" ? Op::mul : Op::div;
            e = Expr::raw(op, e, factor());
        }
        return e;
    }

    Expr factor() {
        bool negate = accept("-");
        Expr e = atom();
        if (accept("^")) {
            const Token& t = next();
            if (t.kind != Tok::number || t.text.find_first_not_of("0123456789") != std::string::npos) {
                fail(t, "exponent must be a natural number");
            }
            e = Expr::raw_pow(e, static_cast<unsigned>(std::stoul(t.text)));
        }
        return negate ? Expr::raw(Op::neg, e) : e;
    }

    Expr atom() {
        const Token& t = next();
        if (t.kind == Tok::number) {
            double v = std::strtod(t.text.c_str(), nullptr);
            Expr c = Expr::constant(v);
            if (auto r = Rational::from_decimal(t.text)) {
                c = Expr::constant(*r);
                if (c.value().value != v) {
                    // keep the correctly rounded IEEE value alongside the exact one
                    c = Expr::constant(v);
                }
            }
            return c;
        }
        if (t.kind == Tok::ident) {
            static const std::pair<const char*, Op> functions[] = {
                {"sin", Op::sin}, {"cos", Op::cos}, {"exp", Op::exp}, {"log", Op::log}, {"sqrt", Op::sqrt}};
            for (auto [name, op] : functions) {
                if (t.text == name) {
                    expect("(");
                    Expr arg = expr();
                    if (peek_is(",")) {
                        throw ParseError(ParseError::Kind::wrong_arity, peek().line, peek().column,
                                         "wrong arity: " + t.text + " takes one argument");
                    }
                    expect(")");
                    return Expr::raw(op, arg);
                }
            }
            for (std::size_t i = 0; i < params_.size(); ++i) {
                if (params_[i] == t.text) {
                    return Expr::var(i);
                }
            }
            throw ParseError(ParseError::Kind::unbound_variable, t.line, t.column, "unbound variable '" + t.text + "'");
        }
        if (t.kind == Tok::punct && t.text == "(") {
            Expr e = expr();
            expect(")");
            return e;
        }
        fail(t, "expected a number, variable, function or '('");
    }

    const Token& peek() const { return toks_[pos_]; }
    bool peek_is(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }

    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Tok::end) {
            ++pos_;
        }
        return t;
    }

    bool accept(const char* p) {
        if (peek_is(p)) {
            next();
            return true;
        }
        return false;
    }

    void expect(const char* p) {
        if (!accept(p)) {
            fail(peek(), std::string("expected '") + p + "'");
        }
    }

    void expect_ident(const char* word) {
        const Token& t = next();
        if (t.kind != Tok::ident || t.text != word) {
            fail(t, std::string("expected '") + word + "'");
        }
    }

    void end() {
        if (peek().kind != Tok::end) {
            fail(peek(), "unexpected '" + peek().text + "'");
        }
    }

    [[noreturn]] void fail(const Token& t, const std::string& what) const {
        std::string near = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw ParseError(ParseError::Kind::syntax, t.line, t.column, "syntax error near " + near + ": " + what);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> params_;
};

}  // namespace

ParsedMap parse_map(const std::string& text) { return Parser(text, {}).map(); }

Expr parse_expr(const std::string& text, const std::vector<std::string>& params) {
    return Parser(text, params).lone_expr();
}

Guard parse_guard(const std::string& text, const std::vector<std::string>& params) {
    return Parser(text, params).lone_guard();
}

}  // namespace gcdc
