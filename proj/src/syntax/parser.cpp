// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/syntax/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <vector>

namespace minlog {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), message_(message),
      line_(line), column_(column) {}

bool is_reserved_word(std::string_view word) { return word == "forall" || word == "exists" || word == "false"; }

namespace {

enum class Tok { Ident, Number, LParen, RParen, Dot, Tilde, Amp, Bar, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\''; }

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t k = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++k;
        }
    };
    while (k < text.size()) {
        const char c = text[k];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            advance(1);
            continue;
        }
        const std::size_t l0 = line;
        const std::size_t c0 = col;
        if (ident_start(c)) {
            std::size_t e = k;
            while (e < text.size() && ident_char(text[e])) {
                ++e;
            }
            out.push_back({Tok::Ident, std::string(text.substr(k, e - k)), l0, c0});
            advance(e - k);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t e = k;
            while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e])) != 0) {
                ++e;
            }
            out.push_back({Tok::Number, std::string(text.substr(k, e - k)), l0, c0});
            advance(e - k);
            continue;
        }
        Tok kind{};
        std::size_t len = 1;
        switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '.': kind = Tok::Dot; break;
        case '~': kind = Tok::Tilde; break;
        case '&': kind = Tok::Amp; break;
        case '|': kind = Tok::Bar; break;
        case '-':
            if (k + 1 < text.size() && text[k + 1] == '>') {
                kind = Tok::Arrow;
                len = 2;
                break;
            }
            throw ParseError("expected '->'", l0, c0);
        default: throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
        }
        out.push_back({kind, std::string(text.substr(k, len)), l0, c0});
        advance(len);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const char* describe(Tok t) {
    switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Dot: return "'.'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
    }
    return "token";
}

class Parser {
  public:
    Parser(std::vector<Token> toks, Signature& sig) : toks_(std::move(toks)), sig_(sig) {}

    Formula parse_all() {
        Formula f = formula();
        if (peek().kind != Tok::End) {
            fail(std::string("unexpected ") + describe(peek().kind));
        }
        return f;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }

    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

    const Token& expect(Tok kind) {
        if (peek().kind != kind) {
            fail(std::string("expected ") + describe(kind) + ", found " + describe(peek().kind));
        }
        return take();
    }

    bool at_keyword(std::string_view kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

    Formula formula() {
        if (at_keyword("forall") || at_keyword("exists")) {
            const bool universal = take().text == "forall";
            const Token& v = expect(Tok::Ident);
            if (is_reserved_word(v.text)) {
                throw ParseError("reserved word used as variable", v.line, v.column);
            }
            std::string var = v.text;
            expect(Tok::Dot);
            Formula body = formula();
            return universal ? Formula::forall(std::move(var), std::move(body))
                             : Formula::exists(std::move(var), std::move(body));
        }
        Formula lhs = disj();
        if (peek().kind == Tok::Arrow) {
            take();
            return Formula::implies(std::move(lhs), formula());
        }
        return lhs;
    }

    Formula disj() {
        Formula f = conj();
        while (peek().kind == Tok::Bar) {
            take();
            f = Formula::disj(std::move(f), conj());
        }
        return f;
    }

    Formula conj() {
        Formula f = neg();
        while (peek().kind == Tok::Amp) {
            take();
            f = Formula::conj(std::move(f), neg());
        }
        return f;
    }

    Formula neg() {
        if (peek().kind == Tok::Tilde) {
            take();
            return Formula::negation(neg());
        }
        return atom();
    }

    void record_arity(const Token& at, int arity) {
        auto it = sig_.find(at.text);
        if (it == sig_.end()) {
            sig_.emplace(at.text, arity);
            return;
        }
        if (it->second != arity) {
            throw ParseError("predicate '" + at.text + "' used with arity " + std::to_string(arity) +
                                 ", previously " + std::to_string(it->second),
                             at.line, at.column);
        }
    }

    Term term() {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            take();
            unsigned long long value = 0;
            for (char ch : t.text) {
                value = value * 10 + static_cast<unsigned>(ch - '0');
                if (value > std::numeric_limits<std::uint32_t>::max()) {
                    throw ParseError("constant out of range", t.line, t.column);
                }
            }
            return Term::constant(static_cast<std::uint32_t>(value));
        }
        if (t.kind == Tok::Ident && !is_reserved_word(t.text)) {
            take();
            return Term::variable(t.text);
        }
        fail("expected a term");
    }

    Formula atom() {
        const Token& t = peek();
        if (t.kind == Tok::LParen) {
            take();
            Formula f = formula();
            expect(Tok::RParen);
            return f;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "false") {
                take();
                return Formula::bottom();
            }
            if (is_reserved_word(t.text)) {
                fail("quantifier needs parentheses here");
            }
            const Token& name = take();
            if (peek().kind == Tok::LParen) {
                take();
                Term arg = term();
                expect(Tok::RParen);
                record_arity(name, 1);
                return Formula::atom(name.text, std::move(arg));
            }
            record_arity(name, 0);
            return Formula::atom(name.text);
        }
        fail(std::string("expected a formula, found ") + describe(t.kind));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Signature& sig_;
};

} // namespace

Formula parse_formula(std::string_view text, Signature* signature) {
    Signature local;
    Parser p(tokenize(text), signature != nullptr ? *signature : local);
    return p.parse_all();
}

} // namespace minlog
