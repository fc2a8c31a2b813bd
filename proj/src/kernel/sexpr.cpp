// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kernel/sexpr.hpp"

#include <cctype>

namespace minlog {

SExpr SExpr::symbol(std::string s) {
    SExpr e;
    e.kind = Kind::Symbol;
    e.text = std::move(s);
    return e;
}

SExpr SExpr::string(std::string s) {
    SExpr e;
    e.kind = Kind::String;
    e.text = std::move(s);
    return e;
}

SExpr SExpr::list(std::vector<SExpr> items) {
    SExpr e;
    e.kind = Kind::List;
    e.items = std::move(items);
    return e;
}

SExprError::SExprError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line),
      column_(column) {}

namespace {

class Reader {
  public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<SExpr> all() {
        std::vector<SExpr> out;
        skip();
        while (k_ < text_.size()) {
            out.push_back(one());
            skip();
        }
        return out;
    }

  private:
    char cur() const { return text_[k_]; }

    void step() {
        if (text_[k_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++k_;
    }

    void skip() {
        while (k_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(cur())) != 0) {
                step();
            } else if (cur() == ';') {
                while (k_ < text_.size() && cur() != '\n') {
                    step();
                }
            } else {
                break;
            }
        }
    }

    SExpr one() {
        const std::size_t l0 = line_;
        const std::size_t c0 = col_;
        if (cur() == '(') {
            step();
            SExpr e;
            e.line = l0;
            e.column = c0;
            skip();
            while (true) {
                if (k_ >= text_.size()) {
                    throw SExprError("unterminated list", l0, c0);
                }
                if (cur() == ')') {
                    step();
                    return e;
                }
                e.items.push_back(one());
                skip();
            }
        }
        if (cur() == ')') {
            throw SExprError("unexpected ')'", l0, c0);
        }
        if (cur() == '"') {
            step();
            std::string s;
            while (true) {
                if (k_ >= text_.size()) {
                    throw SExprError("unterminated string", l0, c0);
                }
                if (cur() == '"') {
                    step();
                    break;
                }
                if (cur() == '\\' && k_ + 1 < text_.size()) {
                    step();
                }
                s += cur();
                step();
            }
            SExpr e = SExpr::string(std::move(s));
            e.line = l0;
            e.column = c0;
            return e;
        }
        std::string s;
        while (k_ < text_.size() && std::isspace(static_cast<unsigned char>(cur())) == 0 && cur() != '(' &&
               cur() != ')' && cur() != '"' && cur() != ';') {
            s += cur();
            step();
        }
        SExpr e = SExpr::symbol(std::move(s));
        e.line = l0;
        e.column = c0;
        return e;
    }

    std::string_view text_;
    std::size_t k_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string flat(const SExpr& e) {
    switch (e.kind) {
    case SExpr::Kind::Symbol: return e.text;
    case SExpr::Kind::String: return quote(e.text);
    case SExpr::Kind::List: {
        std::string out = "(";
        for (std::size_t j = 0; j < e.items.size(); ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += flat(e.items[j]);
        }
        return out + ")";
    }
    }
    return {};
}

} // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

std::string write_sexpr(const SExpr& e, std::size_t indent) {
    if (!e.is_list()) {
        return flat(e);
    }
    // Leading atoms (head and keyword/value pairs) stay on the first line,
    // nested lists that follow them go on their own lines.
    std::size_t split = 0;
    while (split < e.items.size()) {
        const SExpr& it = e.items[split];
        if (it.is_list()) {
            const bool keyword_value = split > 0 && e.items[split - 1].is_keyword();
            if (!keyword_value) {
                break;
            }
        }
        ++split;
    }
    std::string out = "(";
    for (std::size_t j = 0; j < split; ++j) {
        if (j > 0) {
            out += ' ';
        }
        out += flat(e.items[j]);
    }
    for (std::size_t j = split; j < e.items.size(); ++j) {
        out += '\n';
        out += std::string(indent + 2, ' ');
        out += write_sexpr(e.items[j], indent + 2);
    }
    return out + ")";
}

} // namespace minlog
