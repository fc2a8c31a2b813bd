// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minlog {

// Minimal s-expression: lists, bare symbols and double-quoted strings.
// `;` starts a comment that runs to the end of the line.
struct SExpr {
    enum class Kind { List, Symbol, String };

    Kind kind = Kind::List;
    std::string text;
    std::vector<SExpr> items;
    std::size_t line = 0;
    std::size_t column = 0;

    [[nodiscard]] bool is_list() const { return kind == Kind::List; }
    [[nodiscard]] bool is_symbol() const { return kind == Kind::Symbol; }
    [[nodiscard]] bool is_string() const { return kind == Kind::String; }
    [[nodiscard]] bool is_keyword() const { return is_symbol() && !text.empty() && text.front() == ':'; }
    [[nodiscard]] bool is_atom_like() const { return !is_list(); }

    static SExpr symbol(std::string s);
    static SExpr string(std::string s);
    static SExpr list(std::vector<SExpr> items);
};

class SExprError : public std::runtime_error {
  public:
    SExprError(const std::string& message, std::size_t line, std::size_t column);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

std::vector<SExpr> read_sexprs(std::string_view text);

// Renders with the given indentation; short lists stay on one line.
std::string write_sexpr(const SExpr& e, std::size_t indent = 0);

} // namespace minlog
