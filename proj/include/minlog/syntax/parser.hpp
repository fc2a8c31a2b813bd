// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "minlog/syntax/formula.hpp"

namespace minlog {

// Predicate name -> arity (0 or 1). A parse that sees a predicate used with
// a different arity than recorded here fails.
using Signature = std::map<std::string, int, std::less<>>;

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }

  private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

// Parses the ASCII formula grammar. When `signature` is given, arities are
// checked against it and new predicates are recorded in it.
Formula parse_formula(std::string_view text, Signature* signature = nullptr);

bool is_reserved_word(std::string_view word);

} // namespace minlog
