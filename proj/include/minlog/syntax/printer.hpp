// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "minlog/syntax/formula.hpp"

namespace minlog {

enum class PrintStyle { Ascii, Unicode };

// Minimal-parenthesis rendering. ASCII output is re-readable by parse_formula.
std::string to_string(const Formula& f, PrintStyle style = PrintStyle::Ascii);

} // namespace minlog
