// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minlog/syntax/formula.hpp"
#include "minlog/syntax/parser.hpp"

namespace minlog {

// Rule names as written in scripts.
namespace rule {
inline constexpr std::string_view Assume = "assume";
inline constexpr std::string_view ImpI = "impI";
inline constexpr std::string_view ImpE = "impE";
inline constexpr std::string_view AndI = "andI";
inline constexpr std::string_view AndE = "andE";
inline constexpr std::string_view OrI = "orI";
inline constexpr std::string_view OrE = "orE";
inline constexpr std::string_view ForallI = "forallI";
inline constexpr std::string_view ForallE = "forallE";
inline constexpr std::string_view ExistsI = "existsI";
inline constexpr std::string_view ExistsE = "existsE";
inline constexpr std::string_view D0 = "D0";
inline constexpr std::string_view NotD1 = "notD1";
inline constexpr std::string_view Dx = "Dx";
} // namespace rule

bool is_tt_rule(std::string_view name);

// One inference. Scheme rules use the scheme id as rule name.
struct ProofNode {
    std::string rule;
    std::optional<std::string> label;
    std::vector<std::string> discharge;
    std::optional<std::string> var;
    std::optional<Term> term;
    std::optional<std::string> side;
    Formula conclusion = Formula::bottom();
    std::vector<ProofNode> premises;
    std::size_t line = 0;
};

struct ReductionClaim {
    std::string id;
    std::set<std::string> premises;
    bool tt = false;
    std::string target;
    ProofNode proof;
    std::filesystem::path source;
};

class ScriptError : public std::runtime_error {
  public:
    ScriptError(const std::string& message, std::size_t line);
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Parses one claim. `default_id` is used when the claim has no :id.
ReductionClaim parse_claim(std::string_view text, const std::string& default_id = "");
ReductionClaim load_claim(const std::filesystem::path& file);

// Stable serialization; parse_claim(write_claim(c)) reproduces c.
std::string write_claim(const ReductionClaim& c);

std::size_t proof_size(const ProofNode& n);

} // namespace minlog
