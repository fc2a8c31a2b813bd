// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minlog/chain/zone.hpp"
#include "minlog/kripke/model.hpp"
#include "minlog/syntax/formula.hpp"

namespace minlog {

enum class ChainShape {
    None,       // prefix worlds only
    Ascending,  // A_0 <= A_1 <= ...
    Descending, // ... <= A_-1 <= A_0, index n stands for A_-n
};

std::string_view shape_name(ChainShape s);

// A Kripke model made of finitely many explicit worlds below an infinite
// chain. Chain worlds all have domain N. Prefix worlds have the finite
// domains of `prefix`, except limit worlds, whose domain is N.
struct ChainFamily {
    std::string id;
    ChainShape shape = ChainShape::None;
    KripkeModel prefix;
    std::set<std::size_t> limit;
    // Chain part of each symbol, over (i, t). Nullary symbols ignore t.
    std::map<std::string, ZoneSet, std::less<>> rules;
    ZoneSet chain_bottom;
    // 1 for predicates, 0 for propositions. Filled from the prefix atoms
    // and from rules that mention t or are keyed P(x).
    std::map<std::string, int, std::less<>> arity;

    [[nodiscard]] bool has_chain() const { return shape != ChainShape::None; }
    [[nodiscard]] Space space() const { return {has_chain(), prefix.size()}; }
    [[nodiscard]] std::set<std::string> symbols() const;
    // Sets `arity` for symbols that occur in the prefix but have no entry.
    void infer_arities();

    // Points (w, t) with t in the domain of w.
    [[nodiscard]] ZoneSet domain_set() const;
    // Worlds with a nonempty domain, as a cylinder.
    [[nodiscard]] ZoneSet nonempty_set() const;
    // Forcing set of the atom `symbol(t)`, or of the proposition `symbol`.
    [[nodiscard]] ZoneSet atom_set(std::string_view symbol, bool unary) const;
    [[nodiscard]] ZoneSet bottom_set() const;

    // Points (w, t) such that some v >= w has (v, t) in s.
    [[nodiscard]] ZoneSet down(const ZoneSet& s) const;
    // s is closed upward along the order on domain points.
    [[nodiscard]] bool is_upward_closed(const ZoneSet& s) const;

    // Worlds without a smaller world. Chain-only ascending: A_0.
    [[nodiscard]] std::vector<std::pair<int, std::int64_t>> roots() const;
    // Constants of a unique root with finite domain; empty otherwise.
    [[nodiscard]] std::vector<std::uint32_t> root_constants() const;

    [[nodiscard]] std::string world_name(int where, std::int64_t i) const;
    // Inverse of world_name; accepts A_3, A_-3, and prefix names.
    [[nodiscard]] std::optional<std::pair<int, std::int64_t>> world_point(std::string_view name) const;
    [[nodiscard]] std::vector<std::string> prefix_names() const { return prefix.worlds; }
};

class FamilyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Family file: the finite model sections describe the prefix, plus
//   [chain] ascending | descending | none
//   [limit] L          prefix worlds with domain N
//   [rules] P: t <= i ; A: i >= 2
//   [chainbot] i >= 3
// Throws FamilyError on syntax or monotonicity errors.
ChainFamily parse_family(std::string_view text, std::string id = "");
ChainFamily load_family_file(const std::filesystem::path& file);
std::vector<std::string> validate_family(const ChainFamily& fam);

// Wraps a finite model as a family with no chain.
ChainFamily family_from_model(const KripkeModel& m);

// Exact forcing set of f. Closed formulas give cylinders over t >= 0;
// formulas with one free variable give the points (w, t) with t in dom(w)
// and w forcing f[t/x]. Throws FamilyError for two or more free variables
// in any subformula, or an unknown symbol.
ZoneSet force_set(const ChainFamily& fam, const Formula& f);

// Closed f at a world.
bool family_forces(const ChainFamily& fam, int where, std::int64_t i, const Formula& f);

} // namespace minlog
