// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minlog {

// Sets of worlds are bitmasks; a model has at most 64 worlds.
using WorldSet = std::uint64_t;
inline constexpr std::size_t kMaxWorlds = 64;

inline WorldSet world_bit(std::size_t w) { return WorldSet{1} << w; }

// Ground atom label: P(3) is {"P", 3}, a proposition A is {"A", nullopt}.
struct GroundAtom {
    std::string predicate;
    std::optional<std::uint32_t> argument;

    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

// Finite Kripke model for minimal logic. Bottom is an ordinary label.
struct KripkeModel {
    std::vector<std::string> worlds;
    // Covering pairs as written; `above` is the reflexive-transitive closure:
    // above[w] holds every v with w <= v.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    std::vector<WorldSet> above;
    // Constant indices per world, ascending.
    std::vector<std::vector<std::uint32_t>> domain;
    std::map<GroundAtom, WorldSet> atoms;
    WorldSet bottom = 0;
    // Optional display names for constants (s -> 0).
    std::map<std::string, std::uint32_t> names;

    [[nodiscard]] std::size_t size() const { return worlds.size(); }
    [[nodiscard]] WorldSet all() const;
    [[nodiscard]] std::optional<std::size_t> world_index(std::string_view name) const;
    [[nodiscard]] bool in_domain(std::size_t w, std::uint32_t c) const;
    // Worlds whose domain contains c.
    [[nodiscard]] WorldSet holders(std::uint32_t c) const;
    // Union of all domains, ascending.
    [[nodiscard]] std::vector<std::uint32_t> terms() const;
    [[nodiscard]] bool is_upset(WorldSet s) const;
    // Smallest upward-closed superset.
    [[nodiscard]] WorldSet up_closure(WorldSet s) const;
    [[nodiscard]] bool leq(std::size_t w, std::size_t v) const { return (above[w] & world_bit(v)) != 0; }
    [[nodiscard]] std::string term_name(std::uint32_t c) const;
    [[nodiscard]] std::string world_list(WorldSet s) const;

    // Recomputes `above` from `covers`.
    void close_order();
};

class ModelError : public std::runtime_error {
  public:
    ModelError(const std::string& message, std::vector<std::string> violations = {});
    [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

// Reads the line-oriented model format. Syntax errors throw ModelError;
// the result is not yet validated.
KripkeModel parse_model(std::string_view text);

// Monotonicity and well-formedness violations, empty when valid.
std::vector<std::string> validate_model(const KripkeModel& m);

// parse_model + validate_model; throws ModelError carrying the violations.
KripkeModel load_model(std::string_view text);
KripkeModel load_model_file(const std::filesystem::path& file);

// Canonical text form accepted by parse_model.
std::string write_model(const KripkeModel& m);

} // namespace minlog
