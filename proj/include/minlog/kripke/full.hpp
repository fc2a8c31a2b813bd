// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minlog/kripke/forcing.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

inline constexpr std::uint64_t kDefaultValuationCap = 10'000'000;

struct FullCheckOptions {
    std::uint64_t cap = kDefaultValuationCap;
};

class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Upward-closed subsets of `within` (itself upward closed), ascending by mask.
std::vector<WorldSet> upsets_within(const KripkeModel& m, WorldSet within);

// Number of monotone valuations of the placeholders; saturates at UINT64_MAX.
std::uint64_t count_valuations(const KripkeModel& m, const std::vector<Placeholder>& placeholders);

// Calls visit(valuation) for every monotone valuation, in a fixed order
// (placeholders in the given order, terms ascending, world sets ascending by
// mask) until visit returns false. Throws CapExceeded first if the space is
// larger than the cap.
void for_each_valuation(const KripkeModel& m, const std::vector<Placeholder>& placeholders,
                        const FullCheckOptions& opts, const std::function<bool(const Valuation&)>& visit);

struct Counterexample {
    Valuation valuation;
    std::size_t world = 0;

    [[nodiscard]] std::string describe(const KripkeModel& m) const;
};

struct FullVerdict {
    bool holds = true;
    std::optional<Counterexample> witness;
    std::uint64_t valuations = 0;
};

// Every monotone valuation of the placeholders forces `tmpl` everywhere.
FullVerdict formula_holds_full(const KripkeModel& m, const Formula& tmpl, const std::vector<Placeholder>& placeholders,
                               const FullCheckOptions& opts = {});
FullVerdict scheme_holds_full(const KripkeModel& m, const std::string& scheme_id, const FullCheckOptions& opts = {});

// True iff `ce` really refutes the formula.
bool witness_refutes(const KripkeModel& m, const Formula& tmpl, const Counterexample& ce);

// The two-term rules are sound in m: every world not forcing false has the
// constants 0 and 1, and some monotone D forces D(0), ~D(1) and
// forall x. (D(x) | ~D(x)) at every world.
struct TTVerdict {
    bool holds = false;
    std::optional<Valuation> labelling;
};
TTVerdict tt_holds(const KripkeModel& m, const FullCheckOptions& opts = {});

// Pseudo scheme id for the two-term rules in verdict lists.
inline constexpr const char* kTT = "TT";

// Scheme id or TT.
bool verdict_for(const KripkeModel& m, const std::string& id, const FullCheckOptions& opts = {});

// Structural facts about a model, each cross-checked against the exhaustive
// checker.
struct DerivedReport {
    bool bottom_free = false;
    bool efq_holds = false;
    std::size_t consistent_worlds = 0; // worlds not forcing false
    bool lem_holds = false;
    bool v_free = false;
    bool dgp_holds = false;
    bool wlem_holds = false;

    // EFQ iff no world forces false.
    [[nodiscard]] bool efq_agrees() const { return bottom_free == efq_holds; }
    // At most one consistent world implies LEM.
    [[nodiscard]] bool lem_agrees() const { return consistent_worlds > 1 || lem_holds; }
    // No V shape implies DGP and WLEM.
    [[nodiscard]] bool v_free_agrees() const { return !v_free || (dgp_holds && wlem_holds); }
    [[nodiscard]] bool ok() const { return efq_agrees() && lem_agrees() && v_free_agrees(); }
    [[nodiscard]] std::string to_text() const;
};

// A world with two incomparable strict successors makes a V.
bool is_v_free(const KripkeModel& m);

DerivedReport derived_checks(const KripkeModel& m, const FullCheckOptions& opts = {});

} // namespace minlog
