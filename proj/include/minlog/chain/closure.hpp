// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "minlog/chain/family.hpp"

namespace minlog {

// Formulas with x as the only possible free variable, compared as
// predicates: the points (w, t) with t in dom(w) where they are forced.
struct PredicateClass {
    Formula representative;
    ZoneSet points;
    // The class does not depend on t.
    bool proposition = false;
};

struct ClosureOptions {
    std::size_t cap = 64;
};

class ClosureError : public std::runtime_error {
  public:
    ClosureError(const std::string& message, std::vector<std::string> frontier)
        : std::runtime_error(message), frontier_(std::move(frontier)) {}
    [[nodiscard]] const std::vector<std::string>& frontier() const { return frontier_; }

  private:
    std::vector<std::string> frontier_;
};

struct ClosureResult {
    std::string family;
    std::vector<PredicateClass> classes; // predicates first, then propositions
    std::size_t rounds = 0;
    std::size_t candidates = 0;

    [[nodiscard]] std::size_t predicates() const;
    [[nodiscard]] std::size_t propositions() const { return classes.size() - predicates(); }
    [[nodiscard]] const PredicateClass* find(const ZoneSet& points, const ChainFamily& fam) const;
    [[nodiscard]] std::string to_text(const ChainFamily& fam) const;
};

// Predicate points of a formula over the variable x.
ZoneSet predicate_points(const ChainFamily& fam, const Formula& f);
bool same_predicate(const ChainFamily& fam, const Formula& a, const Formula& b);

// Least set of classes containing the seeds and false, closed under forall x,
// exists x, ->, &, | and substitution of the root world's constants.
// Representative: fewest nodes, then first in print order.
ClosureResult predicate_closure(const ChainFamily& fam, const std::vector<Formula>& seeds,
                                const ClosureOptions& opts = {});

struct Equivalence {
    std::string lhs;
    std::string rhs;
};

// The identities stated for the non-full model with root domain {0}.
const std::vector<Equivalence>& nonfull_equivalences();

struct EquivalenceCheck {
    Equivalence eq;
    bool holds = false;
    std::string lhs_points;
    std::string rhs_points;
    // Smallest class equal to lhs, if any.
    std::string lhs_class;
};

std::vector<EquivalenceCheck> check_equivalences(const ChainFamily& fam, const std::vector<Equivalence>& eqs,
                                                 const ClosureResult* closure = nullptr);

} // namespace minlog
