// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "minlog/kripke/model.hpp"
#include "minlog/syntax/formula.hpp"

namespace minlog {

// Interpretation of one predicate or proposition symbol.
struct PredicateValue {
    int arity = 0;
    WorldSet prop = 0;                     // arity 0
    std::map<std::uint32_t, WorldSet> ext; // arity 1: term -> worlds forcing P(term)
};

// Symbols named here override the model's own atom labels.
using Valuation = std::map<std::string, PredicateValue, std::less<>>;

std::string describe_valuation(const KripkeModel& m, const Valuation& v);

class ForcingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Worlds forcing the closed formula f. An atom whose constant is missing
// from a world's domain is not forced there.
WorldSet forcing_set(const KripkeModel& m, const Formula& f, const Valuation& val = {});

// w forces f. Throws ForcingError if f is open or mentions a constant outside
// the domain of w.
bool forces(const KripkeModel& m, std::size_t w, const Formula& f, const Valuation& val = {});

} // namespace minlog
