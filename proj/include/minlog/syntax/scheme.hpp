// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minlog/syntax/formula.hpp"

namespace minlog {

struct Placeholder {
    std::string name;
    int arity; // 0 or 1
};

struct Scheme {
    std::string id;
    std::vector<Placeholder> placeholders;
    Formula tmpl;
    // Alternative statement of another principle (DPALT, HEALT, CDALT, IPALT).
    bool alternative = false;
};

// Argument for one placeholder. For arity 1, `hole` names the variable of
// `body` that receives the placeholder's term argument.
struct SchemeArgument {
    Formula body;
    std::optional<std::string> hole;
};

struct SchemeInstance {
    std::string scheme;
    std::map<std::string, SchemeArgument> arguments;
};

class SchemeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The principles in catalog order, followed by the alternative forms.
const std::vector<Scheme>& scheme_catalog();
// Only the fifteen primary principles.
std::vector<std::string> primary_scheme_ids();
const Scheme* find_scheme(std::string_view id);
const Scheme& get_scheme(std::string_view id);

// Arguments that map each placeholder to itself (P := P(x) with hole x).
SchemeInstance identity_instance(std::string_view id);

// Template with placeholders replaced; template binders are renamed away
// from the free variables of the arguments.
Formula instantiate_scheme(const SchemeInstance& inst);

// Finds arguments that instantiate scheme `id` to a formula alpha-equal to
// `target`, or nullopt when `target` is not an instance.
std::optional<SchemeInstance> match_scheme(std::string_view id, const Formula& target);

} // namespace minlog
