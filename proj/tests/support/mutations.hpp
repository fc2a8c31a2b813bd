// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "minlog/kernel/proof.hpp"

namespace minlog::testing {

// Node addressed by a checker path such as "root/1/0".
inline ProofNode& node_at(ProofNode& root, const std::string& path) {
    std::istringstream in(path);
    std::string part;
    std::getline(in, part, '/');
    if (part != "root") {
        throw std::invalid_argument("path must start at root: " + path);
    }
    ProofNode* n = &root;
    while (std::getline(in, part, '/')) {
        const auto i = std::stoul(part);
        if (i >= n->premises.size()) {
            throw std::out_of_range("no premise " + part + " in " + path);
        }
        n = &n->premises[i];
    }
    return *n;
}

// Renames the free variable `from` to `to` in every conclusion and term of
// the subtree, and in the eigenvariable of its root.
inline void rename_free(ProofNode& n, const std::string& from, const std::string& to) {
    n.conclusion = substitute(n.conclusion, from, Term::variable(to));
    if (n.term && n.term->is_variable() && n.term->name() == from) {
        n.term = Term::variable(to);
    }
    for (auto& p : n.premises) {
        rename_free(p, from, to);
    }
}

inline void rename_eigenvariable(ProofNode& n, const std::string& to) {
    const std::string from = n.var.value_or(n.conclusion.name());
    for (auto& p : n.premises) {
        rename_free(p, from, to);
    }
    n.var = to;
}

inline void delete_premise(ProofNode& n, std::size_t i) { n.premises.erase(n.premises.begin() + static_cast<long>(i)); }

// Turns a scheme leaf into an application of another scheme, keeping the
// conclusion.
inline void swap_scheme(ProofNode& n, const std::string& scheme) { n.rule = scheme; }

// Replaces a scheme leaf by a plain assumption of the same formula.
inline void unrule_leaf(ProofNode& n, const std::string& label) {
    n.rule = "assume";
    n.label = label;
}

} // namespace minlog::testing
