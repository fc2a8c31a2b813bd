// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "minlog/kripke/full.hpp"

namespace minlog {

struct ModelBounds {
    std::size_t max_worlds = 5;
    std::uint32_t max_terms = 3;
};

enum class ModelShape {
    Branched,   // rooted, two incomparable worlds, at least two terms at the root
    Linear,     // a chain with constant domain
    SingleTerm, // any rooted order, every domain is {0}
    Any,        // rooted order, growing domains
};

// Random rooted model with random monotone labels for the atoms P(x), A and
// false.
KripkeModel random_model(std::mt19937_64& rng, ModelShape shape, const ModelBounds& bounds = {});

// Random closed formula over P(x), Q(x), A, B and false with at most `depth`
// nested connectives and constants below `terms`. With `innermost_only`,
// atoms mention only the innermost bound variable, so every subformula has
// at most one free variable.
Formula random_formula(std::mt19937_64& rng, int depth, std::uint32_t terms, bool innermost_only = false);

struct PropertyRow {
    std::string name;
    std::size_t models = 0;
    std::vector<std::string> counterexamples;
};

struct PropertyReport {
    std::vector<PropertyRow> rows;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::string to_text() const;
};

// Random models per row of the DP/HE characterization: branched with two
// terms refutes both, linear constant-domain and single-term models force
// both.
PropertyReport characterization_property_tests(std::uint64_t seed, std::size_t per_row = 200,
                                               const ModelBounds& bounds = {});

} // namespace minlog
