// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "minlog/kripke/model.hpp"

namespace minlog {

struct OracleReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    std::vector<std::string> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
    [[nodiscard]] std::string to_text() const;
};

// Random constraint sets against brute force on 0 <= i, t <= bound, for every
// zone operation and both chain directions. Quantifiers over the chain or
// the terms are brute-forced up to 40, past the reach of any constant used.
OracleReport zone_grid_oracle(std::uint64_t seed, std::size_t cases = 1000, std::int64_t bound = 12);

// Finite models as families without a chain: symbolic forcing must agree
// with the finite evaluator at every world, for every scheme template under
// up to `per_scheme` valuations per model.
OracleReport degenerate_scheme_agreement(const std::vector<KripkeModel>& models, std::size_t per_scheme = 64);

// Random models and random closed formulas.
OracleReport degenerate_random_agreement(std::uint64_t seed, std::size_t models = 200, std::size_t per_model = 10);

} // namespace minlog
