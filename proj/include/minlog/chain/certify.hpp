// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "minlog/chain/closure.hpp"
#include "minlog/chain/family.hpp"

namespace minlog {

struct CertifiedClaim {
    std::string id;
    std::string text;
    bool holds = false;
    std::string detail;
};

struct CertifyReport {
    std::string family;
    std::vector<CertifiedClaim> claims;
    std::vector<std::string> notes;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::string to_text() const;
};

// Family ids with a fixed list of claims.
const std::vector<std::string>& certified_family_ids();

// Runs the claim list for fam.id; unknown ids throw FamilyError.
CertifyReport certify_family(const ChainFamily& fam);
// Loads <dir>/<id>.fam first.
CertifyReport certify_family(const std::string& id, const std::filesystem::path& families_dir);

// Instance of a catalog scheme with one-place arguments over x.
Formula scheme_instance(const std::string& scheme, const std::vector<std::pair<std::string, Formula>>& args);

struct SampleReport {
    std::size_t samples = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const { return failures.empty(); }
};

// Random monotone predicates R given by constraints, e.g. R: t - i <= 3 on an
// ascending chain. Ascending families must force HE for R everywhere,
// descending ones DP. Families of other shapes throw FamilyError.
SampleReport random_expressible_valuations(const ChainFamily& fam, std::uint64_t seed, std::size_t n);

// Pairs of a sampled predicate R and a sampled proposition S (S: i >= a on
// an ascending chain); CD for R and S must hold everywhere.
SampleReport random_cd_valuations(const ChainFamily& fam, std::uint64_t seed, std::size_t n);

} // namespace minlog
