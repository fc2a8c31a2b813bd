// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "minlog/kripke/full.hpp"

namespace minlog {

// One model with the verdicts it is expected to produce.
struct CatalogEntry {
    std::string name;
    std::filesystem::path file;
    std::vector<std::string> holds;
    std::vector<std::string> fails;
};

// Lines of the form
//   model: v_two_terms.km | holds: EFQ TT | fails: DP HE
// Paths are relative to the catalog file.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& file);

struct CatalogResult {
    CatalogEntry entry;
    KripkeModel model;
    std::map<std::string, bool> computed; // every listed id
    std::map<std::string, Counterexample> witnesses;
    DerivedReport derived;
    std::vector<std::string> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
};

CatalogResult check_catalog_entry(const CatalogEntry& e, const FullCheckOptions& opts = {});

struct CatalogReport {
    std::vector<CatalogResult> results;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::string to_text() const;
};

CatalogReport check_catalog(const std::filesystem::path& file, const FullCheckOptions& opts = {});

// Verdicts for every primary scheme and TT.
std::map<std::string, bool> verdict_table(const KripkeModel& m, const FullCheckOptions& opts = {});

} // namespace minlog
