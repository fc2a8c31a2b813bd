// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "minlog/kernel/proof.hpp"

namespace minlog {

struct Violation {
    std::string path; // e.g. "root/1/0"
    std::size_t line = 0;
    std::string rule;
    std::string message;

    [[nodiscard]] std::string to_string() const;
};

struct AllowedRules {
    std::set<std::string> schemes;
    bool tt = false;
};

struct ProofVerdict {
    std::vector<Violation> violations;
    // Labels of assumptions not discharged anywhere, with their formulas.
    std::map<std::string, Formula> open_assumptions;
    std::set<std::string> schemes_used;
    bool tt_used = false;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

ProofVerdict check_proof(const ProofNode& root, const AllowedRules& allowed);

struct ReductionVerdict {
    std::string id;
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

// Checks the proof against exactly the claimed premises, requires no open
// assumptions, and requires the conclusion to be the target's generic
// instance. Every declared premise must be used.
ReductionVerdict check_reduction(const ReductionClaim& c);

struct CorpusEntry {
    std::string id;
    std::filesystem::path path;
    bool ok = false;
    std::vector<std::string> messages;
};

struct CorpusReport {
    std::vector<CorpusEntry> entries;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] bool ok() const { return passed() == entries.size(); }
    [[nodiscard]] std::string to_text() const;
};

// Collects *.prf files (directories are scanned non-recursively, sorted by
// file name) and checks each. Unreadable scripts and duplicate ids become
// failing entries.
CorpusReport corpus_verify(const std::vector<std::filesystem::path>& paths);

} // namespace minlog
