// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minlog {

// Scheme ids as written, e.g. {"DP", "EFQ", "TT"}. EFQ and TT are side
// conditions when drawn.
using SchemeList = std::vector<std::string>;

struct HierarchyEdge {
    SchemeList from;
    std::string to;
    std::filesystem::path script;
    bool extra = false; // proved but not drawn
    std::size_t line = 0;
};

struct SchemeEquivalence {
    std::string a;
    std::string b;
    std::filesystem::path a_to_b;
    std::filesystem::path b_to_a;
    std::size_t line = 0;
};

struct NonEdge {
    SchemeList from;
    std::string to;
    std::string evidence; // model:<name> or family:<id>
    std::size_t line = 0;
};

struct OpenQuestion {
    SchemeList from;
    std::string to;
    std::size_t line = 0;
};

struct HierarchyManifest {
    std::vector<HierarchyEdge> edges;
    std::vector<SchemeEquivalence> equivalences;
    std::vector<NonEdge> nonedges;
    std::vector<OpenQuestion> open;
    // Scripts are relative to `base`; model:x is <base>/models/x.km and
    // family:x is <base>/families/x.fam.
    std::filesystem::path base;
};

class ManifestError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Lines:
//   edge: DP + EFQ + TT -> DGP @ proofs/dp_efq_tt_dgp.prf
//   extra: DNE -> EFQ @ proofs/dne_efq.prf
//   equiv: LEM == GLPO @ proofs/lem_glpo.prf, proofs/glpo_lem.prf
//   nonedge: HE -/-> DP @ family:ascending
//   open: GMP + EFQ -> CD
HierarchyManifest parse_manifest(std::string_view text, const std::filesystem::path& base = ".");
HierarchyManifest load_manifest(const std::filesystem::path& file);

// Drawn nodes: schemes joined by equivalences, in first-appearance order.
std::vector<SchemeList> hierarchy_nodes(const HierarchyManifest& m);

// Everything reachable from `start` by the manifest's edges, extras and
// equivalences; side conditions accumulate as members of the set.
std::set<std::string> derivable_from(const HierarchyManifest& m, const std::set<std::string>& start);

struct HierarchyLine {
    std::string status; // PASS, FAIL, OPEN or UNKNOWN
    std::string claim;
    std::string evidence;
    std::string detail;
};

struct HierarchyReport {
    std::vector<HierarchyLine> lines;

    [[nodiscard]] std::size_t count(std::string_view status) const;
    [[nodiscard]] bool ok() const { return count("FAIL") == 0; }
    [[nodiscard]] std::string to_text() const;
};

// Re-checks every script and every countermodel, reports the open
// questions, and lists node pairs with neither a path nor a countermodel as
// UNKNOWN.
HierarchyReport verify_hierarchy(const HierarchyManifest& m);

// Evidence that `from` does not give `to`: a catalog model or certified
// family where every scheme of `from` holds and an instance of `to` fails.
// Empty if there is none.
std::optional<std::string> find_countermodel(const HierarchyManifest& m, const SchemeList& from,
                                             const std::string& to);

// Graph text for dot. Only `edge` and `equiv` lines are drawn.
std::string export_dot(const HierarchyManifest& m);

} // namespace minlog
