// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "minlog/hierarchy/hierarchy.hpp"

using namespace minlog;

namespace {

const std::filesystem::path kRoot = MINLOG_SOURCE_DIR;

std::string manifest_text() {
    std::ifstream in(kRoot / "hierarchy.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

HierarchyReport verify_text(const std::string& text) { return verify_hierarchy(parse_manifest(text, kRoot)); }

const HierarchyReport& full_report() {
    static const HierarchyReport r = verify_hierarchy(load_manifest(kRoot / "hierarchy.txt"));
    return r;
}

} // namespace

TEST(Hierarchy, ManifestVerifies) {
    const HierarchyReport& r = full_report();
    EXPECT_EQ(r.count("FAIL"), 0u) << r.to_text();
    EXPECT_EQ(r.count("UNKNOWN"), 0u) << r.to_text();
    EXPECT_EQ(r.count("OPEN"), 2u);
    EXPECT_GT(r.count("PASS"), 90u);
}

TEST(Hierarchy, Nodes) {
    const auto m = load_manifest(kRoot / "hierarchy.txt");
    const auto nodes = hierarchy_nodes(m);
    ASSERT_EQ(nodes.size(), 10u);
    EXPECT_EQ(nodes[0], (SchemeList{"LEM", "GLPO"}));
    const auto d = derivable_from(m, {"DP", "EFQ", "TT"});
    EXPECT_TRUE(d.count("DGP"));
    EXPECT_TRUE(d.count("WLEM"));
    EXPECT_FALSE(d.count("HE"));
}

TEST(Hierarchy, FabricatedEdgeFails) {
    const auto r = verify_text("edge: WLEM -> DGP @ proofs/none.prf\n");
    EXPECT_EQ(r.count("FAIL"), 1u) << r.to_text();
    const auto wrong = verify_text("edge: WLEM -> DGP @ proofs/dp_gmp.prf\n");
    EXPECT_EQ(wrong.count("FAIL"), 1u) << wrong.to_text();
}

TEST(Hierarchy, ContradictoryNonEdgeFails) {
    const auto r = verify_text("edge: DP -> GMP @ proofs/dp_gmp.prf\nnonedge: DP -/-> GMP @ model:v_one_term\n");
    EXPECT_EQ(r.count("FAIL"), 1u) << r.to_text();
    const auto bad = verify_text("nonedge: HE -/-> DP @ model:v_one_term\n");
    EXPECT_EQ(bad.count("FAIL"), 1u) << bad.to_text();
    const auto missing = verify_text("nonedge: HE -/-> DP @ family:no-such-family\n");
    EXPECT_EQ(missing.count("FAIL"), 1u) << missing.to_text();
}

TEST(Hierarchy, OpenSettledByNonEdge) {
    const auto r = verify_text("nonedge: HE -/-> CD @ family:nonfull-s5\nopen: HE -> CD\n");
    EXPECT_EQ(r.count("OPEN"), 0u) << r.to_text();
    EXPECT_EQ(r.count("FAIL"), 1u) << r.to_text();
}

TEST(Hierarchy, Countermodels) {
    const auto m = load_manifest(kRoot / "hierarchy.txt");
    EXPECT_TRUE(find_countermodel(m, {"HE"}, "DP").has_value());
    EXPECT_FALSE(find_countermodel(m, {"DP"}, "GMP").has_value());
}

TEST(Hierarchy, DotStable) {
    const auto m = load_manifest(kRoot / "hierarchy.txt");
    const std::string a = export_dot(m);
    const std::string b = export_dot(load_manifest(kRoot / "hierarchy.txt"));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("digraph hierarchy {", 0), 0u);
    std::size_t labels = 0;
    for (std::size_t pos = 0; (pos = a.find("[label=\"", pos)) != std::string::npos; ++pos) {
        ++labels;
    }
    EXPECT_GE(labels, 10u);
    EXPECT_NE(a.find("[label=\"EFQ, TT\"]"), std::string::npos);
    EXPECT_EQ(export_dot(parse_manifest("")), "digraph hierarchy {\n}\n");
}

TEST(Hierarchy, ParseErrors) {
    EXPECT_THROW(parse_manifest("edge: DP -> @ proofs/x.prf\n"), ManifestError);
    EXPECT_THROW(parse_manifest("edge: DP -> GMP\n"), ManifestError);
    EXPECT_THROW(parse_manifest("bogus: DP -> GMP @ x\n"), ManifestError);
    EXPECT_THROW(parse_manifest("nonedge: DP -/-> GMP @ tea:leaf\n"), ManifestError);
    EXPECT_THROW(parse_manifest("equiv: LEM == GLPO @ proofs/a.prf\n"), ManifestError);
    EXPECT_NO_THROW(parse_manifest("# comment\n\nopen: GMP + EFQ -> CD\n"));
}
