// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "minlog/chain/certify.hpp"
#include "minlog/chain/oracle.hpp"
#include "minlog/kripke/catalog.hpp"
#include "minlog/kripke/forcing.hpp"
#include "minlog/kripke/random.hpp"
#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"

using namespace minlog;

namespace {

const std::filesystem::path kFamilies = MINLOG_FAMILIES_DIR;
const std::filesystem::path kModels = MINLOG_MODELS_DIR;
const Space kChain{true, 0};

ChainFamily family(const std::string& id) { return load_family_file(kFamilies / (id + ".fam")); }
Formula p(const char* s) { return parse_formula(s); }
ZoneSet zs(const char* s) { return ZoneSet::parse(s, kChain); }

} // namespace

TEST(Zone, Boolean) {
    const ZoneSet a = zs("t <= i");
    EXPECT_TRUE(a.unite(a.complement(kChain)).same_points(ZoneSet::all(kChain), kChain));
    const ZoneSet b = a.intersect(zs("t >= 3"));
    for (int i = 0; i <= 10; ++i) {
        for (int t = 0; t <= 10; ++t) {
            EXPECT_EQ(b.contains(Zone::kChain, i, t), t >= 3 && t <= i);
        }
    }
    EXPECT_TRUE(zs("i >= 2").intersect(zs("i <= 1")).empty());
    EXPECT_TRUE(zs("none").empty());
    EXPECT_EQ(zs("t <= i | t <= i, i >= 4").zones().size(), 1u);
}

TEST(Zone, Projections) {
    EXPECT_TRUE(zs("t <= i, t >= 0").exists_t().same_points(ZoneSet::all(kChain), kChain));
    EXPECT_TRUE(zs("t <= i").complement(kChain).exists_t().complement(kChain).empty());
    // Some j >= i with t <= j: everything.
    EXPECT_TRUE(zs("t <= i").chain_future(true).same_points(ZoneSet::all(kChain), kChain));
    // Some j <= i with t <= j: t <= i.
    EXPECT_TRUE(zs("t <= i").chain_future(false).same_points(zs("t <= i"), kChain));
    EXPECT_TRUE(zs("t - i >= 2").at_term(5).same_points(zs("i <= 3"), kChain));
}

TEST(Zone, ParseErrors) {
    EXPECT_THROW(zs("t + i <= 3"), ZoneError);
    EXPECT_THROW(zs("t 3"), ZoneError);
    EXPECT_THROW(zs("2 t <= 1"), ZoneError);
    EXPECT_THROW(zs("t <= i,"), ZoneError);
    EXPECT_NO_THROW(zs("3 >= t - i & i > 1"));
}

TEST(Zone, GridOracle) {
    const OracleReport r = zone_grid_oracle(11, 200);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.cases, 200u);
}

TEST(Family, ParseAndNames) {
    const ChainFamily asc = family("ascending");
    EXPECT_EQ(asc.shape, ChainShape::Ascending);
    EXPECT_EQ(asc.world_name(Zone::kChain, 3), "A_3");
    const ChainFamily desc = family("descending");
    EXPECT_EQ(desc.world_name(Zone::kChain, 3), "A_-3");
    EXPECT_EQ(desc.world_point("A_-3"), (std::pair<int, std::int64_t>{Zone::kChain, 3}));
    EXPECT_EQ(desc.world_point("L"), (std::pair<int, std::int64_t>{0, 0}));
    EXPECT_FALSE(desc.world_point("A_3").has_value());
    EXPECT_TRUE(desc.limit.contains(0));
    const ChainFamily s5 = family("nonfull-s5");
    EXPECT_EQ(s5.root_constants(), (std::vector<std::uint32_t>{0}));
    EXPECT_EQ(s5.arity.at("Q"), 1);
}

TEST(Family, Rejected) {
    EXPECT_THROW(parse_family("[chain] sideways"), FamilyError);
    EXPECT_THROW(parse_family("[rules] P: t <= i"), FamilyError);
    // Forced at A_0 but lost above it.
    EXPECT_THROW(parse_family("[chain] ascending\n[rules] P: t >= i"), FamilyError);
    EXPECT_THROW(parse_family("[chain] descending\n[rules] P: t <= i"), FamilyError);
    // The prefix root forces P(1), which A_0 does not.
    EXPECT_THROW(parse_family("[worlds] A\n[domain] A: 0 1\n[atoms] A: P(1)\n[chain] ascending\n[rules] P: t <= i"),
                 FamilyError);
    EXPECT_THROW(parse_family("[chain] ascending\n[chainbot] i <= 2"), FamilyError);
}

TEST(Forcing, AscendingChain) {
    const ChainFamily asc = family("ascending");
    EXPECT_TRUE(force_set(asc, p("~~P(x)")).same_points(ZoneSet::all(kChain), kChain));
    EXPECT_TRUE(force_set(asc, p("exists y. (P(y) -> forall x. P(x))")).empty());
    EXPECT_TRUE(force_set(asc, p("forall x. P(x)")).empty());
    EXPECT_TRUE(family_forces(asc, Zone::kChain, 0, p("forall x. ~~P(x)")));
    EXPECT_TRUE(family_forces(asc, Zone::kChain, 5, p("P(5)")));
    EXPECT_FALSE(family_forces(asc, Zone::kChain, 4, p("P(5)")));
}

TEST(Forcing, DescendingChain) {
    const ChainFamily desc = family("descending");
    const Formula he = scheme_instance("HE", {{"P", p("P(x)")}});
    EXPECT_FALSE(family_forces(desc, 0, 0, he));
    EXPECT_FALSE(family_forces(desc, 0, 0, p("exists x. P(x)")));
    EXPECT_TRUE(family_forces(desc, Zone::kChain, 0, p("forall x. P(x)")));
    EXPECT_FALSE(family_forces(desc, Zone::kChain, 1, p("forall x. P(x)")));
}

TEST(Forcing, Errors) {
    const ChainFamily asc = family("ascending");
    EXPECT_THROW(force_set(asc, p("forall x. forall y. (P(x) -> P(y))")), FamilyError);
    EXPECT_THROW(force_set(asc, p("R(x)")), FamilyError);
    EXPECT_THROW(force_set(asc, p("P")), FamilyError);
    EXPECT_THROW(family_forces(asc, Zone::kChain, 0, p("P(x)")), FamilyError);
    EXPECT_THROW(force_set(family_from_model(load_model_file(kModels / "diamond.km")), p("P(x) & P(y)")), FamilyError);
}

TEST(Forcing, FiniteFamiliesGroundTwoVariables) {
    const KripkeModel m = load_model_file(kModels / "fig1.km");
    const ChainFamily fam = family_from_model(m);
    for (const char* text : {"forall x. forall y. (P(x) -> P(y))", "exists x. forall y. (P(y) -> P(x))",
                             "forall y. exists x. ~~(P(x) | ~P(y))"}) {
        const Formula f = p(text);
        const WorldSet finite = forcing_set(m, f);
        const ZoneSet sym = force_set(fam, f);
        for (std::size_t w = 0; w < m.size(); ++w) {
            EXPECT_EQ((finite & world_bit(w)) != 0, sym.contains(static_cast<int>(w), 0, 0)) << text << " at " << w;
        }
    }
}

TEST(Forcing, OutputsAreMonotone) {
    std::mt19937_64 rng(5);
    for (const auto& id : certified_family_ids()) {
        ChainFamily fam = family(id);
        // Extra monotone symbols so random formulas are in the signature.
        const bool asc = fam.shape == ChainShape::Ascending;
        const Space sp = fam.space();
        for (const auto& [sym, rule] : std::vector<std::pair<std::string, const char*>>{
                 {"Q", asc ? "t - i <= 2" : "t - i >= 1"}, {"A", asc ? "i >= 3" : "i <= 2"}, {"B", asc ? "i >= 1" : "i <= 0"}}) {
            if (!fam.symbols().contains(sym)) {
                fam.rules[sym] = ZoneSet::parse(rule, sp);
                fam.arity[sym] = sym == "Q" ? 1 : 0;
            }
        }
        std::size_t tried = 0;
        for (int k = 0; k < 40; ++k) {
            const Formula f = random_formula(rng, 4, 3, true);
            try {
                EXPECT_TRUE(fam.is_upward_closed(force_set(fam, f))) << id << ": " << to_string(f);
                ++tried;
            } catch (const FamilyError&) {
                // The prefix lacks labels for an added symbol.
            }
        }
        EXPECT_GT(tried, 20u) << id;
    }
}

TEST(Forcing, FiniteModelsAgree) {
    std::vector<KripkeModel> models;
    for (const auto& e : load_catalog(kModels / "catalog.txt")) {
        models.push_back(load_model_file(e.file));
    }
    const OracleReport s = degenerate_scheme_agreement(models, 16);
    EXPECT_TRUE(s.ok()) << s.to_text();
    EXPECT_GT(s.checks, 0u);
    const OracleReport r = degenerate_random_agreement(9, 60, 5);
    EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Closure, NonfullRootDomainZero) {
    const ChainFamily fam = family("nonfull-s5");
    const ClosureResult cl = predicate_closure(fam, {p("P(x)"), p("Q(x)")});
    std::vector<std::string> reps;
    for (const auto& c : cl.classes) {
        reps.push_back(to_string(c.representative));
    }
    EXPECT_EQ(reps, (std::vector<std::string>{"P(x)", "Q(x)", "P(0)", "Q(0)", "false"}));
    EXPECT_EQ(cl.predicates(), 2u);
    for (std::size_t a = 0; a < cl.classes.size(); ++a) {
        EXPECT_TRUE(cl.classes[a].points.same_points(predicate_points(fam, cl.classes[a].representative), fam.space()));
        for (std::size_t b = a + 1; b < cl.classes.size(); ++b) {
            EXPECT_FALSE(cl.classes[a].points.same_points(cl.classes[b].points, fam.space()));
        }
    }
    // Running again from the representatives changes nothing.
    std::vector<Formula> again;
    for (const auto& c : cl.classes) {
        again.push_back(c.representative);
    }
    EXPECT_EQ(predicate_closure(fam, again).classes.size(), cl.classes.size());
}

TEST(Closure, Identities) {
    const ChainFamily fam = family("nonfull-s5");
    const ClosureResult cl = predicate_closure(fam, {p("P(x)"), p("Q(x)")});
    const auto checks = check_equivalences(fam, nonfull_equivalences(), &cl);
    ASSERT_EQ(checks.size(), 32u);
    std::vector<std::string> refuted;
    for (const auto& c : checks) {
        if (!c.holds) {
            refuted.push_back(c.eq.lhs + " ~ " + c.lhs_class);
        }
    }
    // Computed classes of the identities that do not hold as stated.
    EXPECT_EQ(refuted, (std::vector<std::string>{"P(x) -> Q(x) ~ Q(0)", "Q(0) -> Q(x) ~ P(x)",
                                                 "Q(0) -> P(x) ~ P(x)", "Q(0) -> Q(x) ~ P(x)"}));
    EXPECT_TRUE(same_predicate(fam, p("forall x. P(x)"), p("false")));
    EXPECT_TRUE(same_predicate(fam, p("exists x. Q(x)"), p("Q(0)")));
}

TEST(Closure, CapReportsFrontier) {
    // On the descending chain the definable propositions include i <= n for
    // every n.
    try {
        predicate_closure(family("descending"), {p("P(x)")}, ClosureOptions{12});
        FAIL() << "closure terminated";
    } catch (const ClosureError& e) {
        EXPECT_EQ(e.frontier().size(), 12u);
    }
}

TEST(Certify, EveryFamily) {
    for (const auto& id : certified_family_ids()) {
        const CertifyReport r = certify_family(id, kFamilies);
        EXPECT_TRUE(r.ok()) << r.to_text();
    }
    EXPECT_THROW(certify_family("sideways", kFamilies), FamilyError);
}

TEST(Certify, SampledPredicates) {
    EXPECT_TRUE(random_expressible_valuations(family("ascending"), 3, 100).ok());
    EXPECT_TRUE(random_expressible_valuations(family("descending"), 3, 100).ok());
    EXPECT_THROW(random_expressible_valuations(family_from_model(KripkeModel{}), 1, 1), FamilyError);
}
