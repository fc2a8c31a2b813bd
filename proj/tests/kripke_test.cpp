// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "minlog/kripke/catalog.hpp"
#include "minlog/kripke/random.hpp"
#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"

using namespace minlog;

namespace {

const std::filesystem::path kModels = MINLOG_MODELS_DIR;

KripkeModel model(const std::string& name) { return load_model_file(kModels / name); }

Formula p(const char* s) { return parse_formula(s); }

const char* kFig1 = R"(
[worlds] A B
[order]  A<B
[names]  s: 0 ; t: 1
[domain] A: s ; B: s t
[atoms]  A: P(s) ; B: P(s) Q(t)
)";

} // namespace

TEST(Model, ParseFigure) {
    KripkeModel m = load_model(kFig1);
    EXPECT_EQ(m.size(), 2u);
    EXPECT_TRUE(m.leq(0, 1));
    EXPECT_FALSE(m.leq(1, 0));
    EXPECT_EQ(m.terms(), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(m.term_name(1), "t");
    EXPECT_EQ(parse_model(write_model(m)).atoms, m.atoms);
}

TEST(Model, Violations) {
    std::string text = kFig1;
    text.replace(text.find("B: P(s) Q(t)"), 12, "B: Q(t)");
    auto v = validate_model(parse_model(text));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NE(v[0].find("atom P(0) not monotone"), std::string::npos) << v[0];
    EXPECT_THROW((void)load_model(text), ModelError);

    auto d = validate_model(parse_model("[worlds] A B\n[order] A<B\n[domain] A: 0 1 ; B: 0"));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NE(d[0].find("domain not monotone"), std::string::npos);

    auto a = validate_model(parse_model("[worlds] A\n[domain] A: 0\n[atoms] A: P(3)"));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_NE(a[0].find("not in the domain"), std::string::npos);

    EXPECT_THROW((void)parse_model("[worlds] A\n[order] A<Z"), ModelError);
    EXPECT_THROW((void)parse_model("[worlds] A\n[bogus] x"), ModelError);
    EXPECT_THROW((void)parse_model("[order] A<B"), ModelError);
    EXPECT_FALSE(validate_model(parse_model("[worlds] A\n[bot] A")).size() > 0);
}

TEST(Model, TransitiveClosure) {
    KripkeModel m = model("diamond.km");
    EXPECT_TRUE(m.leq(0, 3));
    EXPECT_FALSE(m.leq(1, 2));
    EXPECT_EQ(upsets_within(m, m.all()).size(), 6u);
}

TEST(Forcing, FigureOne) {
    KripkeModel m = load_model(kFig1);
    EXPECT_FALSE(forces(m, 0, p("P(0) -> forall x. P(x)")));
    EXPECT_TRUE(forces(m, 0, p("exists x. P(x)")));
    EXPECT_FALSE(forces(m, 0, p("exists x. Q(x)")));
    EXPECT_TRUE(forces(m, 1, p("exists x. Q(x)")));
    EXPECT_TRUE(forces(m, 0, p("false -> false")));
    EXPECT_THROW((void)forces(m, 0, p("Q(1)")), ForcingError);
    EXPECT_THROW((void)forces(m, 0, p("Q(x)")), ForcingError);
    // DP(Px) and HE(Qx) fail at A, using the model's own labels.
    EXPECT_FALSE(forces(m, 0, p("exists y. (P(y) -> forall x. P(x))")));
    EXPECT_FALSE(forces(m, 0, p("exists y. ((exists x. Q(x)) -> Q(y))")));
}

TEST(Forcing, Valuation) {
    KripkeModel m = model("v_two_terms.km");
    Valuation v;
    v["A"] = PredicateValue{0, world_bit(1), {}};
    EXPECT_FALSE(forces(m, 0, p("A | ~A"), v));
    EXPECT_FALSE(forces(m, 0, p("~A | ~~A"), v));
    EXPECT_TRUE(forces(m, 0, p("~~(A | ~A)"), v));
    EXPECT_TRUE(forces(m, 1, p("A"), v));
    v["A"] = PredicateValue{1, 0, {}};
    EXPECT_THROW((void)forcing_set(m, p("A"), v), ForcingError);
}

TEST(Full, SingleWorldEverySchemeHolds) {
    KripkeModel m = model("single.km");
    for (const auto& id : primary_scheme_ids()) {
        EXPECT_TRUE(scheme_holds_full(m, id).holds) << id;
    }
    EXPECT_FALSE(tt_holds(m).holds);
}

TEST(Full, DiamondAndWitness) {
    KripkeModel m = model("diamond.km");
    EXPECT_TRUE(scheme_holds_full(m, "WLEM").holds);
    FullVerdict dgp = scheme_holds_full(m, "DGP");
    ASSERT_FALSE(dgp.holds);
    ASSERT_TRUE(dgp.witness.has_value());
    EXPECT_TRUE(witness_refutes(m, get_scheme("DGP").tmpl, *dgp.witness));
    EXPECT_EQ(dgp.witness->world, 0u);
    TTVerdict tt = tt_holds(m);
    EXPECT_TRUE(tt.holds);
    ASSERT_TRUE(tt.labelling.has_value());
}

TEST(Full, Deterministic) {
    KripkeModel m = model("v_two_terms.km");
    FullVerdict a = scheme_holds_full(m, "DP");
    FullVerdict b = scheme_holds_full(m, "DP");
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(a.witness->describe(m), b.witness->describe(m));
    EXPECT_EQ(a.valuations, b.valuations);
}

TEST(Full, Cap) {
    KripkeModel m = model("v_two_terms.km");
    EXPECT_EQ(count_valuations(m, get_scheme("DP").placeholders), 25u);
    EXPECT_THROW((void)scheme_holds_full(m, "DP", {10}), CapExceeded);
}

TEST(Derived, StructuralFacts) {
    DerivedReport vbot = derived_checks(model("v_two_terms_bot.km"));
    EXPECT_FALSE(vbot.efq_holds);
    EXPECT_TRUE(vbot.lem_holds);
    EXPECT_TRUE(vbot.ok());
    DerivedReport allbot = derived_checks(model("v_one_term_bot.km"));
    EXPECT_EQ(allbot.consistent_worlds, 0u);
    EXPECT_FALSE(allbot.dgp_holds);
    DerivedReport clean = derived_checks(model("diamond.km"));
    EXPECT_TRUE(clean.bottom_free);
    EXPECT_TRUE(clean.efq_holds);
    EXPECT_TRUE(clean.ok());
}

TEST(Catalog, Reproduced) {
    CatalogReport rep = check_catalog(kModels / "catalog.txt");
    EXPECT_EQ(rep.results.size(), 9u);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
}

TEST(Catalog, Figures) {
    KripkeModel fig2 = model("fig2.km");
    EXPECT_FALSE(scheme_holds_full(fig2, "DP").holds);
    EXPECT_FALSE(scheme_holds_full(fig2, "HE").holds);
    KripkeModel fig3 = model("fig3.km");
    EXPECT_TRUE(scheme_holds_full(fig3, "DP").holds);
    EXPECT_FALSE(scheme_holds_full(fig3, "DGP").holds);
    // The figure's own labels already refute DGP(A, B) at the root.
    EXPECT_FALSE(forces(fig3, 0, p("(A -> B) | (B -> A)")));
}

TEST(Property, ForcingIsMonotone) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        KripkeModel m = random_model(rng, ModelShape::Any);
        Formula f = random_formula(rng, 4, 3);
        const WorldSet s = forcing_set(m, f);
        EXPECT_TRUE(m.is_upset(s)) << to_string(f) << "\n" << write_model(m);
    }
}

TEST(Property, DoubleNegation) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        KripkeModel m = random_model(rng, ModelShape::Any);
        Formula f = random_formula(rng, 3, 3);
        const WorldSet s = forcing_set(m, f);
        const WorldSet nn = forcing_set(m, Formula::negation(Formula::negation(f)));
        const WorldSet b = m.bottom;
        for (std::size_t w = 0; w < m.size(); ++w) {
            // w forces ~~f iff every v above w forcing ~f forces false.
            bool expect = true;
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (!m.leq(w, v)) {
                    continue;
                }
                // v forces ~f iff every u >= v forcing f forces false.
                bool v_neg = (m.above[v] & s & ~b) == 0;
                if (v_neg && (b & world_bit(v)) == 0) {
                    expect = false;
                }
            }
            EXPECT_EQ((nn & world_bit(w)) != 0, expect);
            // Without false: every v above w sees some f-world.
            if (b == 0) {
                bool dense = true;
                for (std::size_t v = 0; v < m.size(); ++v) {
                    if (m.leq(w, v) && (m.above[v] & s) == 0) {
                        dense = false;
                    }
                }
                EXPECT_EQ((nn & world_bit(w)) != 0, dense);
            }
        }
    }
}

TEST(Property, Characterization) {
    PropertyReport r = characterization_property_tests(3, 40);
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_TRUE(r.ok()) << r.to_text();
}
