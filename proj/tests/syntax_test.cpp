// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "minlog/syntax/formula.hpp"
#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

using namespace minlog;

namespace {

Formula p(const char* s) { return parse_formula(s); }

} // namespace

TEST(Parser, NegationIsImplicationToBottom) {
    Formula f = p("~A");
    ASSERT_TRUE(f.is(Formula::Kind::Implies));
    EXPECT_TRUE(f.lhs().is(Formula::Kind::Atom));
    EXPECT_TRUE(f.rhs().is(Formula::Kind::Bottom));
    EXPECT_TRUE(f.is_negation());
}

TEST(Parser, DrinkerShape) {
    Formula f = p("exists y. (P(y) -> forall x. P(x))");
    ASSERT_TRUE(f.is(Formula::Kind::Exists));
    EXPECT_EQ(f.name(), "y");
    EXPECT_TRUE(f.body().rhs().is(Formula::Kind::Forall));
    EXPECT_TRUE(alpha_equal(f, get_scheme("DP").tmpl));
    EXPECT_TRUE(f.is_closed());
}

TEST(Parser, Decidability) {
    Formula f = p("forall x. (D(x) | ~D(x))");
    ASSERT_TRUE(f.is(Formula::Kind::Forall));
    EXPECT_TRUE(f.body().is(Formula::Kind::Or));
}

TEST(Parser, PrecedenceAndAssociativity) {
    EXPECT_TRUE(p("A -> B -> C").identical(p("A -> (B -> C)")));
    EXPECT_TRUE(p("A | B | C").identical(p("(A | B) | C")));
    EXPECT_TRUE(p("A & B | C").identical(p("(A & B) | C")));
    EXPECT_TRUE(p("~A & B").identical(p("(~A) & B")));
    EXPECT_TRUE(p("forall x. P(x) -> A").identical(p("forall x. (P(x) -> A)")));
    EXPECT_TRUE(p("A -> forall x. P(x) | B").identical(p("A -> forall x. (P(x) | B)")));
}

TEST(Parser, Errors) {
    try {
        (void)p("A ->\n  (B & )");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 8u);
    }
    EXPECT_THROW((void)p("P(x) -> P"), ParseError);
    EXPECT_THROW((void)p("A | forall x. P(x)"), ParseError);
    EXPECT_THROW((void)p("A B"), ParseError);
    EXPECT_THROW((void)p("forall false. A"), ParseError);
    Signature sig;
    (void)parse_formula("P(x)", &sig);
    EXPECT_THROW((void)parse_formula("P -> A", &sig), ParseError);
    EXPECT_EQ(sig.at("P"), 1);
}

TEST(Printer, MinimalParentheses) {
    EXPECT_EQ(to_string(p("~~A -> A")), "~~A -> A");
    EXPECT_EQ(to_string(p("false -> false")), "~false");
    EXPECT_EQ(to_string(p("(A -> B) -> C")), "(A -> B) -> C");
    EXPECT_EQ(to_string(p("~(forall x. P(x)) -> exists x. ~P(x)")), "~(forall x. P(x)) -> exists x. ~P(x)");
    EXPECT_EQ(to_string(p("(A | B) & C")), "(A | B) & C");
    EXPECT_EQ(to_string(p("A & (B & C)")), "A & (B & C)");
    EXPECT_EQ(to_string(p("~(A & B)")), "~(A & B)");
    EXPECT_EQ(to_string(p("(~A -> false) | B")), "~~A | B");
    EXPECT_EQ(to_string(p("forall x. ~~P(x)"), PrintStyle::Unicode), "∀x. ¬¬P(x)");
}

TEST(Printer, RoundTripCatalog) {
    for (const auto& s : scheme_catalog()) {
        const std::string text = to_string(s.tmpl);
        EXPECT_TRUE(alpha_equal(parse_formula(text), s.tmpl)) << s.id << ": " << text;
        EXPECT_EQ(to_string(parse_formula(text)), text);
    }
}

TEST(Alpha, Basics) {
    EXPECT_TRUE(alpha_equal(p("exists y.(P(y)->forall x.P(x))"), p("exists z.(P(z)->forall w.P(w))")));
    EXPECT_FALSE(alpha_equal(p("P(x)"), p("P(y)")));
    EXPECT_FALSE(alpha_equal(get_scheme("DP").tmpl, get_scheme("HE").tmpl));
    EXPECT_FALSE(alpha_equal(p("forall x. forall y. R(x)"), p("forall y. forall x. R(x)")));
    EXPECT_TRUE(alpha_equal(p("forall x. forall y. R(x)"), p("forall y. forall x. R(y)")));
}

TEST(Substitute, CaptureAvoiding) {
    EXPECT_TRUE(substitute(p("P(x)"), "x", Term::variable("y")).identical(p("P(y)")));
    Formula f = substitute(p("forall y. (P(y) -> P(x))"), "x", Term::variable("y"));
    EXPECT_EQ(to_string(f), "forall y'. P(y') -> P(y)");
    Formula dp = get_scheme("DP").tmpl;
    EXPECT_TRUE(substitute(dp.body(), "x", Term::constant(0)).identical(dp.body()));
    EXPECT_TRUE(substitute(p("A -> P(z)"), "x", Term::constant(3)).identical(p("A -> P(z)")));
}

TEST(Scheme, CatalogShape) {
    EXPECT_EQ(primary_scheme_ids().size(), 15u);
    EXPECT_EQ(to_string(get_scheme("WGMP").tmpl), "~(forall x. P(x)) -> ~~(exists x. ~P(x))");
    const Scheme& cd = get_scheme("CD");
    ASSERT_EQ(cd.placeholders.size(), 2u);
    EXPECT_EQ(cd.placeholders[0].name, "P");
    EXPECT_EQ(cd.placeholders[0].arity, 1);
    EXPECT_EQ(cd.placeholders[1].name, "Q");
    EXPECT_EQ(cd.placeholders[1].arity, 0);
    EXPECT_EQ(find_scheme("XYZ"), nullptr);
    EXPECT_THROW((void)get_scheme("XYZ"), SchemeError);
}

TEST(Scheme, IdentityInstantiation) {
    for (const auto& s : scheme_catalog()) {
        EXPECT_TRUE(alpha_equal(instantiate_scheme(identity_instance(s.id)), s.tmpl)) << s.id;
    }
}

TEST(Scheme, Instantiation) {
    SchemeInstance lem{"LEM", {{"A", {p("P(x)"), std::nullopt}}}};
    EXPECT_TRUE(alpha_equal(instantiate_scheme(lem), p("P(x) | ~P(x)")));

    SchemeInstance dp{"DP", {{"P", {p("(D(x) -> A) & (~D(x) -> B)"), "x"}}}};
    EXPECT_TRUE(alpha_equal(instantiate_scheme(dp),
                            p("exists y. ((D(y) -> A) & (~D(y) -> B) -> forall x. (D(x) -> A) & (~D(x) -> B))")));

    SchemeInstance cd{"CD", {{"P", {p("P(x)"), "x"}}, {"Q", {p("A"), std::nullopt}}}};
    EXPECT_TRUE(alpha_equal(instantiate_scheme(cd),
                            p("(forall x. P(x) | (exists x. A)) -> (forall x. P(x)) | (exists x. A)")));

    // A free y in the argument forces the template's y binder to be renamed.
    SchemeInstance cap{"DP", {{"P", {p("R(x) -> S(y)"), "x"}}}};
    Formula f = instantiate_scheme(cap);
    EXPECT_TRUE(f.has_free("y"));
    EXPECT_TRUE(alpha_equal(f, p("exists z. ((R(z) -> S(y)) -> forall x. (R(x) -> S(y)))")));

    SchemeInstance bad{"LEM", {{"A", {p("P(x)"), "x"}}}};
    EXPECT_THROW((void)instantiate_scheme(bad), SchemeError);
    SchemeInstance missing{"DGP", {{"A", {p("A"), std::nullopt}}}};
    EXPECT_THROW((void)instantiate_scheme(missing), SchemeError);
}

TEST(Scheme, Matching) {
    auto m = match_scheme("DP", p("exists u. ((D(u) -> A) -> forall v. (D(v) -> A))"));
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(alpha_equal(instantiate_scheme(*m), p("exists u. ((D(u) -> A) -> forall v. (D(v) -> A))")));

    EXPECT_TRUE(match_scheme("LEM", p("~A | ~~A")).has_value());
    EXPECT_TRUE(match_scheme("WLEM", p("~A | ~~A")).has_value());
    EXPECT_FALSE(match_scheme("LEM", p("A | ~B")).has_value());
    EXPECT_FALSE(match_scheme("DP", p("exists y. (P(y) -> forall x. Q(x))")).has_value());
    // The proposition Q of CD may not mention the bound x.
    EXPECT_FALSE(match_scheme("CD", p("(forall x. P(x) | (exists x. R(x))) -> (forall x. P(x)) | (exists x. R(x))"))
                     .has_value());
    EXPECT_TRUE(match_scheme("EFQ", p("false -> forall x. P(x)")).has_value());
    EXPECT_TRUE(match_scheme("DNE", p("~~~false -> ~false")).has_value());
    for (const auto& s : scheme_catalog()) {
        EXPECT_TRUE(match_scheme(s.id, s.tmpl).has_value()) << s.id;
    }
}
