// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "minlog/kernel/checker.hpp"
#include "minlog/kernel/proof.hpp"
#include "minlog/kernel/sexpr.hpp"
#include "minlog/syntax/scheme.hpp"
#include "support/mutations.hpp"

using namespace minlog;
using namespace minlog::testing;

namespace {

const std::filesystem::path kProofs = MINLOG_PROOFS_DIR;

ReductionClaim corpus(const std::string& id) { return load_claim(kProofs / (id + ".prf")); }

bool mentions(const std::vector<Violation>& vs, const std::string& path, const std::string& text) {
    return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
        return v.path == path && v.message.find(text) != std::string::npos;
    });
}

ProofNode node(const std::string& text) {
    return parse_claim("(claim :target LEM (proof " + text + "))", "t").proof;
}

} // namespace

TEST(SExpr, ReadAndComments) {
    auto es = read_sexprs("; c\n(a :k \"s\\\"q\" (b))\nsym");
    ASSERT_EQ(es.size(), 2u);
    EXPECT_TRUE(es[0].is_list());
    EXPECT_EQ(es[0].items[2].text, "s\"q");
    EXPECT_TRUE(es[0].items[1].is_keyword());
    EXPECT_EQ(es[1].line, 3u);
    EXPECT_THROW((void)read_sexprs("(a (b)"), SExprError);
    EXPECT_THROW((void)read_sexprs("a)"), SExprError);
}

TEST(Script, Errors) {
    EXPECT_THROW((void)parse_claim("(claim :target NOPE (proof (assume :label \"u\" :concl \"A\")))"), ScriptError);
    EXPECT_THROW((void)parse_claim("(claim :target LEM)", "t"), ScriptError);
    EXPECT_THROW((void)parse_claim("(claim :target LEM (proof (assume :label \"u\")))"), ScriptError);
    try {
        (void)parse_claim("(claim :target LEM\n (proof (assume :label \"u\" :concl \"A ->\")))");
        FAIL();
    } catch (const ScriptError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(Checker, SingleLeaf) {
    ReductionClaim c = corpus("lem_wlem");
    EXPECT_TRUE(check_reduction(c).ok());
    EXPECT_EQ(proof_size(c.proof), 1u);
}

TEST(Checker, SchemeMustBeAllowedAndMatch) {
    ProofNode leaf = node("(DNE :concl \"~~A -> A\")");
    EXPECT_TRUE(check_proof(leaf, {{"DNE"}, false}).ok());
    EXPECT_FALSE(check_proof(leaf, {{"LEM"}, false}).ok());
    ProofNode wrong = node("(DNE :concl \"~A -> A\")");
    EXPECT_FALSE(check_proof(wrong, {{"DNE"}, false}).ok());
}

TEST(Checker, FallaciousGeneralization) {
    // LEM(P(x)) as an assumption cannot be generalized over x.
    ProofNode bad = node(R"p((forallI :var "x" :concl "forall x. (P(x) | ~P(x))"
                              (assume :label "u" :concl "P(x) | ~P(x)")))p");
    ProofVerdict v = check_proof(bad, {});
    EXPECT_TRUE(mentions(v.violations, "root", "eigenvariable x is free in open assumption"));

    ProofNode good = node(R"p((forallI :var "x" :concl "forall x. (P(x) | ~P(x))"
                               (LEM :concl "P(x) | ~P(x)")))p");
    ProofVerdict ok = check_proof(good, {{"LEM"}, false});
    EXPECT_TRUE(ok.ok());
    EXPECT_TRUE(ok.open_assumptions.empty());
}

TEST(Checker, TwoTermRulesVersusAssumption) {
    ProofNode rule_form = node(R"p((forallI :var "x" :concl "forall x. (D(x) | ~D(x))"
                                    (forallE :term x :concl "D(x) | ~D(x)"
                                      (Dx :concl "forall x. (D(x) | ~D(x))"))))p");
    EXPECT_TRUE(check_proof(rule_form, {{}, true}).ok());
    EXPECT_FALSE(check_proof(rule_form, {{}, false}).ok());

    ProofNode assumed = node(R"p((forallI :var "x" :concl "forall x. (D(x) | ~D(x))"
                                  (assume :label "t" :concl "D(x) | ~D(x)")))p");
    EXPECT_FALSE(check_proof(assumed, {{}, true}).ok());

    EXPECT_FALSE(check_proof(node("(D0 :concl \"D(1)\")"), {{}, true}).ok());
    EXPECT_TRUE(check_proof(node("(notD1 :concl \"~D(1)\")"), {{}, true}).ok());
}

TEST(Checker, DischargeAndBranches) {
    // Vacuous discharge.
    ProofNode k = node(R"p((impI :discharge "v" :concl "B -> A" (assume :label "a" :concl "A")))p");
    ProofVerdict v = check_proof(k, {});
    EXPECT_TRUE(v.ok());
    EXPECT_EQ(v.open_assumptions.size(), 1u);

    // One label for two formulas is rejected.
    ProofNode clash = node(R"p((andI :concl "A & B" (assume :label "u" :concl "A") (assume :label "u" :concl "B")))p");
    EXPECT_FALSE(check_proof(clash, {}).ok());

    // Labels may be reused across the branches of orE.
    ProofNode cases = node(R"p((orE :discharge ("u" "u") :concl "B | A"
                                (assume :label "h" :concl "A | B")
                                (orI :side right :concl "B | A" (assume :label "u" :concl "A"))
                                (orI :side left :concl "B | A" (assume :label "u" :concl "B"))))p");
    ProofVerdict cv = check_proof(cases, {});
    EXPECT_TRUE(cv.ok());
    EXPECT_EQ(cv.open_assumptions.size(), 1u);
}

TEST(Checker, ExistsElimEigenvariable) {
    ProofNode bad = node(R"p((existsE :discharge "p" :var "x" :concl "P(x)"
                              (assume :label "e" :concl "exists x. P(x)")
                              (assume :label "p" :concl "P(x)")))p");
    EXPECT_TRUE(mentions(check_proof(bad, {}).violations, "root", "free in the conclusion"));
}

TEST(Checker, UnknownRule) {
    EXPECT_TRUE(mentions(check_proof(node("(magic :concl \"A\")"), {}).violations, "root", "unknown rule"));
}

TEST(Reduction, WrongTargetAndUnusedPremise) {
    ReductionClaim c = corpus("dne_lem");
    c.target = "WLEM";
    EXPECT_FALSE(check_reduction(c).ok());
    c = corpus("dne_lem");
    c.premises.insert("EFQ");
    EXPECT_FALSE(check_reduction(c).ok());
    c = corpus("lem_wlem");
    c.tt = true;
    EXPECT_FALSE(check_reduction(c).ok());
}

TEST(Corpus, AllClaimsCheck) {
    CorpusReport r = corpus_verify({kProofs});
    EXPECT_EQ(r.entries.size(), 32u);
    EXPECT_TRUE(r.ok()) << r.to_text();
    EXPECT_EQ(r.to_text(), corpus_verify({kProofs}).to_text());
}

TEST(Corpus, DuplicateIdFails) {
    CorpusReport r = corpus_verify({kProofs / "dne_lem.prf", kProofs / "dne_lem.prf"});
    ASSERT_EQ(r.entries.size(), 2u);
    EXPECT_TRUE(r.entries[0].ok);
    EXPECT_FALSE(r.entries[1].ok);
}

TEST(Mutation, DeletedPremise) {
    ReductionClaim c = corpus("lem_glpo");
    delete_premise(node_at(c.proof, "root/2/0/0/0"), 1);
    ReductionVerdict v = check_reduction(c);
    EXPECT_FALSE(v.ok());
    EXPECT_TRUE(mentions(v.violations, "root/2/0/0/0", "premise"));
}

TEST(Mutation, EigenvariableIntoOpenAssumption) {
    ReductionClaim c = corpus("dp_dpalt");
    rename_eigenvariable(node_at(c.proof, "root/1/0"), "y");
    ReductionVerdict v = check_reduction(c);
    EXPECT_TRUE(mentions(v.violations, "root/1/0", "eigenvariable y is free in open assumption 'e'"));
}

TEST(Mutation, SwappedSchemeLeaf) {
    ReductionClaim c = corpus("lem_glpo");
    swap_scheme(node_at(c.proof, "root/0"), "DNE");
    ReductionVerdict v = check_reduction(c);
    EXPECT_TRUE(mentions(v.violations, "root/0", "not among the allowed"));
    EXPECT_TRUE(mentions(v.violations, "root/0", "not an instance of DNE"));
}

TEST(Mutation, WeakeningFreeness) {
    for (const std::string id : {"dne_lem", "lem_efq_dne", "dp_efq_tt_dgp"}) {
        ReductionClaim c = corpus(id);
        ASSERT_TRUE(check_reduction(c).ok()) << id;
        // Strip every scheme leaf in turn.
        std::vector<std::string> leaves;
        std::function<void(const ProofNode&, const std::string&)> walk = [&](const ProofNode& n, const std::string& p) {
            if (find_scheme(n.rule) != nullptr) {
                leaves.push_back(p);
            }
            for (std::size_t i = 0; i < n.premises.size(); ++i) {
                walk(n.premises[i], p + "/" + std::to_string(i));
            }
        };
        walk(c.proof, "root");
        ASSERT_FALSE(leaves.empty()) << id;
        for (const auto& leaf : leaves) {
            ReductionClaim m = c;
            unrule_leaf(node_at(m.proof, leaf), "stripped");
            EXPECT_FALSE(check_reduction(m).ok()) << id << " " << leaf;
        }
    }
}

TEST(Script, RoundTrip) {
    for (const auto& e : std::filesystem::directory_iterator(kProofs)) {
        ReductionClaim c = load_claim(e.path());
        const std::string text = write_claim(c);
        ReductionClaim back = parse_claim(text);
        EXPECT_EQ(write_claim(back), text) << c.id;
        EXPECT_TRUE(check_reduction(back).ok()) << c.id;
        EXPECT_EQ(proof_size(back.proof), proof_size(c.proof));
    }
}
