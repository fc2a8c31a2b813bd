// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kernel/checker.hpp"

#include <algorithm>
#include <map>

#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

std::string Violation::to_string() const {
    std::string out = path;
    if (line > 0) {
        out += " (line " + std::to_string(line) + ")";
    }
    return out + " " + rule + ": " + message;
}

namespace {

using Open = std::map<std::string, Formula>;

std::string show(const Formula& f) { return to_string(f); }

// Reads off the term that `x` was replaced by in `target`; falls back to x
// itself when x does not occur free in `phi`.
void find_witness(const Formula& phi, const std::string& x, const Formula& target, bool shadowed,
                  std::optional<Term>& found) {
    if (found || shadowed || phi.kind() != target.kind()) {
        return;
    }
    switch (phi.kind()) {
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Atom:
        if (phi.argument() && phi.argument()->is_variable() && phi.argument()->name() == x && target.argument()) {
            found = *target.argument();
        }
        return;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
        find_witness(phi.lhs(), x, target.lhs(), shadowed, found);
        find_witness(phi.rhs(), x, target.rhs(), shadowed, found);
        return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: find_witness(phi.body(), x, target.body(), phi.name() == x, found); return;
    }
}

Term infer_witness(const Formula& phi, const std::string& x, const Formula& target) {
    std::optional<Term> found;
    find_witness(phi, x, target, false, found);
    return found ? *found : Term::variable(x);
}

class Checker {
  public:
    explicit Checker(const AllowedRules& allowed) : allowed_(allowed) {}

    Open run(const ProofNode& n) { return check(n, "root"); }

    ProofVerdict verdict;

  private:
    void violation(const ProofNode& n, const std::string& path, std::string msg) {
        verdict.violations.push_back(Violation{path, n.line, n.rule, std::move(msg)});
    }

    void merge(Open& into, const Open& from, const ProofNode& n, const std::string& path) {
        for (const auto& [label, f] : from) {
            auto it = into.find(label);
            if (it == into.end()) {
                into.emplace(label, f);
            } else if (!alpha_equal(it->second, f)) {
                violation(n, path,
                          "assumption label '" + label + "' used for both " + show(it->second) + " and " + show(f));
            }
        }
    }

    // Removes `label` from `open`; its formula must be `expected`.
    void discharge(Open& open, const std::string& label, const Formula& expected, const ProofNode& n,
                   const std::string& path) {
        auto it = open.find(label);
        if (it == open.end()) {
            return; // vacuous discharge
        }
        if (!alpha_equal(it->second, expected)) {
            violation(n, path,
                      "discharged assumption '" + label + "' is " + show(it->second) + ", expected " + show(expected));
        }
        open.erase(it);
    }

    bool arity(const ProofNode& n, const std::string& path, std::size_t expected) {
        if (n.premises.size() != expected) {
            violation(n, path,
                      "expects " + std::to_string(expected) + " premises, has " + std::to_string(n.premises.size()));
            return false;
        }
        return true;
    }

    bool shape(const ProofNode& n, const std::string& path, const Formula& f, Formula::Kind k, const char* what) {
        if (!f.is(k)) {
            violation(n, path, std::string("expected ") + what + ", got " + show(f));
            return false;
        }
        return true;
    }

    void same(const ProofNode& n, const std::string& path, const Formula& have, const Formula& want,
              const std::string& what) {
        if (!alpha_equal(have, want)) {
            violation(n, path, what + " is " + show(have) + ", expected " + show(want));
        }
    }

    static bool free_in_open(const Open& open, const std::string& v, const std::string* except, std::string& where) {
        for (const auto& [label, f] : open) {
            if (except != nullptr && label == *except) {
                continue;
            }
            if (f.has_free(v)) {
                where = label;
                return true;
            }
        }
        return false;
    }

    Open check(const ProofNode& n, const std::string& path) {
        std::vector<Open> sub;
        sub.reserve(n.premises.size());
        for (std::size_t j = 0; j < n.premises.size(); ++j) {
            sub.push_back(check(n.premises[j], path + "/" + std::to_string(j)));
        }
        const std::string& r = n.rule;
        Open open;
        // Discharging rules merge their branches themselves, since a label
        // may be reused in separate branches.
        const bool branching = (r == rule::OrE && n.premises.size() == 3) || (r == rule::ExistsE && n.premises.size() == 2);
        if (!branching) {
            for (const auto& o : sub) {
                merge(open, o, n, path);
            }
        }
        const Formula& c = n.conclusion;
        auto prem = [&](std::size_t j) -> const Formula& { return n.premises[j].conclusion; };

        if (r == rule::Assume) {
            arity(n, path, 0);
            if (!n.label) {
                violation(n, path, "assumption without :label");
            } else {
                open.emplace(*n.label, c);
            }
        } else if (r == rule::ImpI) {
            if (arity(n, path, 1) && shape(n, path, c, Formula::Kind::Implies, "an implication")) {
                same(n, path, prem(0), c.rhs(), "premise");
                for (const auto& d : n.discharge) {
                    discharge(open, d, c.lhs(), n, path);
                }
            }
        } else if (r == rule::ImpE) {
            if (arity(n, path, 2)) {
                auto fits = [&](const Formula& major, const Formula& minor) {
                    return major.is(Formula::Kind::Implies) && alpha_equal(major.lhs(), minor) &&
                           alpha_equal(major.rhs(), c);
                };
                if (!fits(prem(0), prem(1)) && !fits(prem(1), prem(0))) {
                    violation(n, path,
                              "premises " + show(prem(0)) + " and " + show(prem(1)) + " do not yield " + show(c));
                }
            }
        } else if (r == rule::AndI) {
            if (arity(n, path, 2) && shape(n, path, c, Formula::Kind::And, "a conjunction")) {
                same(n, path, prem(0), c.lhs(), "left premise");
                same(n, path, prem(1), c.rhs(), "right premise");
            }
        } else if (r == rule::AndE) {
            if (arity(n, path, 1) && shape(n, path, prem(0), Formula::Kind::And, "a conjunction premise")) {
                const bool l = alpha_equal(prem(0).lhs(), c);
                const bool rr = alpha_equal(prem(0).rhs(), c);
                const bool ok = n.side ? (*n.side == "left" ? l : rr) : (l || rr);
                if (!ok) {
                    violation(n, path, show(c) + " is not a conjunct of " + show(prem(0)));
                }
            }
        } else if (r == rule::OrI) {
            if (arity(n, path, 1) && shape(n, path, c, Formula::Kind::Or, "a disjunction")) {
                const bool l = alpha_equal(prem(0), c.lhs());
                const bool rr = alpha_equal(prem(0), c.rhs());
                const bool ok = n.side ? (*n.side == "left" ? l : rr) : (l || rr);
                if (!ok) {
                    violation(n, path, show(prem(0)) + " is not a disjunct of " + show(c));
                }
            }
        } else if (r == rule::OrE) {
            open = sub.size() == 3 ? sub[0] : open;
            if (arity(n, path, 3) && shape(n, path, prem(0), Formula::Kind::Or, "a disjunction as first premise")) {
                same(n, path, prem(1), c, "second premise");
                same(n, path, prem(2), c, "third premise");
                if (n.discharge.size() != 2) {
                    violation(n, path, "needs two discharge labels");
                } else {
                    Open left = sub[1];
                    Open right = sub[2];
                    discharge(left, n.discharge[0], prem(0).lhs(), n, path);
                    discharge(right, n.discharge[1], prem(0).rhs(), n, path);
                    open = sub[0];
                    merge(open, left, n, path);
                    merge(open, right, n, path);
                }
            }
        } else if (r == rule::ForallI) {
            if (arity(n, path, 1) && shape(n, path, c, Formula::Kind::Forall, "a universal")) {
                const std::string& x = c.name();
                std::string y = n.var ? *n.var : x;
                if (!n.var) {
                    Term t = infer_witness(c.body(), x, prem(0));
                    if (t.is_variable()) {
                        y = t.name();
                    }
                }
                same(n, path, prem(0), substitute(c.body(), x, Term::variable(y)), "premise");
                std::string where;
                if (free_in_open(sub[0], y, nullptr, where)) {
                    violation(n, path, "eigenvariable " + y + " is free in open assumption '" + where + "'");
                }
                if (c.has_free(y)) {
                    violation(n, path, "eigenvariable " + y + " is free in the conclusion");
                }
            }
        } else if (r == rule::ForallE) {
            if (arity(n, path, 1) && shape(n, path, prem(0), Formula::Kind::Forall, "a universal premise")) {
                const Formula& phi = prem(0).body();
                const Term t = n.term ? *n.term : infer_witness(phi, prem(0).name(), c);
                same(n, path, c, substitute(phi, prem(0).name(), t), "conclusion");
            }
        } else if (r == rule::ExistsI) {
            if (arity(n, path, 1) && shape(n, path, c, Formula::Kind::Exists, "an existential")) {
                const Formula& phi = c.body();
                const Term t = n.term ? *n.term : infer_witness(phi, c.name(), prem(0));
                same(n, path, prem(0), substitute(phi, c.name(), t), "premise");
            }
        } else if (r == rule::ExistsE) {
            open = sub.size() == 2 ? sub[0] : open;
            if (arity(n, path, 2) && shape(n, path, prem(0), Formula::Kind::Exists, "an existential first premise")) {
                same(n, path, prem(1), c, "second premise");
                const Formula& ex = prem(0);
                if (n.discharge.size() != 1) {
                    violation(n, path, "needs one discharge label");
                } else {
                    const std::string& u = n.discharge[0];
                    std::string y = n.var ? *n.var : ex.name();
                    auto hyp = sub[1].find(u);
                    if (!n.var && hyp != sub[1].end()) {
                        Term t = infer_witness(ex.body(), ex.name(), hyp->second);
                        if (t.is_variable()) {
                            y = t.name();
                        }
                    }
                    const Formula inst = substitute(ex.body(), ex.name(), Term::variable(y));
                    std::string where;
                    if (free_in_open(sub[1], y, &u, where)) {
                        violation(n, path, "eigenvariable " + y + " is free in open assumption '" + where + "'");
                    }
                    if (c.has_free(y)) {
                        violation(n, path, "eigenvariable " + y + " is free in the conclusion");
                    }
                    if (ex.has_free(y)) {
                        violation(n, path, "eigenvariable " + y + " is free in " + show(ex));
                    }
                    Open minor = sub[1];
                    discharge(minor, u, inst, n, path);
                    open = sub[0];
                    merge(open, minor, n, path);
                }
            }
        } else if (is_tt_rule(r)) {
            arity(n, path, 0);
            verdict.tt_used = true;
            if (!allowed_.tt) {
                violation(n, path, "two-term rules are not allowed here");
            }
            const char* expected = r == rule::D0 ? "D(0)" : r == rule::NotD1 ? "~D(1)" : "forall x. (D(x) | ~D(x))";
            same(n, path, c, parse_formula(expected), "conclusion");
        } else if (find_scheme(r) != nullptr) {
            arity(n, path, 0);
            verdict.schemes_used.insert(r);
            if (!allowed_.schemes.contains(r)) {
                violation(n, path, "scheme " + r + " is not among the allowed rules");
            }
            if (!match_scheme(r, c)) {
                violation(n, path, show(c) + " is not an instance of " + r);
            }
        } else {
            violation(n, path, "unknown rule");
        }
        return open;
    }

    const AllowedRules& allowed_;
};

} // namespace

ProofVerdict check_proof(const ProofNode& root, const AllowedRules& allowed) {
    Checker ch(allowed);
    Open open = ch.run(root);
    ch.verdict.open_assumptions = std::move(open);
    return std::move(ch.verdict);
}

ReductionVerdict check_reduction(const ReductionClaim& c) {
    ReductionVerdict out{c.id, {}};
    ProofVerdict pv = check_proof(c.proof, AllowedRules{c.premises, c.tt});
    out.violations = pv.violations;
    for (const auto& [label, f] : pv.open_assumptions) {
        out.violations.push_back(Violation{"root", c.proof.line, c.proof.rule,
                                           "open assumption '" + label + "': " + to_string(f)});
    }
    const Scheme* target = find_scheme(c.target);
    if (target == nullptr) {
        out.violations.push_back(Violation{"root", c.proof.line, c.proof.rule, "unknown target " + c.target});
    } else if (!alpha_equal(c.proof.conclusion, target->tmpl)) {
        out.violations.push_back(Violation{"root", c.proof.line, c.proof.rule,
                                           "concludes " + to_string(c.proof.conclusion) + ", not " + c.target +
                                               " = " + to_string(target->tmpl)});
    }
    for (const auto& p : c.premises) {
        if (!pv.schemes_used.contains(p)) {
            out.violations.push_back(Violation{"root", c.proof.line, c.proof.rule, "premise " + p + " is never used"});
        }
    }
    if (c.tt && !pv.tt_used) {
        out.violations.push_back(Violation{"root", c.proof.line, c.proof.rule, "declares TT but uses no two-term rule"});
    }
    return out;
}

std::size_t CorpusReport::passed() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.ok; }));
}

std::string CorpusReport::to_text() const {
    std::string out;
    for (const auto& e : entries) {
        out += (e.ok ? "PASS " : "FAIL ") + e.id + "\n";
        for (const auto& m : e.messages) {
            out += "  " + m + "\n";
        }
    }
    out += std::to_string(passed()) + "/" + std::to_string(entries.size()) + " claims verified\n";
    return out;
}

CorpusReport corpus_verify(const std::vector<std::filesystem::path>& paths) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    CorpusReport report;
    for (const auto& p : paths) {
        std::error_code ec;
        if (fs::is_directory(p, ec)) {
            std::vector<fs::path> here;
            for (const auto& de : fs::directory_iterator(p)) {
                if (de.is_regular_file() && de.path().extension() == ".prf") {
                    here.push_back(de.path());
                }
            }
            std::sort(here.begin(), here.end());
            files.insert(files.end(), here.begin(), here.end());
        } else {
            files.push_back(p);
        }
    }
    std::map<std::string, fs::path> seen;
    for (const auto& f : files) {
        CorpusEntry e;
        e.path = f;
        e.id = f.stem().string();
        try {
            ReductionClaim c = load_claim(f);
            e.id = c.id;
            auto [it, fresh] = seen.emplace(c.id, f);
            if (!fresh) {
                e.messages.push_back("duplicate claim id, also in " + it->second.string());
            } else {
                ReductionVerdict v = check_reduction(c);
                for (const auto& viol : v.violations) {
                    e.messages.push_back(viol.to_string());
                }
                e.ok = v.ok();
            }
        } catch (const std::exception& err) {
            e.messages.push_back(err.what());
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace minlog
