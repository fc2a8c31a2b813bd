// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/chain/closure.hpp"

#include <algorithm>
#include <tuple>

#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"

namespace minlog {

namespace {

bool smaller(const Formula& a, const Formula& b) {
    return std::make_tuple(a.node_count(), to_string(a)) < std::make_tuple(b.node_count(), to_string(b));
}

const std::string kVar = "x";

// Class operations on predicate points; they mirror force_set.
class PredicateOps {
  public:
    explicit PredicateOps(const ChainFamily& fam) : fam_(fam), sp_(fam.space()), dom_(fam.domain_set()) {}

    [[nodiscard]] const ZoneSet& domain() const { return dom_; }
    ZoneSet imp(const ZoneSet& a, const ZoneSet& b) const {
        return fam_.down(a.minus(b, sp_)).complement(sp_).intersect(dom_);
    }
    ZoneSet forall(const ZoneSet& a) const {
        return fam_.down(dom_.minus(a, sp_).exists_t()).complement(sp_).intersect(dom_);
    }
    ZoneSet exists(const ZoneSet& a) const { return a.exists_t().intersect(dom_); }
    ZoneSet at(const ZoneSet& a, std::uint32_t c) const { return a.at_term(c).intersect(dom_); }
    bool proposition(const ZoneSet& a) const { return exists(a).same_points(a, sp_); }
    bool same(const ZoneSet& a, const ZoneSet& b) const { return a.same_points(b, sp_); }

  private:
    const ChainFamily& fam_;
    Space sp_;
    ZoneSet dom_;
};

} // namespace

ZoneSet predicate_points(const ChainFamily& fam, const Formula& f) {
    const auto fv = f.free_variables();
    if (fv.size() > 1 || (fv.size() == 1 && !fv.contains(kVar))) {
        throw FamilyError("predicate " + to_string(f) + " may only have x free");
    }
    return force_set(fam, f).intersect(fam.domain_set());
}

bool same_predicate(const ChainFamily& fam, const Formula& a, const Formula& b) {
    return predicate_points(fam, a).same_points(predicate_points(fam, b), fam.space());
}

std::size_t ClosureResult::predicates() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const PredicateClass& c) { return !c.proposition; }));
}

const PredicateClass* ClosureResult::find(const ZoneSet& points, const ChainFamily& fam) const {
    for (const auto& c : classes) {
        if (c.points.same_points(points, fam.space())) {
            return &c;
        }
    }
    return nullptr;
}

std::string ClosureResult::to_text(const ChainFamily& fam) const {
    std::string out = "closure of " + family + ": " + std::to_string(classes.size()) + " classes (" +
                      std::to_string(predicates()) + " predicates, " + std::to_string(propositions()) +
                      " propositions), " + std::to_string(rounds) + " rounds, " + std::to_string(candidates) +
                      " candidates\n";
    for (const auto& c : classes) {
        out += std::string(c.proposition ? "  proposition " : "  predicate   ") + to_string(c.representative) +
               "\n      forced at: " + c.points.to_string(fam.prefix_names()) + "\n";
    }
    return out;
}

ClosureResult predicate_closure(const ChainFamily& fam, const std::vector<Formula>& seeds, const ClosureOptions& opts) {
    const PredicateOps ops(fam);
    const auto consts = fam.root_constants();
    ClosureResult res;
    res.family = fam.id;

    auto frontier = [&] {
        std::vector<std::string> f;
        for (const auto& c : res.classes) {
            f.push_back(to_string(c.representative));
        }
        return f;
    };
    // True when a class was added or got a smaller representative.
    auto insert = [&](const Formula& f, const ZoneSet& points) {
        ++res.candidates;
        for (auto& c : res.classes) {
            if (ops.same(c.points, points)) {
                if (smaller(f, c.representative)) {
                    c.representative = f;
                    return true;
                }
                return false;
            }
        }
        if (res.classes.size() >= opts.cap) {
            throw ClosureError("more than " + std::to_string(opts.cap) + " classes in " + fam.id, frontier());
        }
        res.classes.push_back({f, points, ops.proposition(points)});
        return true;
    };

    insert(Formula::bottom(), predicate_points(fam, Formula::bottom()));
    for (const auto& s : seeds) {
        insert(s, predicate_points(fam, s));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        ++res.rounds;
        const std::vector<PredicateClass> snap = res.classes;
        for (const auto& a : snap) {
            const Formula& f = a.representative;
            if (f.has_free(kVar)) {
                changed |= insert(Formula::forall(kVar, f), ops.forall(a.points));
                changed |= insert(Formula::exists(kVar, f), ops.exists(a.points));
                for (auto c : consts) {
                    changed |= insert(substitute(f, kVar, Term::constant(c)), ops.at(a.points, c));
                }
            }
            for (const auto& b : snap) {
                const Formula& g = b.representative;
                changed |= insert(Formula::implies(f, g), ops.imp(a.points, b.points));
                changed |= insert(Formula::conj(f, g), a.points.intersect(b.points));
                changed |= insert(Formula::disj(f, g), a.points.unite(b.points));
            }
        }
    }
    std::stable_sort(res.classes.begin(), res.classes.end(), [](const PredicateClass& a, const PredicateClass& b) {
        if (a.proposition != b.proposition) {
            return !a.proposition;
        }
        return smaller(a.representative, b.representative);
    });
    return res;
}

const std::vector<Equivalence>& nonfull_equivalences() {
    static const std::vector<Equivalence> eqs = {
        {"forall x. P(x)", "false"},  {"forall x. Q(x)", "false"},  {"exists x. P(x)", "P(0)"},
        {"exists x. Q(x)", "Q(0)"},   {"P(x) -> Q(x)", "Q(x)"},     {"Q(x) -> P(x)", "P(0)"},
        {"P(x) | Q(x)", "P(x)"},      {"P(x) & Q(x)", "Q(x)"},      {"P(x) -> P(0)", "P(0)"},
        {"P(0) -> P(x)", "P(x)"},     {"P(x) | P(0)", "P(0)"},      {"P(x) & P(0)", "P(x)"},
        {"Q(x) -> Q(0)", "P(0)"},     {"Q(0) -> Q(x)", "Q(x)"},     {"Q(x) | Q(0)", "Q(0)"},
        {"Q(x) & Q(0)", "Q(x)"},      {"P(x) -> Q(0)", "Q(0)"},     {"Q(0) -> P(x)", "Q(x)"},
        {"P(x) | Q(0)", "P(0)"},      {"P(x) & Q(0)", "Q(x)"},      {"Q(x) -> Q(0)", "P(0)"},
        {"Q(0) -> Q(x)", "Q(x)"},     {"Q(x) | Q(0)", "Q(0)"},      {"Q(x) & Q(0)", "Q(x)"},
        {"P(x) -> false", "false"},   {"false -> P(x)", "P(0)"},    {"P(x) | false", "P(x)"},
        {"P(x) & false", "false"},    {"Q(x) -> false", "false"},   {"false -> Q(x)", "P(0)"},
        {"Q(x) | false", "Q(x)"},     {"Q(x) & false", "false"},
    };
    return eqs;
}

std::vector<EquivalenceCheck> check_equivalences(const ChainFamily& fam, const std::vector<Equivalence>& eqs,
                                                 const ClosureResult* closure) {
    std::vector<EquivalenceCheck> out;
    for (const auto& e : eqs) {
        const ZoneSet l = predicate_points(fam, parse_formula(e.lhs));
        const ZoneSet r = predicate_points(fam, parse_formula(e.rhs));
        EquivalenceCheck c{e, l.same_points(r, fam.space()), l.to_string(fam.prefix_names()),
                           r.to_string(fam.prefix_names()), ""};
        if (closure != nullptr) {
            if (const auto* k = closure->find(l, fam)) {
                c.lhs_class = to_string(k->representative);
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace minlog
