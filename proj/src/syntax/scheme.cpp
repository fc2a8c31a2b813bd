// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/syntax/scheme.hpp"

#include <algorithm>

#include "minlog/syntax/parser.hpp"

namespace minlog {

namespace {

struct Entry {
    const char* id;
    const char* text;
    bool alternative;
};

// WGMP is not in the principal list; its statement is read off the proofs
// that use it.
constexpr Entry kEntries[] = {
    {"DNE", "~~A -> A", false},
    {"EFQ", "false -> A", false},
    {"LEM", "A | ~A", false},
    {"WLEM", "~A | ~~A", false},
    {"DGP", "(A -> B) | (B -> A)", false},
    {"DP", "exists y. (P(y) -> forall x. P(x))", false},
    {"HE", "exists y. ((exists x. P(x)) -> P(y))", false},
    {"GMP", "~(forall x. P(x)) -> exists x. ~P(x)", false},
    {"WGMP", "~(forall x. P(x)) -> ~~(exists x. ~P(x))", false},
    {"GLPO", "(forall x. ~P(x)) | (exists x. P(x))", false},
    {"GLPOA", "(forall x. P(x)) | (exists x. ~P(x))", false},
    {"DNSU", "(forall x. ~~P(x)) -> ~~(forall x. P(x))", false},
    {"DNSE", "~~(exists x. P(x)) -> exists x. ~~P(x)", false},
    {"CD", "(forall x. P(x) | (exists x. Q)) -> (forall x. P(x)) | (exists x. Q)", false},
    {"IP", "((exists x. Q) -> exists x. P(x)) -> exists x. ((exists x. Q) -> P(x))", false},
    {"DPALT", "exists y. forall x. (P(y) -> P(x))", true},
    {"HEALT", "exists y. forall x. (P(x) -> P(y))", true},
    {"CDALT", "(forall x. P(x) | Q) -> (forall x. P(x)) | Q", true},
    {"IPALT", "(Q -> exists x. P(x)) -> exists x. (Q -> P(x))", true},
};

std::vector<Placeholder> placeholders_of(const Formula& f) {
    std::vector<Placeholder> out;
    auto visit = [&](auto&& self, const Formula& g) -> void {
        switch (g.kind()) {
        case Formula::Kind::Bottom: return;
        case Formula::Kind::Atom: {
            const int arity = g.argument() ? 1 : 0;
            const bool seen = std::any_of(out.begin(), out.end(), [&](const Placeholder& p) { return p.name == g.name(); });
            if (!seen) {
                out.push_back({g.name(), arity});
            }
            return;
        }
        case Formula::Kind::Implies:
        case Formula::Kind::And:
        case Formula::Kind::Or:
            self(self, g.lhs());
            self(self, g.rhs());
            return;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: self(self, g.body()); return;
        }
    };
    visit(visit, f);
    // Report in a fixed order: unary predicates first, then propositions by name.
    std::stable_sort(out.begin(), out.end(), [](const Placeholder& a, const Placeholder& b) {
        if (a.arity != b.arity) {
            return a.arity > b.arity;
        }
        return a.name < b.name;
    });
    return out;
}

std::vector<Scheme> build_catalog() {
    std::vector<Scheme> out;
    for (const auto& e : kEntries) {
        Formula t = parse_formula(e.text);
        out.push_back(Scheme{e.id, placeholders_of(t), t, e.alternative});
    }
    return out;
}

std::set<std::string> argument_free_vars(const SchemeInstance& inst) {
    std::set<std::string> fv;
    for (const auto& [name, arg] : inst.arguments) {
        for (const auto& v : arg.body.free_variables()) {
            if (!arg.hole || v != *arg.hole) {
                fv.insert(v);
            }
        }
    }
    return fv;
}

Formula build(const Formula& t, const Scheme& s, const SchemeInstance& inst, std::map<std::string, std::string>& rename,
              const std::set<std::string>& avoid, std::set<std::string>& used) {
    switch (t.kind()) {
    case Formula::Kind::Bottom: return t;
    case Formula::Kind::Atom: {
        const auto& arg = inst.arguments.at(t.name());
        if (!t.argument()) {
            return arg.body;
        }
        Term term = *t.argument();
        if (term.is_variable()) {
            auto it = rename.find(term.name());
            if (it != rename.end()) {
                term = Term::variable(it->second);
            }
        }
        return substitute(arg.body, *arg.hole, term);
    }
    case Formula::Kind::Implies:
        return Formula::implies(build(t.lhs(), s, inst, rename, avoid, used), build(t.rhs(), s, inst, rename, avoid, used));
    case Formula::Kind::And:
        return Formula::conj(build(t.lhs(), s, inst, rename, avoid, used), build(t.rhs(), s, inst, rename, avoid, used));
    case Formula::Kind::Or:
        return Formula::disj(build(t.lhs(), s, inst, rename, avoid, used), build(t.rhs(), s, inst, rename, avoid, used));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        std::string binder = t.name();
        if (avoid.contains(binder)) {
            std::set<std::string> block = avoid;
            block.insert(used.begin(), used.end());
            binder = fresh_variable(binder, block);
            used.insert(binder);
        }
        auto saved = rename.find(t.name()) != rename.end() ? std::optional<std::string>(rename[t.name()]) : std::nullopt;
        rename[t.name()] = binder;
        Formula body = build(t.body(), s, inst, rename, avoid, used);
        if (saved) {
            rename[t.name()] = *saved;
        } else {
            rename.erase(t.name());
        }
        return t.is(Formula::Kind::Forall) ? Formula::forall(binder, body) : Formula::exists(binder, body);
    }
    }
    return t;
}

} // namespace

const std::vector<Scheme>& scheme_catalog() {
    static const std::vector<Scheme> catalog = build_catalog();
    return catalog;
}

std::vector<std::string> primary_scheme_ids() {
    std::vector<std::string> out;
    for (const auto& s : scheme_catalog()) {
        if (!s.alternative) {
            out.push_back(s.id);
        }
    }
    return out;
}

const Scheme* find_scheme(std::string_view id) {
    for (const auto& s : scheme_catalog()) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

const Scheme& get_scheme(std::string_view id) {
    const Scheme* s = find_scheme(id);
    if (s == nullptr) {
        throw SchemeError("unknown scheme '" + std::string(id) + "'");
    }
    return *s;
}

SchemeInstance identity_instance(std::string_view id) {
    const Scheme& s = get_scheme(id);
    SchemeInstance inst{s.id, {}};
    for (const auto& p : s.placeholders) {
        if (p.arity == 0) {
            inst.arguments.emplace(p.name, SchemeArgument{Formula::atom(p.name), std::nullopt});
        } else {
            inst.arguments.emplace(p.name, SchemeArgument{Formula::atom(p.name, Term::variable("x")), "x"});
        }
    }
    return inst;
}

Formula instantiate_scheme(const SchemeInstance& inst) {
    const Scheme& s = get_scheme(inst.scheme);
    for (const auto& p : s.placeholders) {
        auto it = inst.arguments.find(p.name);
        if (it == inst.arguments.end()) {
            throw SchemeError(s.id + ": missing argument for placeholder " + p.name);
        }
        if ((p.arity == 1) != it->second.hole.has_value()) {
            throw SchemeError(s.id + ": arity mismatch for placeholder " + p.name);
        }
    }
    for (const auto& [name, arg] : inst.arguments) {
        const bool known =
            std::any_of(s.placeholders.begin(), s.placeholders.end(), [&](const Placeholder& p) { return p.name == name; });
        if (!known) {
            throw SchemeError(s.id + ": no placeholder named " + name);
        }
    }
    std::set<std::string> avoid = argument_free_vars(inst);
    std::set<std::string> used = s.tmpl.all_variables();
    for (const auto& [name, arg] : inst.arguments) {
        auto vars = arg.body.all_variables();
        used.insert(vars.begin(), vars.end());
    }
    std::map<std::string, std::string> rename;
    return build(s.tmpl, s, inst, rename, avoid, used);
}

namespace {

class Matcher {
  public:
    explicit Matcher(const Scheme& s) : scheme_(s) {}

    bool run(const Formula& t, const Formula& g) { return match(t, g); }

    SchemeInstance result() const {
        SchemeInstance inst{scheme_.id, {}};
        for (const auto& [name, arg] : env_) {
            inst.arguments.emplace(name, arg);
        }
        return inst;
    }

  private:
    bool mentions_bound(const Formula& g, const std::string* allowed) const {
        for (const auto& v : g.free_variables()) {
            for (const auto& [tv, gv] : binders_) {
                if (gv == v && (allowed == nullptr || *allowed != v)) {
                    return true;
                }
            }
        }
        return false;
    }

    bool bind(const std::string& name, SchemeArgument arg) {
        auto it = env_.find(name);
        if (it == env_.end()) {
            env_.emplace(name, std::move(arg));
            return true;
        }
        const SchemeArgument& old = it->second;
        if (!old.hole) {
            return alpha_equal(old.body, arg.body);
        }
        std::set<std::string> avoid = old.body.all_variables();
        auto more = arg.body.all_variables();
        avoid.insert(more.begin(), more.end());
        const Term z = Term::variable(fresh_variable("z", avoid));
        return alpha_equal(substitute(old.body, *old.hole, z), substitute(arg.body, *arg.hole, z));
    }

    const std::string* lookup(const std::string& tv) const {
        for (auto it = binders_.rbegin(); it != binders_.rend(); ++it) {
            if (it->first == tv) {
                return &it->second;
            }
        }
        return nullptr;
    }

    bool match(const Formula& t, const Formula& g) {
        switch (t.kind()) {
        case Formula::Kind::Bottom: return g.is(Formula::Kind::Bottom);
        case Formula::Kind::Atom: {
            if (!t.argument()) {
                if (mentions_bound(g, nullptr)) {
                    return false;
                }
                return bind(t.name(), SchemeArgument{g, std::nullopt});
            }
            const std::string* gv = lookup(t.argument()->name());
            if (gv == nullptr || mentions_bound(g, gv)) {
                return false;
            }
            return bind(t.name(), SchemeArgument{g, *gv});
        }
        case Formula::Kind::Implies:
        case Formula::Kind::And:
        case Formula::Kind::Or: return g.is(t.kind()) && match(t.lhs(), g.lhs()) && match(t.rhs(), g.rhs());
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            if (!g.is(t.kind())) {
                return false;
            }
            binders_.emplace_back(t.name(), g.name());
            const bool ok = match(t.body(), g.body());
            binders_.pop_back();
            return ok;
        }
        }
        return false;
    }

    const Scheme& scheme_;
    std::vector<std::pair<std::string, std::string>> binders_;
    std::map<std::string, SchemeArgument> env_;
};

} // namespace

std::optional<SchemeInstance> match_scheme(std::string_view id, const Formula& target) {
    const Scheme& s = get_scheme(id);
    Matcher m(s);
    if (!m.run(s.tmpl, target)) {
        return std::nullopt;
    }
    SchemeInstance inst = m.result();
    if (!alpha_equal(instantiate_scheme(inst), target)) {
        return std::nullopt;
    }
    return inst;
}

} // namespace minlog
