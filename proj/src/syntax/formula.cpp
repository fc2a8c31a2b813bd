// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/syntax/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace minlog {

Term Term::variable(std::string name) { return Term(Kind::Variable, std::move(name), 0); }

Term Term::constant(std::uint32_t index) { return Term(Kind::Constant, {}, index); }

std::string Term::to_string() const { return is_variable() ? name_ : std::to_string(index_); }

Formula Formula::bottom() {
    static const Formula b{std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}, {}})};
    return b;
}

Formula Formula::atom(std::string predicate) {
    return Formula{std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), {}, {}, {}})};
}

Formula Formula::atom(std::string predicate, Term argument) {
    return Formula{std::make_shared<const Node>(Node{Kind::Atom, std::move(predicate), std::move(argument), {}, {}})};
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const Node>(Node{Kind::Implies, {}, {}, std::move(lhs), std::move(rhs)})};
}

Formula Formula::negation(Formula f) { return implies(std::move(f), bottom()); }

Formula Formula::conj(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const Node>(Node{Kind::And, {}, {}, std::move(lhs), std::move(rhs)})};
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return Formula{std::make_shared<const Node>(Node{Kind::Or, {}, {}, std::move(lhs), std::move(rhs)})};
}

Formula Formula::forall(std::string var, Formula body) {
    return Formula{std::make_shared<const Node>(Node{Kind::Forall, std::move(var), {}, std::move(body), {}})};
}

Formula Formula::exists(std::string var, Formula body) {
    return Formula{std::make_shared<const Node>(Node{Kind::Exists, std::move(var), {}, std::move(body), {}})};
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_negation() const { return is(Kind::Implies) && rhs().is(Kind::Bottom); }

const std::string& Formula::name() const { return node_->name; }

const std::optional<Term>& Formula::argument() const { return node_->argument; }

const Formula& Formula::lhs() const { return *node_->lhs; }

const Formula& Formula::rhs() const { return *node_->rhs; }

const Formula& Formula::body() const { return *node_->lhs; }

namespace {

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Atom:
        if (f.argument() && f.argument()->is_variable()) {
            const auto& v = f.argument()->name();
            if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
                out.insert(v);
            }
        }
        return;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
        collect_free(f.lhs(), bound, out);
        collect_free(f.rhs(), bound, out);
        return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        bound.push_back(f.name());
        collect_free(f.body(), bound, out);
        bound.pop_back();
        return;
    }
}

void collect_all(const Formula& f, std::set<std::string>& vars, std::set<std::uint32_t>& consts) {
    switch (f.kind()) {
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Atom:
        if (f.argument()) {
            if (f.argument()->is_variable()) {
                vars.insert(f.argument()->name());
            } else {
                consts.insert(f.argument()->index());
            }
        }
        return;
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or:
        collect_all(f.lhs(), vars, consts);
        collect_all(f.rhs(), vars, consts);
        return;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        vars.insert(f.name());
        collect_all(f.body(), vars, consts);
        return;
    }
}

} // namespace

std::set<std::string> Formula::free_variables() const {
    std::vector<std::string> bound;
    std::set<std::string> out;
    collect_free(*this, bound, out);
    return out;
}

bool Formula::has_free(std::string_view var) const { return free_variables().contains(std::string(var)); }

std::set<std::string> Formula::all_variables() const {
    std::set<std::string> vars;
    std::set<std::uint32_t> consts;
    collect_all(*this, vars, consts);
    return vars;
}

std::set<std::uint32_t> Formula::constants() const {
    std::set<std::string> vars;
    std::set<std::uint32_t> consts;
    collect_all(*this, vars, consts);
    return consts;
}

std::size_t Formula::node_count() const {
    switch (kind()) {
    case Kind::Bottom:
    case Kind::Atom: return 1;
    case Kind::Implies:
        // ~F counts as a single connective, matching how it is written.
        if (is_negation()) {
            return 1 + lhs().node_count();
        }
        return 1 + lhs().node_count() + rhs().node_count();
    case Kind::And:
    case Kind::Or: return 1 + lhs().node_count() + rhs().node_count();
    case Kind::Forall:
    case Kind::Exists: return 1 + body().node_count();
    }
    return 1;
}

bool Formula::identical(const Formula& other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (kind() != other.kind()) {
        return false;
    }
    switch (kind()) {
    case Kind::Bottom: return true;
    case Kind::Atom: return name() == other.name() && argument() == other.argument();
    case Kind::Implies:
    case Kind::And:
    case Kind::Or: return lhs().identical(other.lhs()) && rhs().identical(other.rhs());
    case Kind::Forall:
    case Kind::Exists: return name() == other.name() && body().identical(other.body());
    }
    return false;
}

namespace {

// Position of the innermost binder of `v`, counted from the top of the
// stack; -1 when free.
int binder_depth(const std::vector<std::string>& stack, const std::string& v) {
    for (int k = static_cast<int>(stack.size()) - 1; k >= 0; --k) {
        if (stack[static_cast<std::size_t>(k)] == v) {
            return static_cast<int>(stack.size()) - 1 - k;
        }
    }
    return -1;
}

bool terms_alpha_equal(const Term& a, const std::vector<std::string>& sa, const Term& b,
                       const std::vector<std::string>& sb) {
    if (a.kind() != b.kind()) {
        return false;
    }
    if (a.is_constant()) {
        return a.index() == b.index();
    }
    const int da = binder_depth(sa, a.name());
    const int db = binder_depth(sb, b.name());
    if (da != db) {
        return false;
    }
    return da >= 0 || a.name() == b.name();
}

bool alpha_rec(const Formula& f, std::vector<std::string>& sf, const Formula& g, std::vector<std::string>& sg) {
    if (f.kind() != g.kind()) {
        return false;
    }
    switch (f.kind()) {
    case Formula::Kind::Bottom: return true;
    case Formula::Kind::Atom:
        if (f.name() != g.name() || f.argument().has_value() != g.argument().has_value()) {
            return false;
        }
        return !f.argument() || terms_alpha_equal(*f.argument(), sf, *g.argument(), sg);
    case Formula::Kind::Implies:
    case Formula::Kind::And:
    case Formula::Kind::Or: return alpha_rec(f.lhs(), sf, g.lhs(), sg) && alpha_rec(f.rhs(), sf, g.rhs(), sg);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        sf.push_back(f.name());
        sg.push_back(g.name());
        const bool eq = alpha_rec(f.body(), sf, g.body(), sg);
        sf.pop_back();
        sg.pop_back();
        return eq;
    }
    }
    return false;
}

} // namespace

bool alpha_equal(const Formula& f, const Formula& g) {
    std::vector<std::string> sf;
    std::vector<std::string> sg;
    return alpha_rec(f, sf, g, sg);
}

std::string fresh_variable(const std::string& base, const std::set<std::string>& avoid) {
    std::string candidate = base;
    while (avoid.contains(candidate)) {
        candidate += '\'';
    }
    return candidate;
}

Formula substitute(const Formula& f, std::string_view var, const Term& t) {
    switch (f.kind()) {
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Atom:
        if (f.argument() && f.argument()->is_variable() && f.argument()->name() == var) {
            return Formula::atom(f.name(), t);
        }
        return f;
    case Formula::Kind::Implies:
        return Formula::implies(substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
    case Formula::Kind::And: return Formula::conj(substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
    case Formula::Kind::Or: return Formula::disj(substitute(f.lhs(), var, t), substitute(f.rhs(), var, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
        const std::string& bound = f.name();
        if (bound == var || !f.body().has_free(var)) {
            return f;
        }
        std::string binder = bound;
        Formula body = f.body();
        if (t.is_variable() && t.name() == bound) {
            auto avoid = body.all_variables();
            avoid.insert(t.name());
            avoid.insert(std::string(var));
            binder = fresh_variable(bound, avoid);
            body = substitute(body, bound, Term::variable(binder));
        }
        body = substitute(body, var, t);
        return f.is(Formula::Kind::Forall) ? Formula::forall(binder, body) : Formula::exists(binder, body);
    }
    }
    throw std::logic_error("substitute: unknown formula kind");
}

} // namespace minlog
