// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kripke/forcing.hpp"

#include <vector>

namespace minlog {

std::string describe_valuation(const KripkeModel& m, const Valuation& v) {
    std::string out;
    for (const auto& [name, pv] : v) {
        if (!out.empty()) {
            out += "; ";
        }
        if (pv.arity == 0) {
            out += name + " at {" + m.world_list(pv.prop) + "}";
            continue;
        }
        std::string parts;
        for (const auto& [c, s] : pv.ext) {
            if (s != 0) {
                parts += (parts.empty() ? "" : ", ") + name + "(" + m.term_name(c) + ") at {" + m.world_list(s) + "}";
            }
        }
        out += parts.empty() ? name + " nowhere" : parts;
    }
    return out;
}

namespace {

class Evaluator {
  public:
    Evaluator(const KripkeModel& m, const Valuation& val) : m_(m), val_(val), terms_(m.terms()) {
        for (auto c : terms_) {
            holders_[c] = m.holders(c);
        }
    }

    WorldSet eval(const Formula& f, std::map<std::string, std::uint32_t>& env) {
        switch (f.kind()) {
        case Formula::Kind::Bottom:
            return m_.bottom;
        case Formula::Kind::Atom:
            return atom(f, env);
        case Formula::Kind::Implies: {
            const WorldSet a = eval(f.lhs(), env);
            const WorldSet b = eval(f.rhs(), env);
            const WorldSet bad = a & ~b;
            WorldSet out = 0;
            for (std::size_t w = 0; w < m_.size(); ++w) {
                if ((m_.above[w] & bad) == 0) {
                    out |= world_bit(w);
                }
            }
            return out;
        }
        case Formula::Kind::And:
            return eval(f.lhs(), env) & eval(f.rhs(), env);
        case Formula::Kind::Or:
            return eval(f.lhs(), env) | eval(f.rhs(), env);
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            return quantifier(f, env);
        }
        return 0;
    }

  private:
    WorldSet holders(std::uint32_t c) const {
        auto it = holders_.find(c);
        return it == holders_.end() ? 0 : it->second;
    }

    WorldSet atom(const Formula& f, const std::map<std::string, std::uint32_t>& env) const {
        std::optional<std::uint32_t> arg;
        if (const auto& t = f.argument()) {
            if (t->is_variable()) {
                auto it = env.find(t->name());
                if (it == env.end()) {
                    throw ForcingError("free variable " + t->name() + " in evaluated formula");
                }
                arg = it->second;
            } else {
                arg = t->index();
            }
        }
        if (auto it = val_.find(f.name()); it != val_.end()) {
            const PredicateValue& pv = it->second;
            if ((pv.arity == 1) != arg.has_value()) {
                throw ForcingError("symbol " + f.name() + " used with the wrong arity");
            }
            if (!arg) {
                return pv.prop;
            }
            auto e = pv.ext.find(*arg);
            return e == pv.ext.end() ? 0 : e->second & holders(*arg);
        }
        auto it = m_.atoms.find(GroundAtom{f.name(), arg});
        return it == m_.atoms.end() ? 0 : it->second;
    }

    WorldSet quantifier(const Formula& f, std::map<std::string, std::uint32_t>& env) {
        const std::string& x = f.name();
        auto saved = env.find(x) == env.end() ? std::nullopt : std::optional<std::uint32_t>(env[x]);
        std::vector<WorldSet> inst(terms_.size());
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            env[x] = terms_[i];
            inst[i] = eval(f.body(), env);
        }
        if (saved) {
            env[x] = *saved;
        } else {
            env.erase(x);
        }
        WorldSet out = 0;
        if (f.is(Formula::Kind::Exists)) {
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                out |= inst[i] & holders(terms_[i]);
            }
            return out;
        }
        // good: worlds where every local element satisfies the body.
        WorldSet good = m_.all();
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            good &= ~holders(terms_[i]) | inst[i];
        }
        for (std::size_t w = 0; w < m_.size(); ++w) {
            if ((m_.above[w] & ~good) == 0) {
                out |= world_bit(w);
            }
        }
        return out;
    }

    const KripkeModel& m_;
    const Valuation& val_;
    std::vector<std::uint32_t> terms_;
    std::map<std::uint32_t, WorldSet> holders_;
};

} // namespace

WorldSet forcing_set(const KripkeModel& m, const Formula& f, const Valuation& val) {
    std::map<std::string, std::uint32_t> env;
    return Evaluator(m, val).eval(f, env);
}

bool forces(const KripkeModel& m, std::size_t w, const Formula& f, const Valuation& val) {
    if (w >= m.size()) {
        throw ForcingError("no world with index " + std::to_string(w));
    }
    if (!f.is_closed()) {
        throw ForcingError("formula is not closed");
    }
    for (auto c : f.constants()) {
        if (!m.in_domain(w, c)) {
            throw ForcingError("constant " + m.term_name(c) + " is not in the domain of " + m.worlds[w]);
        }
    }
    return (forcing_set(m, f, val) & world_bit(w)) != 0;
}

} // namespace minlog
