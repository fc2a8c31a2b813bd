// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kripke/full.hpp"

#include <limits>

#include "minlog/syntax/parser.hpp"

namespace minlog {

std::vector<WorldSet> upsets_within(const KripkeModel& m, WorldSet within) {
    std::vector<WorldSet> out;
    // Submasks of `within` in ascending order.
    WorldSet s = 0;
    while (true) {
        if (m.is_upset(s)) {
            out.push_back(s);
        }
        if (s == within) {
            break;
        }
        s = (s - within) & within;
    }
    return out;
}

namespace {

struct Slot {
    std::string name;
    std::optional<std::uint32_t> term;
    std::vector<WorldSet> choices;
};

std::vector<Slot> slots_for(const KripkeModel& m, const std::vector<Placeholder>& placeholders) {
    std::vector<Slot> out;
    for (const auto& p : placeholders) {
        if (p.arity == 0) {
            out.push_back({p.name, std::nullopt, upsets_within(m, m.all())});
        } else {
            for (auto c : m.terms()) {
                out.push_back({p.name, c, upsets_within(m, m.holders(c))});
            }
        }
    }
    return out;
}

std::uint64_t product(const std::vector<Slot>& slots) {
    std::uint64_t n = 1;
    for (const auto& s : slots) {
        if (n > std::numeric_limits<std::uint64_t>::max() / s.choices.size()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        n *= s.choices.size();
    }
    return n;
}

// The space grows doubly exponentially; refuse before enumerating subsets of
// large world sets.
void guard_worlds(const KripkeModel& m, const std::vector<Placeholder>& placeholders) {
    if (!placeholders.empty() && m.size() > 24) {
        throw CapExceeded("model has " + std::to_string(m.size()) + " worlds; full checking is limited to 24");
    }
}

} // namespace

std::uint64_t count_valuations(const KripkeModel& m, const std::vector<Placeholder>& placeholders) {
    guard_worlds(m, placeholders);
    return product(slots_for(m, placeholders));
}

void for_each_valuation(const KripkeModel& m, const std::vector<Placeholder>& placeholders,
                        const FullCheckOptions& opts, const std::function<bool(const Valuation&)>& visit) {
    guard_worlds(m, placeholders);
    const std::vector<Slot> slots = slots_for(m, placeholders);
    const std::uint64_t total = product(slots);
    if (total > opts.cap) {
        throw CapExceeded("valuation space " +
                          (total == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                              : std::to_string(total)) +
                          " exceeds the cap " + std::to_string(opts.cap));
    }
    Valuation val;
    for (const auto& p : placeholders) {
        val[p.name].arity = p.arity;
    }
    std::vector<std::size_t> pos(slots.size(), 0);
    auto apply = [&](std::size_t i) {
        const Slot& s = slots[i];
        PredicateValue& pv = val[s.name];
        if (s.term) {
            pv.ext[*s.term] = s.choices[pos[i]];
        } else {
            pv.prop = s.choices[pos[i]];
        }
    };
    for (std::size_t i = 0; i < slots.size(); ++i) {
        apply(i);
    }
    while (true) {
        if (!visit(val)) {
            return;
        }
        // Odometer, last slot fastest.
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++pos[i] < slots[i].choices.size()) {
                apply(i);
                break;
            }
            pos[i] = 0;
            apply(i);
            if (i == 0) {
                return;
            }
        }
        if (slots.empty()) {
            return;
        }
    }
}

std::string Counterexample::describe(const KripkeModel& m) const {
    return "at " + m.worlds[world] + " with " + describe_valuation(m, valuation);
}

FullVerdict formula_holds_full(const KripkeModel& m, const Formula& tmpl, const std::vector<Placeholder>& placeholders,
                               const FullCheckOptions& opts) {
    FullVerdict out;
    const WorldSet all = m.all();
    for_each_valuation(m, placeholders, opts, [&](const Valuation& v) {
        ++out.valuations;
        const WorldSet s = forcing_set(m, tmpl, v);
        if (s == all) {
            return true;
        }
        std::size_t w = 0;
        while ((s & world_bit(w)) != 0) {
            ++w;
        }
        out.holds = false;
        out.witness = Counterexample{v, w};
        return false;
    });
    return out;
}

FullVerdict scheme_holds_full(const KripkeModel& m, const std::string& scheme_id, const FullCheckOptions& opts) {
    const Scheme& s = get_scheme(scheme_id);
    return formula_holds_full(m, s.tmpl, s.placeholders, opts);
}

bool witness_refutes(const KripkeModel& m, const Formula& tmpl, const Counterexample& ce) {
    return ce.world < m.size() && (forcing_set(m, tmpl, ce.valuation) & world_bit(ce.world)) == 0;
}

TTVerdict tt_holds(const KripkeModel& m, const FullCheckOptions& opts) {
    TTVerdict out;
    // A consistent world must be able to tell the two constants apart.
    const WorldSet both = m.holders(0) & m.holders(1);
    if ((m.all() & ~m.bottom & ~both) != 0) {
        return out;
    }
    static const Formula tt = parse_formula("D(0) & ~D(1) & (forall x. (D(x) | ~D(x)))");
    for_each_valuation(m, {Placeholder{"D", 1}}, opts, [&](const Valuation& v) {
        if (forcing_set(m, tt, v) == m.all()) {
            out.holds = true;
            out.labelling = v;
            return false;
        }
        return true;
    });
    return out;
}

bool verdict_for(const KripkeModel& m, const std::string& id, const FullCheckOptions& opts) {
    if (id == kTT) {
        return tt_holds(m, opts).holds;
    }
    return scheme_holds_full(m, id, opts).holds;
}

bool is_v_free(const KripkeModel& m) {
    for (std::size_t w = 0; w < m.size(); ++w) {
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = a + 1; b < m.size(); ++b) {
                if (m.leq(w, a) && m.leq(w, b) && !m.leq(a, b) && !m.leq(b, a)) {
                    return false;
                }
            }
        }
    }
    return true;
}

DerivedReport derived_checks(const KripkeModel& m, const FullCheckOptions& opts) {
    DerivedReport r;
    r.bottom_free = m.bottom == 0;
    r.efq_holds = scheme_holds_full(m, "EFQ", opts).holds;
    for (std::size_t w = 0; w < m.size(); ++w) {
        if ((m.bottom & world_bit(w)) == 0) {
            ++r.consistent_worlds;
        }
    }
    r.lem_holds = scheme_holds_full(m, "LEM", opts).holds;
    r.v_free = is_v_free(m);
    r.dgp_holds = scheme_holds_full(m, "DGP", opts).holds;
    r.wlem_holds = scheme_holds_full(m, "WLEM", opts).holds;
    return r;
}

std::string DerivedReport::to_text() const {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string out;
    out += std::string("false forced nowhere: ") + yn(bottom_free) + ", EFQ holds: " + yn(efq_holds) +
           (efq_agrees() ? "" : "  MISMATCH") + "\n";
    out += "worlds not forcing false: " + std::to_string(consistent_worlds) + ", LEM holds: " + yn(lem_holds) +
           (lem_agrees() ? "" : "  MISMATCH") + "\n";
    out += std::string("v-free: ") + yn(v_free) + ", DGP holds: " + yn(dgp_holds) + ", WLEM holds: " + yn(wlem_holds) +
           (v_free_agrees() ? "" : "  MISMATCH") + "\n";
    return out;
}

} // namespace minlog
