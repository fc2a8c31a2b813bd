// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/chain/oracle.hpp"

#include <functional>
#include <random>

#include "minlog/chain/family.hpp"
#include "minlog/kripke/forcing.hpp"
#include "minlog/kripke/full.hpp"
#include "minlog/kripke/random.hpp"
#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

std::string OracleReport::to_text() const {
    std::string out;
    for (const auto& m : mismatches) {
        out += "MISMATCH " + m + "\n";
    }
    out += name + ": " + std::to_string(cases) + " cases, " + std::to_string(checks) + " checks, " +
           std::to_string(mismatches.size()) + " mismatches";
    if (skipped > 0) {
        out += ", " + std::to_string(skipped) + " skipped";
    }
    return out + "\n";
}

namespace {

constexpr std::int64_t kReach = 40;

struct Constraint {
    int expr = 0; // 0: i, 1: t, 2: t - i
    int op = 0;   // 0: <=, 1: >=, 2: =
    std::int64_t c = 0;

    [[nodiscard]] bool holds(std::int64_t i, std::int64_t t) const {
        const std::int64_t v = expr == 0 ? i : expr == 1 ? t : t - i;
        return op == 0 ? v <= c : op == 1 ? v >= c : v == c;
    }
    [[nodiscard]] std::string text() const {
        static const char* exprs[] = {"i", "t", "t - i"};
        static const char* ops[] = {"<=", ">=", "="};
        return std::string(exprs[expr]) + " " + ops[op] + " " + std::to_string(c);
    }
};

using Dnf = std::vector<std::vector<Constraint>>;

Dnf random_dnf(std::mt19937_64& rng) {
    auto num = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    Dnf d(static_cast<std::size_t>(num(0, 3)));
    for (auto& conj : d) {
        conj.resize(static_cast<std::size_t>(num(1, 3)));
        for (auto& c : conj) {
            c.expr = num(0, 2);
            c.op = num(0, 5) == 0 ? 2 : num(0, 1);
            c.c = c.expr == 2 ? num(-4, 4) : num(0, 8);
        }
    }
    return d;
}

std::string dnf_text(const Dnf& d) {
    if (d.empty()) {
        return "none";
    }
    std::string out;
    for (const auto& conj : d) {
        out += out.empty() ? "" : " | ";
        for (std::size_t k = 0; k < conj.size(); ++k) {
            out += (k == 0 ? "" : ", ") + conj[k].text();
        }
    }
    return out;
}

bool dnf_holds(const Dnf& d, std::int64_t i, std::int64_t t) {
    for (const auto& conj : d) {
        if (std::all_of(conj.begin(), conj.end(), [&](const Constraint& c) { return c.holds(i, t); })) {
            return true;
        }
    }
    return false;
}

using Pred = std::function<bool(std::int64_t, std::int64_t)>;

bool exists_upto(std::int64_t lo, std::int64_t hi, const std::function<bool(std::int64_t)>& p) {
    for (std::int64_t v = lo; v <= hi; ++v) {
        if (p(v)) {
            return true;
        }
    }
    return false;
}

} // namespace

OracleReport zone_grid_oracle(std::uint64_t seed, std::size_t cases, std::int64_t bound) {
    OracleReport rep;
    rep.name = "zone grid oracle";
    std::mt19937_64 rng(seed);
    const Space chain{true, 0};
    const Space withp{true, 1};
    for (std::size_t k = 0; k < cases; ++k) {
        const Dnf da = random_dnf(rng);
        const Dnf db = random_dnf(rng);
        const ZoneSet a = ZoneSet::parse(dnf_text(da), chain);
        const ZoneSet b = ZoneSet::parse(dnf_text(db), chain);
        const Pred A = [&](std::int64_t i, std::int64_t t) { return dnf_holds(da, i, t); };
        const Pred B = [&](std::int64_t i, std::int64_t t) { return dnf_holds(db, i, t); };
        ++rep.cases;

        auto check = [&](const std::string& op, const ZoneSet& got, const Pred& want) {
            for (std::int64_t i = 0; i <= bound; ++i) {
                for (std::int64_t t = 0; t <= bound; ++t) {
                    ++rep.checks;
                    if (got.contains(Zone::kChain, i, t) != want(i, t)) {
                        rep.mismatches.push_back(op + " at (i=" + std::to_string(i) + ", t=" + std::to_string(t) +
                                                 ") for a = {" + dnf_text(da) + "}, b = {" + dnf_text(db) + "}");
                        return;
                    }
                }
            }
        };
        auto check_prefix = [&](const std::string& op, const ZoneSet& got, const std::function<bool(std::int64_t)>& want) {
            for (std::int64_t t = 0; t <= bound; ++t) {
                ++rep.checks;
                if (got.contains(0, 0, t) != want(t)) {
                    rep.mismatches.push_back(op + " at t=" + std::to_string(t) + " for a = {" + dnf_text(da) + "}");
                    return;
                }
            }
        };

        check("parse", a, A);
        check("and", a.intersect(b), [&](auto i, auto t) { return A(i, t) && B(i, t); });
        check("or", a.unite(b), [&](auto i, auto t) { return A(i, t) || B(i, t); });
        check("not", a.complement(chain), [&](auto i, auto t) { return !A(i, t); });
        check("minus", a.minus(b, chain), [&](auto i, auto t) { return A(i, t) && !B(i, t); });
        check("exists t", a.exists_t(),
              [&](auto i, auto) { return exists_upto(0, kReach, [&](auto u) { return A(i, u); }); });
        check("forall t", a.complement(chain).exists_t().complement(chain),
              [&](auto i, auto) { return !exists_upto(0, kReach, [&](auto u) { return !A(i, u); }); });
        check("exists j >= i", a.chain_future(true),
              [&](auto i, auto t) { return exists_upto(i, kReach, [&](auto j) { return A(j, t); }); });
        check("exists j <= i", a.chain_future(false),
              [&](auto i, auto t) { return exists_upto(0, i, [&](auto j) { return A(j, t); }); });
        check("forall j >= i", a.complement(chain).chain_future(true).complement(chain),
              [&](auto i, auto t) { return !exists_upto(i, kReach, [&](auto j) { return !A(j, t); }); });
        check("forall j <= i", a.complement(chain).chain_future(false).complement(chain),
              [&](auto i, auto t) { return !exists_upto(0, i, [&](auto j) { return !A(j, t); }); });
        const auto c = static_cast<std::int64_t>(k % 7);
        check("at term " + std::to_string(c), a.at_term(c), [&](auto i, auto) { return A(i, c); });
        check_prefix("exists i", a.chain_any_to(0),
                     [&](auto t) { return exists_upto(0, kReach, [&](auto i) { return A(i, t); }); });
        check_prefix("forall i", a.chain_forall_to(0, withp),
                     [&](auto t) { return !exists_upto(0, kReach, [&](auto i) { return !A(i, t); }); });

        bool same = true;
        for (std::int64_t i = 0; i <= kReach && same; ++i) {
            for (std::int64_t t = 0; t <= kReach && same; ++t) {
                same = A(i, t) == B(i, t);
            }
        }
        ++rep.checks;
        if (a.same_points(b, chain) != same) {
            rep.mismatches.push_back("equality for a = {" + dnf_text(da) + "}, b = {" + dnf_text(db) + "}");
        }
    }
    return rep;
}

namespace {

KripkeModel with_valuation(const KripkeModel& m, const Valuation& val) {
    KripkeModel out = m;
    for (const auto& [name, v] : val) {
        std::erase_if(out.atoms, [&](const auto& e) { return e.first.predicate == name; });
        if (v.arity == 0) {
            out.atoms[{name, std::nullopt}] = v.prop;
        } else {
            for (const auto& [c, ws] : v.ext) {
                out.atoms[{name, c}] = ws;
            }
        }
    }
    return out;
}

void compare(OracleReport& rep, const KripkeModel& m, const Formula& f, const std::string& context) {
    const ChainFamily fam = family_from_model(m);
    const WorldSet finite = forcing_set(m, f);
    const ZoneSet symbolic = force_set(fam, f);
    for (std::size_t w = 0; w < m.size(); ++w) {
        ++rep.checks;
        if (((finite & world_bit(w)) != 0) != symbolic.contains(static_cast<int>(w), 0, 0)) {
            rep.mismatches.push_back(to_string(f) + " at " + m.worlds[w] + " (" + context + ")");
            return;
        }
    }
}

} // namespace

OracleReport degenerate_scheme_agreement(const std::vector<KripkeModel>& models, std::size_t per_scheme) {
    OracleReport rep;
    rep.name = "finite families against the finite evaluator (schemes)";
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        const KripkeModel& m = models[mi];
        for (const auto& s : scheme_catalog()) {
            std::size_t seen = 0;
            FullCheckOptions opts;
            opts.cap = UINT64_MAX;
            for_each_valuation(m, s.placeholders, opts, [&](const Valuation& val) {
                ++rep.cases;
                compare(rep, with_valuation(m, val), s.tmpl,
                        "model " + std::to_string(mi) + ", " + s.id + ", " + describe_valuation(m, val));
                return ++seen < per_scheme;
            });
        }
    }
    return rep;
}

OracleReport degenerate_random_agreement(std::uint64_t seed, std::size_t models, std::size_t per_model) {
    OracleReport rep;
    rep.name = "finite families against the finite evaluator (random formulas)";
    std::mt19937_64 rng(seed);
    const ModelShape shapes[] = {ModelShape::Any, ModelShape::Branched, ModelShape::Linear, ModelShape::SingleTerm};
    for (std::size_t k = 0; k < models; ++k) {
        KripkeModel m = random_model(rng, shapes[k % 4]);
        // Q and B get labels too, so that every symbol is known.
        std::uniform_int_distribution<std::uint64_t> bits;
        const auto ups = upsets_within(m, m.all());
        m.atoms[{"B", std::nullopt}] = ups[bits(rng) % ups.size()];
        m.atoms.try_emplace({"A", std::nullopt}, 0);
        for (auto c : m.terms()) {
            const auto within = upsets_within(m, m.holders(c));
            m.atoms[{"Q", c}] = within[bits(rng) % within.size()];
            m.atoms.try_emplace({"P", c}, 0);
        }
        for (std::size_t j = 0; j < per_model; ++j) {
            const Formula f = random_formula(rng, 4, static_cast<std::uint32_t>(m.terms().size()));
            ++rep.cases;
            compare(rep, m, f, "random model " + std::to_string(k) + "\n" + write_model(m));
        }
    }
    return rep;
}

} // namespace minlog
