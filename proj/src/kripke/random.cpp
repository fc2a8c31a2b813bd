// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kripke/random.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace minlog {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

WorldSet random_upset(std::mt19937_64& rng, const KripkeModel& m, WorldSet within, double p) {
    WorldSet s = 0;
    for (std::size_t w = 0; w < m.size(); ++w) {
        if ((within & world_bit(w)) != 0 && coin(rng, p)) {
            s |= world_bit(w);
        }
    }
    return m.up_closure(s) & within;
}

} // namespace

KripkeModel random_model(std::mt19937_64& rng, ModelShape shape, const ModelBounds& bounds) {
    KripkeModel m;
    const std::size_t lo = shape == ModelShape::Branched ? 3 : 1;
    const std::size_t n = pick(rng, lo, std::max(lo, bounds.max_worlds));
    for (std::size_t i = 0; i < n; ++i) {
        m.worlds.push_back("W" + std::to_string(i));
    }
    // Parents always have smaller indices, so world 0 is the root.
    std::vector<std::vector<std::size_t>> parents(n);
    for (std::size_t i = 1; i < n; ++i) {
        if (shape == ModelShape::Linear) {
            parents[i] = {i - 1};
        } else if (shape == ModelShape::Branched && i <= 2) {
            parents[i] = {0};
        } else {
            std::set<std::size_t> ps{pick(rng, 0, i - 1)};
            if (i > 1 && coin(rng, 0.3)) {
                ps.insert(pick(rng, 0, i - 1));
            }
            parents[i].assign(ps.begin(), ps.end());
        }
        for (auto p : parents[i]) {
            m.covers.emplace_back(p, i);
        }
    }
    m.close_order();

    const std::uint32_t max_terms = std::max<std::uint32_t>(1, bounds.max_terms);
    m.domain.assign(n, {});
    std::uint32_t root_terms = 1;
    switch (shape) {
    case ModelShape::Branched:
        root_terms = static_cast<std::uint32_t>(pick(rng, std::min<std::uint32_t>(2, max_terms), max_terms));
        break;
    case ModelShape::Linear:
    case ModelShape::Any:
        root_terms = static_cast<std::uint32_t>(pick(rng, 1, max_terms));
        break;
    case ModelShape::SingleTerm:
        root_terms = 1;
        break;
    }
    for (std::uint32_t c = 0; c < root_terms; ++c) {
        m.domain[0].push_back(c);
    }
    for (std::size_t i = 1; i < n; ++i) {
        std::set<std::uint32_t> d;
        for (auto p : parents[i]) {
            d.insert(m.domain[p].begin(), m.domain[p].end());
        }
        if (shape == ModelShape::Any || shape == ModelShape::Branched) {
            for (std::uint32_t c = 0; c < max_terms; ++c) {
                if (coin(rng, 0.3)) {
                    d.insert(c);
                }
            }
        }
        m.domain[i].assign(d.begin(), d.end());
    }

    m.bottom = coin(rng, 0.3) ? random_upset(rng, m, m.all(), 0.3) : 0;
    for (std::uint32_t c = 0; c < max_terms; ++c) {
        if (const WorldSet s = random_upset(rng, m, m.holders(c), 0.4); s != 0) {
            m.atoms[GroundAtom{"P", c}] = s;
        }
    }
    if (const WorldSet s = random_upset(rng, m, m.all(), 0.4); s != 0) {
        m.atoms[GroundAtom{"A", std::nullopt}] = s;
    }
    return m;
}

Formula random_formula(std::mt19937_64& rng, int depth, std::uint32_t terms, bool innermost_only) {
    std::vector<std::string> bound;
    std::function<Formula(int)> gen = [&](int d) -> Formula {
        if (d <= 0 || coin(rng, 0.2)) {
            switch (pick(rng, 0, 4)) {
            case 0:
                return Formula::bottom();
            case 1:
                return Formula::atom(coin(rng, 0.5) ? "A" : "B");
            default: {
                const std::string pred = coin(rng, 0.6) ? "P" : "Q";
                if (!bound.empty() && coin(rng, 0.7)) {
                    return Formula::atom(pred, Term::variable(innermost_only ? bound.back() : bound[pick(rng, 0, bound.size() - 1)]));
                }
                return Formula::atom(pred, Term::constant(static_cast<std::uint32_t>(pick(rng, 0, terms - 1))));
            }
            }
        }
        switch (pick(rng, 0, 5)) {
        case 0:
            return Formula::implies(gen(d - 1), gen(d - 1));
        case 1:
            return Formula::conj(gen(d - 1), gen(d - 1));
        case 2:
            return Formula::disj(gen(d - 1), gen(d - 1));
        case 3:
            return Formula::negation(gen(d - 1));
        default: {
            const std::string x = "x" + std::to_string(bound.size());
            bound.push_back(x);
            Formula body = gen(d - 1);
            bound.pop_back();
            return coin(rng, 0.5) ? Formula::forall(x, body) : Formula::exists(x, body);
        }
        }
    };
    return gen(depth);
}

bool PropertyReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const PropertyRow& r) { return r.counterexamples.empty(); });
}

std::string PropertyReport::to_text() const {
    std::string out;
    for (const auto& r : rows) {
        out += r.name + ": " + std::to_string(r.models) + " models, " + std::to_string(r.counterexamples.size()) +
               " counterexamples\n";
        for (const auto& c : r.counterexamples) {
            out += "  " + c + "\n";
        }
    }
    return out;
}

PropertyReport characterization_property_tests(std::uint64_t seed, std::size_t per_row, const ModelBounds& bounds) {
    std::mt19937_64 rng(seed);
    PropertyReport rep;
    struct RowSpec {
        const char* name;
        ModelShape shape;
        bool expect_hold;
    };
    const RowSpec specs[] = {
        {"branched, at least two terms: DP and HE fail", ModelShape::Branched, false},
        {"linear, constant domain: DP and HE hold", ModelShape::Linear, true},
        {"single term: DP and HE hold", ModelShape::SingleTerm, true},
    };
    for (const auto& spec : specs) {
        PropertyRow row;
        row.name = spec.name;
        for (std::size_t i = 0; i < per_row; ++i) {
            KripkeModel m = random_model(rng, spec.shape, bounds);
            ++row.models;
            for (const char* id : {"DP", "HE"}) {
                FullVerdict v = scheme_holds_full(m, id);
                std::string problem;
                if (v.holds != spec.expect_hold) {
                    problem = std::string(id) + (v.holds ? " holds" : " fails");
                } else if (v.witness && !witness_refutes(m, get_scheme(id).tmpl, *v.witness)) {
                    problem = std::string(id) + " witness does not re-check";
                }
                if (!problem.empty()) {
                    row.counterexamples.push_back(problem + " in model\n" + write_model(m));
                }
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace minlog
