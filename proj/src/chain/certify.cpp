// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/chain/certify.hpp"

#include <random>

#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

bool CertifyReport::ok() const {
    return !claims.empty() && std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.holds; });
}

std::string CertifyReport::to_text() const {
    std::string out;
    std::size_t good = 0;
    for (const auto& c : claims) {
        out += std::string(c.holds ? "CERTIFIED " : "FAILED    ") + c.id + ": " + c.text + "\n";
        if (!c.detail.empty()) {
            out += "    " + c.detail + "\n";
        }
        good += c.holds ? 1 : 0;
    }
    for (const auto& n : notes) {
        out += "note: " + n + "\n";
    }
    out += family + ": " + std::to_string(good) + "/" + std::to_string(claims.size()) + " claims certified\n";
    return out;
}

const std::vector<std::string>& certified_family_ids() {
    static const std::vector<std::string> ids = {"ascending",  "descending",    "ascending-all-bot",
                                                 "descending-all-bot", "nonfull-s5", "nonfull-s8-tt"};
    return ids;
}

Formula scheme_instance(const std::string& scheme, const std::vector<std::pair<std::string, Formula>>& args) {
    SchemeInstance inst{scheme, {}};
    const Scheme& s = get_scheme(scheme);
    for (const auto& [name, f] : args) {
        bool unary = false;
        for (const auto& p : s.placeholders) {
            unary = unary || (p.name == name && p.arity == 1);
        }
        inst.arguments.insert_or_assign(name, SchemeArgument{f, unary ? std::optional<std::string>("x") : std::nullopt});
    }
    return instantiate_scheme(inst);
}

namespace {

const Formula& px() {
    static const Formula f = parse_formula("P(x)");
    return f;
}

class Certifier {
  public:
    explicit Certifier(const ChainFamily& fam) : fam_(fam), sp_(fam.space()) { rep_.family = fam.id; }

    void everywhere(const std::string& id, const std::string& what, const Formula& f) {
        const ZoneSet miss = force_set(fam_, f).complement(sp_);
        add(id, what + " holds at every world", miss.empty(),
            miss.empty() ? "" : "not forced at " + miss.to_string(fam_.prefix_names()));
    }

    void at(const std::string& id, const std::string& what, const std::string& world, const Formula& f, bool expect) {
        const auto pt = fam_.world_point(world);
        if (!pt) {
            throw FamilyError("no world " + world + " in " + fam_.id);
        }
        const bool forced = family_forces(fam_, pt->first, pt->second, f);
        add(id, what + (expect ? " holds at " : " fails at ") + world, forced == expect,
            std::string(forced ? "forced" : "not forced") + ": " + to_string(f));
    }

    void add(const std::string& id, const std::string& text, bool holds, std::string detail = "") {
        rep_.claims.push_back({id, text, holds, std::move(detail)});
    }

    void per_class(const std::string& id, const std::string& scheme, const std::vector<Formula>& seeds) {
        const ClosureResult cl = predicate_closure(fam_, seeds);
        std::string bad;
        for (const auto& c : cl.classes) {
            const Formula inst = scheme_instance(scheme, {{"P", c.representative}});
            if (!force_set(fam_, inst).complement(sp_).empty()) {
                bad += (bad.empty() ? "" : ", ") + to_string(c.representative);
            }
        }
        std::string seed_text;
        for (const auto& s : seeds) {
            seed_text += (seed_text.empty() ? "" : ", ") + to_string(s);
        }
        add(id, scheme + " holds everywhere for each of the " + std::to_string(cl.classes.size()) +
                    " classes definable from " + seed_text,
            bad.empty(), bad.empty() ? "" : "fails for " + bad);
    }

    void sampled(const std::string& id, const std::string& scheme) {
        const SampleReport s = random_expressible_valuations(fam_, 1, 200);
        add(id, scheme + " holds everywhere for " + std::to_string(s.samples) + " sampled zone-expressible predicates",
            s.ok(), s.ok() ? "" : s.failures.front());
    }

    void cd_claims(const std::vector<Formula>& seeds) {
        const ClosureResult cl = predicate_closure(fam_, seeds);
        std::string bad;
        std::size_t pairs = 0;
        for (const auto& a : cl.classes) {
            for (const auto& b : cl.classes) {
                if (!b.representative.is_closed()) {
                    continue;
                }
                ++pairs;
                const Formula inst = scheme_instance("CD", {{"P", a.representative}, {"Q", b.representative}});
                if (!force_set(fam_, inst).complement(sp_).empty()) {
                    bad += (bad.empty() ? "" : ", ") + to_string(inst);
                }
            }
        }
        add("cd-classes", "CD holds everywhere for each of the " + std::to_string(pairs) + " pairs of definable classes",
            bad.empty(), bad.empty() ? "" : "fails for " + bad);
        const SampleReport s = random_cd_valuations(fam_, 1, 200);
        add("cd-sampled", "CD holds everywhere for " + std::to_string(s.samples) + " sampled zone-expressible pairs",
            s.ok(), s.ok() ? "" : s.failures.front());
    }

    void lem_instances() {
        add("bottom-everywhere", "false is forced at every world", force_set(fam_, Formula::bottom()).complement(sp_).empty());
        for (const char* a : {"P(0)", "forall x. P(x)", "exists x. P(x)", "exists y. (P(y) -> forall x. P(x))",
                              "exists y. ((exists x. P(x)) -> P(y))"}) {
            everywhere("lem", std::string("LEM instance for ") + a, scheme_instance("LEM", {{"A", parse_formula(a)}}));
        }
        everywhere("lem-pointwise", "forall x. (P(x) | ~P(x))", parse_formula("forall x. (P(x) | ~P(x))"));
    }

    CertifyReport take() { return std::move(rep_); }

  private:
    const ChainFamily& fam_;
    Space sp_;
    CertifyReport rep_;
};

} // namespace

CertifyReport certify_family(const ChainFamily& fam) {
    Certifier c(fam);
    const std::string& id = fam.id;
    const Formula dp = scheme_instance("DP", {{"P", px()}});
    const Formula he = scheme_instance("HE", {{"P", px()}});
    if (id == "ascending" || id == "ascending-all-bot") {
        c.at("dp-fails", "DP instance for P", "A_0", dp, false);
        c.everywhere("he-holds", "HE instance for P", he);
        if (id == "ascending") {
            c.at("dnsu-fails", "DNSU instance for P", "A_0", scheme_instance("DNSU", {{"P", px()}}), false);
            c.at("dnn-holds", "forall x. ~~P(x)", "A_0", parse_formula("forall x. ~~P(x)"), true);
            c.add("no-forall", "no world forces forall x. P(x)", force_set(fam, parse_formula("forall x. P(x)")).empty());
        } else {
            c.lem_instances();
        }
        c.per_class("he-classes", "HE", {px()});
        c.sampled("he-sampled", "HE");
        c.cd_claims({px()});
    } else if (id == "descending" || id == "descending-all-bot") {
        c.at("he-fails", "HE instance for P", "L", he, false);
        c.everywhere("dp-holds", "DP instance for P", dp);
        // The greatest world missing some P(t), and that t.
        const ZoneSet p = force_set(fam, px());
        std::optional<std::int64_t> t0;
        for (std::int64_t i = 0; i < 64 && !t0; ++i) {
            for (std::int64_t t = 0; t < 64 && !t0; ++t) {
                if (!p.contains(Zone::kChain, i, t)) {
                    t0 = t;
                }
            }
        }
        if (t0) {
            c.everywhere("dp-witness", "P(" + std::to_string(*t0) + ") -> forall x. P(x)",
                         parse_formula("P(" + std::to_string(*t0) + ") -> forall x. P(x)"));
        } else {
            c.add("dp-witness", "some chain world misses some P(t)", false);
        }
        if (id == "descending-all-bot") {
            c.lem_instances();
        }
        c.sampled("dp-sampled", "DP");
    } else if (id == "nonfull-s5" || id == "nonfull-s8-tt") {
        const Formula cd = scheme_instance("CD", {{"P", px()}, {"Q", parse_formula("Q(0)")}});
        c.at("cd-fails", "CD instance (P := P(x), Q := Q(0))", "A", cd, false);
        c.per_class("he-classes", "HE", {px(), parse_formula("Q(x)")});
        if (id == "nonfull-s8-tt") {
            c.everywhere("tt-d", "D(0) & ~D(1) & forall x. (D(x) | ~D(x))",
                         parse_formula("D(0) & ~D(1) & (forall x. (D(x) | ~D(x)))"));
            bool two = true;
            for (std::size_t w = 0; w < fam.prefix.size(); ++w) {
                two = two && (fam.limit.contains(w) || (fam.prefix.in_domain(w, 0) && fam.prefix.in_domain(w, 1)));
            }
            c.add("tt-terms", "every world has 0 and 1 in its domain", two);
        }
    } else {
        throw FamilyError("no claim list for family '" + id + "'");
    }
    CertifyReport r = c.take();
    if (fam.has_chain()) {
        r.notes.push_back("schemes over all monotone predicates of an infinite model are certified only for the "
                          "definable classes and the sampled predicates");
    }
    return r;
}

CertifyReport certify_family(const std::string& id, const std::filesystem::path& families_dir) {
    const auto& ids = certified_family_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw FamilyError("no claim list for family '" + id + "'");
    }
    return certify_family(load_family_file(families_dir / (id + ".fam")));
}

namespace {

// A random monotone unary rule for the chain direction.
std::string random_rule(std::mt19937_64& rng, bool asc) {
    auto num = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto constraint = [&]() -> std::string {
        switch (num(0, 4)) {
        case 0:
            return std::string(asc ? "i >= " : "i <= ") + std::to_string(num(0, 6));
        case 1:
            return std::string(asc ? "t - i <= " : "t - i >= ") + std::to_string(num(-3, 3));
        case 2:
            return "t <= " + std::to_string(num(0, 6));
        case 3:
            return "t >= " + std::to_string(num(0, 6));
        default:
            return "t = " + std::to_string(num(0, 6));
        }
    };
    const int roll = num(0, 19);
    if (roll == 0) {
        return "none";
    }
    if (roll == 1) {
        return "all";
    }
    std::string text;
    for (int d = num(1, 3); d > 0; --d) {
        std::string conj = constraint();
        for (int c = num(0, 1); c > 0; --c) {
            conj += ", " + constraint();
        }
        text += (text.empty() ? "" : " | ") + conj;
    }
    return text;
}

// A random monotone proposition on the chain.
std::string random_proposition(std::mt19937_64& rng, bool asc) {
    const int a = std::uniform_int_distribution<int>(-1, 6)(rng);
    if (a < 0) {
        return "none";
    }
    return std::string(asc ? "i >= " : "i <= ") + std::to_string(a);
}

} // namespace

SampleReport random_expressible_valuations(const ChainFamily& fam, std::uint64_t seed, std::size_t n) {
    if (!fam.has_chain()) {
        throw FamilyError("family " + fam.id + " has no chain");
    }
    const bool asc = fam.shape == ChainShape::Ascending;
    std::mt19937_64 rng(seed);
    SampleReport rep;
    const Space sp = fam.space();
    const Formula target =
        scheme_instance(asc ? "HE" : "DP", {{"P", parse_formula("R(x)")}});
    for (std::size_t k = 0; k < n; ++k) {
        const std::string text = random_rule(rng, asc);
        ChainFamily f = fam;
        f.rules["R"] = ZoneSet::parse(text, sp);
        f.arity["R"] = 1;
        ++rep.samples;
        if (!f.is_upward_closed(f.atom_set("R", true))) {
            rep.failures.push_back("sample R: " + text + " is not monotone");
            continue;
        }
        const ZoneSet miss = force_set(f, target).complement(sp);
        if (!miss.empty()) {
            rep.failures.push_back("R: " + text + " refutes " + to_string(target) + " at " +
                                   miss.to_string(f.prefix_names()));
        }
    }
    return rep;
}

SampleReport random_cd_valuations(const ChainFamily& fam, std::uint64_t seed, std::size_t n) {
    if (!fam.has_chain()) {
        throw FamilyError("family " + fam.id + " has no chain");
    }
    const bool asc = fam.shape == ChainShape::Ascending;
    std::mt19937_64 rng(seed);
    SampleReport rep;
    const Space sp = fam.space();
    const Formula target = scheme_instance("CD", {{"P", parse_formula("R(x)")}, {"Q", parse_formula("S")}});
    for (std::size_t k = 0; k < n; ++k) {
        const std::string r = random_rule(rng, asc);
        const std::string q = random_proposition(rng, asc);
        ChainFamily f = fam;
        f.rules["R"] = ZoneSet::parse(r, sp);
        f.arity["R"] = 1;
        f.rules["S"] = ZoneSet::parse(q, sp);
        f.arity["S"] = 0;
        ++rep.samples;
        const ZoneSet miss = force_set(f, target).complement(sp);
        if (!miss.empty()) {
            rep.failures.push_back("R: " + r + ", S: " + q + " refutes CD at " + miss.to_string(f.prefix_names()));
        }
    }
    return rep;
}

} // namespace minlog
