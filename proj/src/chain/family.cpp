// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/chain/family.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "minlog/syntax/printer.hpp"

namespace minlog {

std::string_view shape_name(ChainShape s) {
    switch (s) {
    case ChainShape::Ascending:
        return "ascending";
    case ChainShape::Descending:
        return "descending";
    case ChainShape::None:
        break;
    }
    return "none";
}

std::set<std::string> ChainFamily::symbols() const {
    std::set<std::string> out;
    for (const auto& [name, r] : rules) {
        out.insert(name);
    }
    for (const auto& [a, ws] : prefix.atoms) {
        out.insert(a.predicate);
    }
    return out;
}

void ChainFamily::infer_arities() {
    for (const auto& [a, ws] : prefix.atoms) {
        arity.try_emplace(a.predicate, a.argument ? 1 : 0);
    }
    for (const auto& [name, r] : rules) {
        arity.try_emplace(name, 0);
    }
}

ZoneSet ChainFamily::domain_set() const {
    const Space sp = space();
    ZoneSet out;
    if (has_chain()) {
        out = ZoneSet::of(sp.universe(Zone::kChain));
    }
    for (std::size_t w = 0; w < prefix.size(); ++w) {
        const int where = static_cast<int>(w);
        if (limit.contains(w)) {
            out = out.unite(ZoneSet::of(sp.universe(where)));
            continue;
        }
        for (auto c : prefix.domain[w]) {
            Zone z = sp.universe(where);
            z.dbm.bound(kT, kZero, c);
            z.dbm.bound(kZero, kT, -static_cast<std::int64_t>(c));
            out = out.unite(ZoneSet::of(z));
        }
    }
    return out;
}

ZoneSet ChainFamily::nonempty_set() const {
    const Space sp = space();
    ZoneSet out;
    if (has_chain()) {
        out = ZoneSet::of(sp.universe(Zone::kChain));
    }
    for (std::size_t w = 0; w < prefix.size(); ++w) {
        if (limit.contains(w) || !prefix.domain[w].empty()) {
            out = out.unite(ZoneSet::of(sp.universe(static_cast<int>(w))));
        }
    }
    return out;
}

ZoneSet ChainFamily::atom_set(std::string_view symbol, bool unary) const {
    auto ar = arity.find(symbol);
    if (ar == arity.end()) {
        if (!symbols().contains(std::string(symbol))) {
            throw FamilyError("unknown symbol " + std::string(symbol));
        }
    } else if ((ar->second == 1) != unary) {
        throw FamilyError(std::string(symbol) + (unary ? " is a proposition" : " is a predicate"));
    }
    const Space sp = space();
    ZoneSet out;
    if (auto r = rules.find(symbol); r != rules.end() && has_chain()) {
        out = r->second.restrict_to(Zone::kChain, Zone::kChain);
        if (!unary) {
            out = out.exists_t();
        }
    }
    for (const auto& [a, ws] : prefix.atoms) {
        if (a.predicate != symbol || a.argument.has_value() != unary) {
            continue;
        }
        for (std::size_t w = 0; w < prefix.size(); ++w) {
            if ((ws & world_bit(w)) == 0) {
                continue;
            }
            Zone z = sp.universe(static_cast<int>(w));
            if (unary) {
                z.dbm.bound(kT, kZero, *a.argument);
                z.dbm.bound(kZero, kT, -static_cast<std::int64_t>(*a.argument));
            }
            out = out.unite(ZoneSet::of(z));
        }
    }
    return out;
}

ZoneSet ChainFamily::bottom_set() const {
    const Space sp = space();
    ZoneSet out;
    if (has_chain()) {
        out = chain_bottom.restrict_to(Zone::kChain, Zone::kChain).exists_t();
    }
    for (std::size_t w = 0; w < prefix.size(); ++w) {
        if ((prefix.bottom & world_bit(w)) != 0) {
            out = out.unite(ZoneSet::of(sp.universe(static_cast<int>(w))));
        }
    }
    return out;
}

ZoneSet ChainFamily::down(const ZoneSet& s) const {
    ZoneSet out;
    if (has_chain()) {
        out = s.chain_future(shape == ChainShape::Ascending);
    }
    for (std::size_t p = 0; p < prefix.size(); ++p) {
        const int wp = static_cast<int>(p);
        for (std::size_t q = 0; q < prefix.size(); ++q) {
            if (prefix.leq(p, q)) {
                out = out.unite(s.restrict_to(static_cast<int>(q), wp));
            }
        }
        if (has_chain()) {
            out = out.unite(s.chain_any_to(wp));
        }
    }
    return out;
}

bool ChainFamily::is_upward_closed(const ZoneSet& s) const {
    const Space sp = space();
    const ZoneSet d = domain_set();
    return s.intersect(d).intersect(down(d.minus(s, sp))).empty();
}

std::vector<std::pair<int, std::int64_t>> ChainFamily::roots() const {
    std::vector<std::pair<int, std::int64_t>> out;
    for (std::size_t w = 0; w < prefix.size(); ++w) {
        bool minimal = true;
        for (std::size_t v = 0; v < prefix.size(); ++v) {
            if (v != w && prefix.leq(v, w) && !prefix.leq(w, v)) {
                minimal = false;
            }
        }
        if (minimal) {
            out.emplace_back(static_cast<int>(w), 0);
        }
    }
    if (prefix.size() == 0 && shape == ChainShape::Ascending) {
        out.emplace_back(Zone::kChain, 0);
    }
    return out;
}

std::vector<std::uint32_t> ChainFamily::root_constants() const {
    const auto r = roots();
    if (r.size() != 1 || r[0].first == Zone::kChain) {
        return {};
    }
    const auto w = static_cast<std::size_t>(r[0].first);
    if (limit.contains(w)) {
        return {};
    }
    return prefix.domain[w];
}

std::string ChainFamily::world_name(int where, std::int64_t i) const {
    if (where != Zone::kChain) {
        return prefix.worlds.at(static_cast<std::size_t>(where));
    }
    if (shape == ChainShape::Descending && i != 0) {
        return "A_-" + std::to_string(i);
    }
    return "A_" + std::to_string(i);
}

std::optional<std::pair<int, std::int64_t>> ChainFamily::world_point(std::string_view name) const {
    if (auto w = prefix.world_index(name)) {
        return std::pair<int, std::int64_t>{static_cast<int>(*w), 0};
    }
    static const std::regex re(R"(^A_(-?)(\d{1,9})$)");
    std::match_results<std::string_view::const_iterator> m;
    if (!has_chain() || !std::regex_match(name.begin(), name.end(), m, re)) {
        return std::nullopt;
    }
    const bool minus = m[1].length() > 0;
    const std::int64_t i = std::stoll(m[2].str());
    if (minus != (shape == ChainShape::Descending) && i != 0) {
        return std::nullopt;
    }
    return std::pair<int, std::int64_t>{Zone::kChain, i};
}

namespace {

std::string trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!trim(item).empty()) {
            out.push_back(trim(item));
        }
    }
    return out;
}

} // namespace

ChainFamily parse_family(std::string_view text, std::string id) {
    static const std::set<std::string, std::less<>> own = {"chain", "limit", "rules", "chainbot"};
    std::map<std::string, std::string, std::less<>> bodies;
    std::string model_text;
    std::string section;
    bool has_worlds = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = line.substr(0, line.find('#'));
        const std::string t = trim(body);
        if (!t.empty() && t[0] == '[') {
            const auto close = t.find(']');
            if (close == std::string::npos) {
                throw FamilyError("line " + std::to_string(line_no) + ": unterminated section header");
            }
            section = t.substr(1, close - 1);
            has_worlds = has_worlds || section == "worlds";
            if (own.contains(section)) {
                if (bodies.contains(section)) {
                    throw FamilyError("line " + std::to_string(line_no) + ": repeated [" + section + "]");
                }
                bodies[section] = t.substr(close + 1);
                model_text += '\n';
                continue;
            }
        } else if (own.contains(section)) {
            bodies[section] += ' ' + t;
            model_text += '\n';
            continue;
        }
        model_text += line + '\n';
    }

    ChainFamily fam;
    fam.id = std::move(id);
    if (has_worlds) {
        try {
            fam.prefix = parse_model(model_text);
        } catch (const ModelError& e) {
            throw FamilyError(e.what());
        }
    }
    const std::string shape = bodies.contains("chain") ? trim(bodies["chain"]) : "none";
    if (shape == "ascending") {
        fam.shape = ChainShape::Ascending;
    } else if (shape == "descending") {
        fam.shape = ChainShape::Descending;
    } else if (shape != "none") {
        throw FamilyError("unknown chain shape '" + shape + "'");
    }
    const Space sp = fam.space();
    for (const auto& w : split(bodies["limit"], ' ')) {
        auto idx = fam.prefix.world_index(w);
        if (!idx) {
            throw FamilyError("[limit] names unknown world " + w);
        }
        fam.limit.insert(*idx);
    }
    static const std::regex key(R"(^([A-Za-z_][A-Za-z0-9_']*)\s*(\(\s*x\s*\))?$)");
    for (const auto& item : split(bodies["rules"], ';')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw FamilyError("rule '" + item + "' is not of the form P: constraints");
        }
        const std::string k = trim(item.substr(0, colon));
        const std::string c = trim(item.substr(colon + 1));
        std::smatch m;
        if (!std::regex_match(k, m, key) || k == "false") {
            throw FamilyError("bad rule name '" + k + "'");
        }
        if (!fam.has_chain()) {
            throw FamilyError("rule for " + k + " in a family without a chain");
        }
        if (fam.rules.contains(m[1].str())) {
            throw FamilyError("two rules for " + m[1].str());
        }
        try {
            fam.rules[m[1].str()] = ZoneSet::parse(c, sp);
        } catch (const ZoneError& e) {
            throw FamilyError("rule " + k + ": " + e.what());
        }
        fam.arity[m[1].str()] = m[2].matched || c.find('t') != std::string::npos ? 1 : 0;
    }
    if (bodies.contains("chainbot")) {
        if (!fam.has_chain()) {
            throw FamilyError("[chainbot] in a family without a chain");
        }
        try {
            fam.chain_bottom = ZoneSet::parse(bodies["chainbot"], sp);
        } catch (const ZoneError& e) {
            throw FamilyError(std::string("[chainbot]: ") + e.what());
        }
    }
    fam.infer_arities();
    auto v = validate_family(fam);
    if (!v.empty()) {
        std::string msg = "family " + fam.id + " is not a Kripke model:";
        for (const auto& s : v) {
            msg += "\n  " + s;
        }
        throw FamilyError(msg);
    }
    return fam;
}

std::vector<std::string> validate_family(const ChainFamily& fam) {
    std::vector<std::string> out = validate_model(fam.prefix);
    for (auto l : fam.limit) {
        for (std::size_t v = 0; v < fam.prefix.size(); ++v) {
            if (fam.prefix.leq(l, v) && !fam.limit.contains(v)) {
                out.push_back("world " + fam.prefix.worlds[v] + " has a finite domain above limit world " +
                              fam.prefix.worlds[l]);
            }
        }
        for (const auto& [a, ws] : fam.prefix.atoms) {
            if (a.argument && (ws & world_bit(l)) != 0) {
                out.push_back("limit world " + fam.prefix.worlds[l] + " carries " + a.to_string() +
                              "; limit worlds take propositions only");
            }
        }
    }
    for (const auto& [a, ws] : fam.prefix.atoms) {
        auto ar = fam.arity.find(a.predicate);
        if (ar != fam.arity.end() && (ar->second == 1) != a.argument.has_value()) {
            out.push_back(a.predicate + " is used with two arities");
        }
    }
    if (!out.empty()) {
        return out;
    }
    for (const auto& s : fam.symbols()) {
        const bool unary = fam.arity.at(s) == 1;
        if (!fam.is_upward_closed(fam.atom_set(s, unary))) {
            out.push_back("forcing of " + s + " is not monotone");
        }
    }
    if (!fam.is_upward_closed(fam.bottom_set())) {
        out.push_back("forcing of false is not monotone");
    }
    return out;
}

ChainFamily load_family_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw FamilyError("cannot read " + file.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_family(buf.str(), file.stem().string());
    } catch (const FamilyError& e) {
        throw FamilyError(file.string() + ": " + e.what());
    }
}

ChainFamily family_from_model(const KripkeModel& m) {
    ChainFamily fam;
    fam.prefix = m;
    fam.infer_arities();
    return fam;
}

namespace {

// Largest number of free variables of any subformula.
std::size_t max_free(const Formula& f) {
    std::size_t n = f.free_variables().size();
    switch (f.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Atom:
        return n;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        return std::max(n, max_free(f.body()));
    default:
        return std::max({n, max_free(f.lhs()), max_free(f.rhs())});
    }
}

class SetEvaluator {
  public:
    explicit SetEvaluator(const ChainFamily& fam)
        : fam_(fam), sp_(fam.space()), dom_(fam.domain_set()), ne_(fam.nonempty_set()) {}

    ZoneSet eval(const Formula& f) {
        const auto fv = f.free_variables();
        if (fv.size() > 1) {
            throw FamilyError("subformula " + to_string(f) + " has more than one free variable");
        }
        ZoneSet s = raw(f);
        return fv.empty() ? s : s.intersect(dom_);
    }

  private:
    ZoneSet raw(const Formula& f) {
        switch (f.kind()) {
        case Formula::Kind::Bottom:
            return fam_.bottom_set();
        case Formula::Kind::Atom: {
            const auto& arg = f.argument();
            if (!arg) {
                return fam_.atom_set(f.name(), false);
            }
            ZoneSet a = fam_.atom_set(f.name(), true);
            return arg->is_constant() ? a.at_term(arg->index()) : a;
        }
        case Formula::Kind::And:
            return eval(f.lhs()).intersect(eval(f.rhs()));
        case Formula::Kind::Or:
            return eval(f.lhs()).unite(eval(f.rhs()));
        case Formula::Kind::Implies:
            return fam_.down(eval(f.lhs()).minus(eval(f.rhs()), sp_)).complement(sp_);
        case Formula::Kind::Forall: {
            if (needs_grounding(f)) {
                return ground(f);
            }
            const ZoneSet b = eval(f.body());
            const ZoneSet bad =
                f.body().has_free(f.name()) ? dom_.minus(b, sp_).exists_t() : ne_.minus(b, sp_);
            return fam_.down(bad).complement(sp_);
        }
        case Formula::Kind::Exists: {
            if (needs_grounding(f)) {
                return ground(f);
            }
            const ZoneSet b = eval(f.body());
            return f.body().has_free(f.name()) ? b.intersect(dom_).exists_t() : b.intersect(ne_);
        }
        }
        return {};
    }

    // Without a chain the terms are finite, so a quantifier whose body has
    // two free variables is expanded over the constants.
    [[nodiscard]] bool needs_grounding(const Formula& f) const { return !fam_.has_chain() && max_free(f.body()) > 1; }

    ZoneSet ground(const Formula& f) {
        const bool open = !f.is_closed();
        const bool all = f.kind() == Formula::Kind::Forall;
        ZoneSet acc;
        for (auto c : fam_.prefix.terms()) {
            const ZoneSet has_c = dom_.at_term(c);
            const ZoneSet b = eval(substitute(f.body(), f.name(), Term::constant(c)));
            if (all) {
                acc = acc.unite(has_c.intersect(open ? dom_ : ne_).minus(b, sp_));
            } else {
                acc = acc.unite(b.intersect(has_c));
            }
        }
        return all ? fam_.down(acc).complement(sp_) : acc;
    }

    const ChainFamily& fam_;
    Space sp_;
    ZoneSet dom_;
    ZoneSet ne_;
};

} // namespace

ZoneSet force_set(const ChainFamily& fam, const Formula& f) { return SetEvaluator(fam).eval(f); }

bool family_forces(const ChainFamily& fam, int where, std::int64_t i, const Formula& f) {
    if (!f.is_closed()) {
        throw FamilyError("formula " + to_string(f) + " is not closed");
    }
    return force_set(fam, f).contains(where, i, 0);
}

} // namespace minlog
