// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/hierarchy/hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "minlog/chain/certify.hpp"
#include "minlog/kernel/checker.hpp"
#include "minlog/kripke/catalog.hpp"
#include "minlog/kripke/full.hpp"
#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

namespace {

std::string trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

bool is_side(const std::string& s) { return s == "EFQ" || s == "TT"; }

std::string join(const SchemeList& l, const char* sep) {
    std::string out;
    for (const auto& s : l) {
        out += (out.empty() ? "" : sep) + s;
    }
    return out;
}

std::string arrow(const SchemeList& from, const std::string& to, const char* a = " -> ") {
    return join(from, " + ") + a + to;
}

class ManifestParser {
  public:
    explicit ManifestParser(std::size_t line) : line_(line) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ManifestError("line " + std::to_string(line_) + ": " + msg);
    }

    std::string scheme(const std::string& s) const {
        const std::string id = trim(s);
        if (id != "TT" && find_scheme(id) == nullptr) {
            fail("unknown scheme '" + id + "'");
        }
        return id;
    }

    SchemeList schemes(const std::string& s) const {
        SchemeList out;
        std::stringstream in(s);
        std::string item;
        while (std::getline(in, item, '+')) {
            out.push_back(scheme(item));
        }
        if (out.empty()) {
            fail("no schemes before the arrow");
        }
        return out;
    }

    std::pair<std::string, std::string> split(const std::string& s, std::string_view sep) const {
        const auto at = s.find(sep);
        if (at == std::string::npos) {
            fail("expected '" + std::string(sep) + "' in '" + s + "'");
        }
        return {trim(s.substr(0, at)), trim(s.substr(at + sep.size()))};
    }

  private:
    std::size_t line_;
};

} // namespace

HierarchyManifest parse_manifest(std::string_view text, const std::filesystem::path& base) {
    HierarchyManifest m;
    m.base = base;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string l = trim(raw.substr(0, raw.find('#')));
        if (l.empty()) {
            continue;
        }
        ManifestParser p(line);
        const auto colon = l.find(':');
        if (colon == std::string::npos) {
            p.fail("expected 'kind: ...'");
        }
        const std::string kind = trim(l.substr(0, colon));
        const std::string body = trim(l.substr(colon + 1));
        if (kind == "edge" || kind == "extra") {
            auto [claim, script] = p.split(body, "@");
            auto [from, to] = p.split(claim, "->");
            if (script.empty()) {
                p.fail("edge without a script");
            }
            m.edges.push_back({p.schemes(from), p.scheme(to), script, kind == "extra", line});
        } else if (kind == "equiv") {
            auto [claim, scripts] = p.split(body, "@");
            auto [a, b] = p.split(claim, "==");
            auto [ab, ba] = p.split(scripts, ",");
            m.equivalences.push_back({p.scheme(a), p.scheme(b), ab, ba, line});
        } else if (kind == "nonedge") {
            auto [claim, evidence] = p.split(body, "@");
            auto [from, to] = p.split(claim, "-/->");
            if (evidence.rfind("model:", 0) != 0 && evidence.rfind("family:", 0) != 0) {
                p.fail("evidence must be model:<name> or family:<id>");
            }
            m.nonedges.push_back({p.schemes(from), p.scheme(to), evidence, line});
        } else if (kind == "open") {
            auto [from, to] = p.split(body, "->");
            m.open.push_back({p.schemes(from), p.scheme(to), line});
        } else {
            p.fail("unknown line kind '" + kind + "'");
        }
    }
    return m;
}

HierarchyManifest load_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ManifestError("cannot read " + file.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str(), file.parent_path().empty() ? "." : file.parent_path());
}

std::vector<SchemeList> hierarchy_nodes(const HierarchyManifest& m) {
    // Schemes in order of first appearance on drawn lines.
    std::vector<std::pair<std::size_t, SchemeList>> lines;
    for (const auto& e : m.equivalences) {
        lines.push_back({e.line, {e.a, e.b}});
    }
    for (const auto& e : m.edges) {
        if (e.extra) {
            continue;
        }
        SchemeList l;
        for (const auto& f : e.from) {
            if (!is_side(f)) {
                l.push_back(f);
            }
        }
        l.push_back(e.to);
        lines.push_back({e.line, l});
    }
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SchemeList order;
    for (const auto& [line, l] : lines) {
        for (const auto& s : l) {
            if (std::find(order.begin(), order.end(), s) == order.end()) {
                order.push_back(s);
            }
        }
    }
    std::map<std::string, std::string> parent;
    std::function<std::string(const std::string&)> root = [&](const std::string& s) {
        auto it = parent.find(s);
        return it == parent.end() || it->second == s ? s : root(it->second);
    };
    for (const auto& e : m.equivalences) {
        const std::string a = root(e.a);
        const std::string b = root(e.b);
        if (a != b) {
            parent[b] = a;
        }
    }
    std::vector<SchemeList> nodes;
    std::map<std::string, std::size_t> index;
    for (const auto& s : order) {
        const std::string r = root(s);
        auto it = index.find(r);
        if (it == index.end()) {
            index[r] = nodes.size();
            nodes.push_back({s});
        } else {
            nodes[it->second].push_back(s);
        }
    }
    return nodes;
}

std::set<std::string> derivable_from(const HierarchyManifest& m, const std::set<std::string>& start) {
    std::set<std::string> have = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : m.edges) {
            const bool fire = std::all_of(e.from.begin(), e.from.end(), [&](const auto& s) { return have.contains(s); });
            if (fire && have.insert(e.to).second) {
                grew = true;
            }
        }
        for (const auto& e : m.equivalences) {
            if (have.contains(e.a) != have.contains(e.b)) {
                have.insert(e.a);
                have.insert(e.b);
                grew = true;
            }
        }
    }
    return have;
}

std::size_t HierarchyReport::count(std::string_view status) const {
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [&](const HierarchyLine& l) { return l.status == status; }));
}

std::string HierarchyReport::to_text() const {
    std::string out;
    for (const auto& l : lines) {
        std::string s = l.status;
        s.resize(8, ' ');
        out += s + l.claim;
        if (!l.evidence.empty()) {
            out += "  [" + l.evidence + "]";
        }
        out += "\n";
        if (!l.detail.empty()) {
            out += "        " + l.detail + "\n";
        }
    }
    out += "hierarchy: " + std::to_string(count("PASS")) + " passed, " + std::to_string(count("FAIL")) + " failed, " +
           std::to_string(count("OPEN")) + " open, " + std::to_string(count("UNKNOWN")) + " unknown\n";
    return out;
}

namespace {

// Facts a family certification establishes for all predicates it covers.
std::set<std::string> family_holds(const std::string& id) {
    std::set<std::string> out;
    if (id.rfind("ascending", 0) == 0 || id.rfind("nonfull", 0) == 0) {
        out.insert("HE");
    }
    if (id.rfind("ascending", 0) == 0) {
        out.insert("CD");
    }
    if (id.rfind("descending", 0) == 0) {
        out.insert("DP");
    }
    if (id.ends_with("all-bot")) {
        out.insert("LEM");
    }
    if (id == "nonfull-s8-tt") {
        out.insert("TT");
    }
    return out;
}

// Caches model verdicts and family certifications within one run.
class Evidence {
  public:
    explicit Evidence(const HierarchyManifest& m) : m_(m) {}

    // (ok, detail)
    std::pair<bool, std::string> check(const SchemeList& from, const std::string& to, const std::string& evidence) {
        try {
            if (evidence.rfind("model:", 0) == 0) {
                return check_model(from, to, evidence.substr(6));
            }
            return check_family(from, to, evidence.substr(7));
        } catch (const std::exception& e) {
            return {false, e.what()};
        }
    }

  private:
    std::pair<bool, std::string> check_model(const SchemeList& from, const std::string& to, const std::string& name) {
        const KripkeModel& km = model(name);
        for (const auto& s : from) {
            if (!verdict(name, km, s)) {
                return {false, s + " fails in " + name};
            }
        }
        if (to == kTT) {
            return tt_holds(km).holds ? std::pair<bool, std::string>{false, "TT holds in " + name}
                                      : std::pair<bool, std::string>{true, "no labelling of D gives TT"};
        }
        const FullVerdict v = scheme_holds_full(km, to);
        if (v.holds) {
            return {false, to + " holds in " + name};
        }
        return {true, to + " fails: " + v.witness->describe(km)};
    }

    std::pair<bool, std::string> check_family(const SchemeList& from, const std::string& to, const std::string& id) {
        const ChainFamily& fam = family(id);
        const CertifyReport& rep = certified(id);
        if (!rep.ok()) {
            return {false, "certification of " + id + " fails"};
        }
        std::set<std::string> holds = family_holds(id);
        if (force_set(fam, Formula::bottom()).empty()) {
            holds.insert("EFQ");
        }
        for (const auto& s : from) {
            if (!holds.contains(s)) {
                return {false, s + " is not certified for " + id};
            }
        }
        if (to == kTT) {
            return {false, "TT is not decided on families"};
        }
        const Scheme& sc = get_scheme(to);
        std::vector<std::vector<Formula>> choices;
        for (const auto& p : sc.placeholders) {
            std::vector<Formula> c;
            const std::vector<const char*> texts =
                p.arity == 1 ? std::vector<const char*>{"P(x)", "Q(x)"}
                             : std::vector<const char*>{"P(0)", "P(1)", "Q(0)", "exists x. P(x)", "forall x. P(x)"};
            for (const char* t : texts) {
                c.push_back(parse_formula(t));
            }
            choices.push_back(std::move(c));
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
            SchemeInstance inst{to, {}};
            std::string args;
            for (std::size_t k = 0; k < pick.size(); ++k) {
                const auto& ph = sc.placeholders[k];
                const Formula& f = choices[k][pick[k]];
                inst.arguments.insert_or_assign(
                    ph.name, SchemeArgument{f, ph.arity == 1 ? std::optional<std::string>("x") : std::nullopt});
                args += (args.empty() ? "" : ", ") + ph.name + " := " + to_string(f);
            }
            try {
                const Formula f = instantiate_scheme(inst);
                const ZoneSet miss = force_set(fam, f).complement(fam.space());
                if (!miss.empty()) {
                    return {true, to + " fails for " + args + " at " + miss.to_string(fam.prefix_names())};
                }
            } catch (const FamilyError&) {
                // Symbol not in this family.
            }
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == choices[k].size()) {
                pick[k++] = 0;
            }
            if (k == pick.size()) {
                break;
            }
        }
        return {false, "no instance of " + to + " fails in " + id};
    }

    const KripkeModel& model(const std::string& name) {
        auto it = models_.find(name);
        if (it == models_.end()) {
            it = models_.emplace(name, load_model_file(m_.base / "models" / (name + ".km"))).first;
        }
        return it->second;
    }

    bool verdict(const std::string& name, const KripkeModel& km, const std::string& s) {
        const auto key = name + "/" + s;
        auto it = verdicts_.find(key);
        if (it == verdicts_.end()) {
            it = verdicts_.emplace(key, verdict_for(km, s)).first;
        }
        return it->second;
    }

    const ChainFamily& family(const std::string& id) {
        auto it = families_.find(id);
        if (it == families_.end()) {
            it = families_.emplace(id, load_family_file(m_.base / "families" / (id + ".fam"))).first;
        }
        return it->second;
    }

    const CertifyReport& certified(const std::string& id) {
        auto it = reports_.find(id);
        if (it == reports_.end()) {
            it = reports_.emplace(id, certify_family(family(id))).first;
        }
        return it->second;
    }

    const HierarchyManifest& m_;
    std::map<std::string, KripkeModel> models_;
    std::map<std::string, bool> verdicts_;
    std::map<std::string, ChainFamily> families_;
    std::map<std::string, CertifyReport> reports_;
};

std::vector<std::string> evidence_candidates(const HierarchyManifest& m) {
    std::vector<std::string> out;
    const auto catalog = m.base / "models" / "catalog.txt";
    if (std::filesystem::exists(catalog)) {
        for (const auto& e : load_catalog(catalog)) {
            out.push_back("model:" + e.file.stem().string());
        }
    }
    for (const auto& id : certified_family_ids()) {
        if (std::filesystem::exists(m.base / "families" / (id + ".fam"))) {
            out.push_back("family:" + id);
        }
    }
    return out;
}

HierarchyLine check_script(const HierarchyManifest& m, const SchemeList& from, const std::string& to,
                           const std::filesystem::path& script) {
    HierarchyLine l{"FAIL", arrow(from, to), script.string(), ""};
    const auto path = m.base / script;
    if (!std::filesystem::exists(path)) {
        l.detail = "no evidence: script not found";
        return l;
    }
    ReductionClaim c;
    try {
        c = load_claim(path);
    } catch (const ScriptError& e) {
        l.detail = e.what();
        return l;
    }
    std::set<std::string> premises;
    bool tt = false;
    for (const auto& s : from) {
        if (s == "TT") {
            tt = true;
        } else {
            premises.insert(s);
        }
    }
    if (c.premises != premises || c.tt != tt || c.target != to) {
        l.detail = "script " + c.id + " proves a different claim";
        return l;
    }
    const ReductionVerdict v = check_reduction(c);
    if (!v.ok()) {
        l.detail = v.violations.front().to_string();
        return l;
    }
    l.status = "PASS";
    l.evidence = "script " + c.id;
    return l;
}

} // namespace

std::optional<std::string> find_countermodel(const HierarchyManifest& m, const SchemeList& from, const std::string& to) {
    Evidence ev(m);
    for (const auto& cand : evidence_candidates(m)) {
        if (ev.check(from, to, cand).first) {
            return cand;
        }
    }
    return std::nullopt;
}

HierarchyReport verify_hierarchy(const HierarchyManifest& m) {
    std::vector<std::pair<std::size_t, HierarchyLine>> out;
    for (const auto& e : m.equivalences) {
        out.emplace_back(e.line, check_script(m, {e.a}, e.b, e.a_to_b));
        out.emplace_back(e.line, check_script(m, {e.b}, e.a, e.b_to_a));
    }
    for (const auto& e : m.edges) {
        out.emplace_back(e.line, check_script(m, e.from, e.to, e.script));
    }
    Evidence ev(m);
    for (const auto& n : m.nonedges) {
        HierarchyLine l{"FAIL", arrow(n.from, n.to, " -/-> "), n.evidence, ""};
        const std::set<std::string> from(n.from.begin(), n.from.end());
        if (derivable_from(m, from).contains(n.to)) {
            l.detail = "contradicts the edges: " + n.to + " follows";
        } else {
            auto [ok, detail] = ev.check(n.from, n.to, n.evidence);
            l.status = ok ? "PASS" : "FAIL";
            l.detail = detail;
        }
        out.emplace_back(n.line, l);
    }
    for (const auto& q : m.open) {
        HierarchyLine l{"OPEN", arrow(q.from, q.to), "", ""};
        const std::set<std::string> from(q.from.begin(), q.from.end());
        if (derivable_from(m, from).contains(q.to)) {
            l.status = "FAIL";
            l.detail = "settled: follows from the edges";
        }
        for (const auto& n : m.nonedges) {
            // A model of n.from that refutes q.to answers the question.
            const bool covers = std::all_of(q.from.begin(), q.from.end(), [&](const auto& s) {
                return std::find(n.from.begin(), n.from.end(), s) != n.from.end();
            });
            if (covers && n.to == q.to) {
                l.status = "FAIL";
                l.detail = "settled by the countermodel on line " + std::to_string(n.line);
            }
        }
        out.emplace_back(q.line, l);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    HierarchyReport rep;
    for (auto& [line, l] : out) {
        rep.lines.push_back(std::move(l));
    }
    // Drawn pairs with neither a path nor a countermodel.
    const auto nodes = hierarchy_nodes(m);
    for (const auto& x : nodes) {
        const auto reach = derivable_from(m, std::set<std::string>(x.begin(), x.end()));
        for (const auto& y : nodes) {
            if (&x == &y || reach.contains(y.front())) {
                continue;
            }
            const bool covered = std::any_of(m.nonedges.begin(), m.nonedges.end(), [&](const NonEdge& n) {
                return std::find(y.begin(), y.end(), n.to) != y.end() &&
                       std::all_of(n.from.begin(), n.from.end(),
                                   [&](const auto& s) { return std::find(x.begin(), x.end(), s) != x.end(); });
            });
            if (!covered) {
                rep.lines.push_back({"UNKNOWN", join(x, ", ") + " -?-> " + join(y, ", "), "", ""});
            }
        }
    }
    return rep;
}

std::string export_dot(const HierarchyManifest& m) {
    const auto nodes = hierarchy_nodes(m);
    auto node_id = [&](const std::string& s) -> std::string {
        for (const auto& n : nodes) {
            if (std::find(n.begin(), n.end(), s) != n.end()) {
                std::string id = n.front();
                std::transform(id.begin(), id.end(), id.begin(), [](unsigned char c) { return std::tolower(c); });
                return id;
            }
        }
        return "";
    };
    std::string out = "digraph hierarchy {\n";
    if (!nodes.empty()) {
        out += "  node [shape=plaintext];\n";
    }
    for (const auto& n : nodes) {
        out += "  " + node_id(n.front()) + " [label=\"" + join(n, ", ") + "\"];\n";
    }
    for (const auto& e : m.edges) {
        if (e.extra) {
            continue;
        }
        SchemeList side;
        for (const auto& f : e.from) {
            if (is_side(f)) {
                side.push_back(f);
            }
        }
        for (const auto& f : e.from) {
            if (is_side(f)) {
                continue;
            }
            out += "  " + node_id(f) + " -> " + node_id(e.to);
            if (!side.empty()) {
                out += " [label=\"" + join(side, ", ") + "\"]";
            }
            out += ";\n";
        }
    }
    return out + "}\n";
}

} // namespace minlog
