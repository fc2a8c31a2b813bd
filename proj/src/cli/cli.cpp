// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "minlog/chain/certify.hpp"
#include "minlog/chain/closure.hpp"
#include "minlog/hierarchy/hierarchy.hpp"
#include "minlog/kernel/checker.hpp"
#include "minlog/kripke/catalog.hpp"
#include "minlog/kripke/forcing.hpp"
#include "minlog/kripke/full.hpp"
#include "minlog/syntax/parser.hpp"
#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Input problems found after parsing the command line.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Record {
    std::string id;
    std::string verdict;
    std::string witness;
};

class Reporter {
  public:
    Reporter(std::ostream& out, bool json_mode) : out_(out), json_(json_mode) {}

    [[nodiscard]] bool json_mode() const { return json_; }

    void text(const std::string& s) {
        if (!json_) {
            out_ << s;
        }
    }

    void record(const Record& r) {
        if (!json_) {
            return;
        }
        json j;
        j["id"] = r.id;
        j["verdict"] = r.verdict;
        if (!r.witness.empty()) {
            j["witness"] = r.witness;
        }
        out_ << j.dump() << "\n";
    }

  private:
    std::ostream& out_;
    bool json_;
};

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v == 0) {
        throw InputError(std::string("bad ") + what + ": " + s);
    }
    return v;
}

FullCheckOptions valuation_options(std::uint64_t cli_cap) {
    FullCheckOptions o;
    if (cli_cap != 0) {
        o.cap = cli_cap;
    } else if (const char* env = std::getenv("MINLOG_CAP"); env != nullptr && *env != '\0') {
        o.cap = parse_u64(env, "MINLOG_CAP");
    }
    return o;
}

void require_file(const fs::path& p) {
    if (!fs::exists(p)) {
        throw InputError("no such file: " + p.string());
    }
}

KripkeModel read_model(const fs::path& p) {
    require_file(p);
    return load_model_file(p);
}

// "A=B,C" sets a proposition; "P(s)=B" sets one term of a predicate. An
// empty world list means nowhere.
Valuation parse_lets(const KripkeModel& m, const std::vector<std::string>& lets) {
    Valuation v;
    for (const auto& l : lets) {
        const auto eq = l.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InputError("bad --let (want NAME=W,... or P(t)=W,...): " + l);
        }
        std::string lhs = l.substr(0, eq);
        WorldSet ws = 0;
        std::string rest = l.substr(eq + 1);
        std::size_t pos = 0;
        while (pos <= rest.size() && !rest.empty()) {
            const auto comma = rest.find(',', pos);
            const std::string w = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const auto idx = m.world_index(w);
            if (!idx) {
                throw InputError("unknown world in --let: " + w);
            }
            ws |= world_bit(*idx);
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
        if (!m.is_upset(ws)) {
            throw InputError("--let " + lhs + " is not upward closed: " + m.world_list(ws));
        }
        const auto open = lhs.find('(');
        if (open == std::string::npos) {
            PredicateValue& pv = v[lhs];
            pv.arity = 0;
            pv.prop = ws;
            continue;
        }
        if (lhs.back() != ')') {
            throw InputError("bad --let: " + l);
        }
        const std::string name = lhs.substr(0, open);
        const std::string term = lhs.substr(open + 1, lhs.size() - open - 2);
        std::uint32_t c = 0;
        if (auto it = m.names.find(term); it != m.names.end()) {
            c = it->second;
        } else {
            const auto [p, ec] = std::from_chars(term.data(), term.data() + term.size(), c);
            if (ec != std::errc() || p != term.data() + term.size()) {
                throw InputError("unknown term in --let: " + term);
            }
        }
        if ((ws & ~m.holders(c)) != 0) {
            throw InputError("--let " + lhs + " names worlds without " + term);
        }
        PredicateValue& pv = v[name];
        pv.arity = 1;
        pv.ext[c] = ws;
    }
    return v;
}

ChainFamily read_family(const std::string& id_or_path, const fs::path& families) {
    fs::path p = id_or_path;
    if (p.extension() != ".fam") {
        p = families / (id_or_path + ".fam");
    }
    require_file(p);
    return load_family_file(p);
}

struct Context {
    fs::path root;
    std::ostream& out;
    Reporter& rep;
    std::ostream& err;
    std::uint64_t valuation_cap = 0;
};

int cmd_check(Context& cx, const std::vector<std::string>& paths) {
    std::vector<fs::path> ps;
    for (const auto& p : paths) {
        require_file(p);
        ps.emplace_back(p);
    }
    const CorpusReport r = corpus_verify(ps);
    cx.rep.text(r.to_text());
    for (const auto& e : r.entries) {
        std::string w;
        for (const auto& m : e.messages) {
            w += (w.empty() ? "" : "; ") + m;
        }
        cx.rep.record({e.id, e.ok ? "verified" : "rejected", w});
    }
    return r.ok() ? kExitOk : kExitRefuted;
}

int cmd_model(Context& cx, const std::string& file, const std::string& world, const std::string& text,
              const std::vector<std::string>& lets) {
    const KripkeModel m = read_model(file);
    const auto w = m.world_index(world);
    if (!w) {
        throw InputError("no world " + world + " in " + file);
    }
    // Free names that the model defines (s, t) stand for its constants.
    Formula f = parse_formula(text);
    for (const auto& v : f.free_variables()) {
        if (auto it = m.names.find(v); it != m.names.end()) {
            f = substitute(f, v, Term::constant(it->second));
        }
    }
    const bool yes = forces(m, *w, f, parse_lets(m, lets));
    const std::string verdict = yes ? "forced" : "not-forced";
    cx.rep.text(verdict + "\n");
    cx.rep.record({world + " |- " + to_string(f), verdict, ""});
    return yes ? kExitOk : kExitRefuted;
}

int cmd_scheme(Context& cx, const std::string& file, const std::vector<std::string>& ids) {
    const KripkeModel m = read_model(file);
    const FullCheckOptions opts = valuation_options(cx.valuation_cap);
    bool all = true;
    for (const auto& id : ids) {
        bool holds = false;
        std::string witness;
        if (id == kTT) {
            const TTVerdict t = tt_holds(m, opts);
            holds = t.holds;
            if (t.labelling) {
                witness = "D: " + describe_valuation(m, *t.labelling);
            }
        } else {
            if (!find_scheme(id)) {
                throw InputError("unknown scheme: " + id);
            }
            const FullVerdict v = scheme_holds_full(m, id, opts);
            holds = v.holds;
            if (v.witness) {
                witness = v.witness->describe(m);
            }
        }
        all = all && holds;
        cx.rep.text(id + (holds ? " HOLDS" : " FAILS") + (witness.empty() ? "" : "\n  " + witness) + "\n");
        cx.rep.record({id, holds ? "holds" : "fails", witness});
    }
    return all ? kExitOk : kExitRefuted;
}

int cmd_catalog(Context& cx, const std::string& file) {
    const fs::path p = file.empty() ? cx.root / "models" / "catalog.txt" : fs::path(file);
    require_file(p);
    const CatalogReport r = check_catalog(p, valuation_options(cx.valuation_cap));
    cx.rep.text(r.to_text());
    for (const auto& res : r.results) {
        std::string w;
        for (const auto& m : res.mismatches) {
            w += (w.empty() ? "" : "; ") + m;
        }
        cx.rep.record({res.entry.name, res.ok() ? "reproduced" : "mismatch", w});
    }
    return r.ok() ? kExitOk : kExitRefuted;
}

int cmd_certify(Context& cx, std::vector<std::string> ids, const std::string& dir) {
    const fs::path families = dir.empty() ? cx.root / "families" : fs::path(dir);
    if (ids.empty()) {
        ids = certified_family_ids();
    }
    bool all = true;
    for (const auto& id : ids) {
        const CertifyReport r = certify_family(read_family(id, families));
        all = all && r.ok();
        cx.rep.text(r.to_text());
        for (const auto& c : r.claims) {
            cx.rep.record({r.family + "/" + c.id, c.holds ? "certified" : "failed", c.detail});
        }
    }
    return all ? kExitOk : kExitRefuted;
}

int cmd_closure(Context& cx, const std::string& id, std::vector<std::string> seeds, std::size_t cap,
                const std::string& dir) {
    const fs::path families = dir.empty() ? cx.root / "families" : fs::path(dir);
    const ChainFamily fam = read_family(id, families);
    if (seeds.empty()) {
        for (const char* s : {"P", "Q"}) {
            if (auto it = fam.arity.find(s); it != fam.arity.end() && it->second == 1) {
                seeds.push_back(std::string(s) + "(x)");
            }
        }
    }
    if (seeds.empty()) {
        throw InputError("family " + fam.id + " has no unary P or Q; give --from");
    }
    std::vector<Formula> fs_;
    for (const auto& s : seeds) {
        fs_.push_back(parse_formula(s));
    }
    ClosureOptions opts;
    if (cap != 0) {
        opts.cap = cap;
    }
    try {
        const ClosureResult r = predicate_closure(fam, fs_, opts);
        cx.rep.text(r.to_text(fam));
        for (const auto& c : r.classes) {
            cx.rep.record({to_string(c.representative), c.proposition ? "proposition" : "predicate",
                           c.points.to_string(fam.prefix_names())});
        }
        return kExitOk;
    } catch (const ClosureError& e) {
        std::string w;
        for (const auto& f : e.frontier()) {
            w += (w.empty() ? "" : "; ") + f;
        }
        cx.rep.text(std::string(e.what()) + "\nfrontier: " + w + "\n");
        cx.rep.record({fam.id, "cap-exceeded", w});
        return kExitRefuted;
    }
}

int cmd_hierarchy(Context& cx, const std::string& file, const std::string& dot, bool dot_only) {
    const fs::path p = file.empty() ? cx.root / "hierarchy.txt" : fs::path(file);
    require_file(p);
    const HierarchyManifest m = load_manifest(p);
    if (!dot.empty()) {
        const std::string g = export_dot(m);
        if (dot == "-") {
            cx.out << g;
        } else {
            std::ofstream o(dot, std::ios::binary);
            if (!o) {
                throw InputError("cannot write " + dot);
            }
            o << g;
        }
    }
    if (dot_only) {
        return kExitOk;
    }
    const HierarchyReport r = verify_hierarchy(m);
    cx.rep.text(r.to_text());
    for (const auto& l : r.lines) {
        std::string status = l.status;
        for (auto& ch : status) {
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        }
        std::string w = l.evidence;
        if (!l.detail.empty()) {
            w += (w.empty() ? "" : ": ") + l.detail;
        }
        cx.rep.record({l.claim, status, w});
    }
    return r.ok() ? kExitOk : kExitRefuted;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const fs::path& root) {
    CLI::App app{"Minimal logic scheme checker", "minlog"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "minlog 1.0.0");

    std::string format = "text";
    std::string root_dir;
    std::uint64_t valuation_cap = 0;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--root", root_dir, "Directory holding models/, families/ and hierarchy.txt");
    app.add_option("--valuation-cap", valuation_cap, "Valuation enumeration cap (default: MINLOG_CAP or 10000000)")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> check_paths;
    auto* check = app.add_subcommand("check", "Check proof scripts (files or directories of .prf)");
    check->add_option("paths", check_paths)->required();

    std::string model_file, model_world, model_formula;
    std::vector<std::string> lets;
    auto* model = app.add_subcommand("model", "Decide whether a world forces a formula");
    model->add_option("model", model_file)->required();
    model->add_option("world", model_world)->required();
    model->add_option("formula", model_formula)->required();
    model->add_option("--let", lets, "Extra atom: A=W1,W2 or P(t)=W1");

    std::string scheme_file;
    std::vector<std::string> scheme_ids;
    auto* scheme = app.add_subcommand("scheme", "Check schemes over every valuation of a model");
    scheme->add_option("model", scheme_file)->required();
    scheme->add_option("schemes", scheme_ids)->required();

    std::string catalog_file;
    auto* catalog = app.add_subcommand("catalog", "Recompute the verdicts of the model catalog");
    catalog->add_option("catalog", catalog_file, "Catalog file (default: models/catalog.txt)");

    std::vector<std::string> certify_ids;
    std::string families_dir;
    auto* certify = app.add_subcommand("certify", "Certify the facts about a chain family");
    certify->add_option("families", certify_ids, "Family ids or .fam files (default: all)");
    certify->add_option("--families-dir", families_dir);

    std::string closure_id;
    std::vector<std::string> closure_from;
    std::size_t closure_cap = 0;
    auto* closure = app.add_subcommand("closure", "List the predicate classes definable in a family");
    closure->add_option("family", closure_id)->required();
    closure->add_option("--from", closure_from, "Seed formulas over x (default: P(x), Q(x))");
    closure->add_option("--cap", closure_cap, "Maximum number of classes")->check(CLI::PositiveNumber);
    closure->add_option("--families-dir", families_dir);

    std::string manifest_file, dot_file;
    bool dot_only = false;
    auto* hierarchy = app.add_subcommand("hierarchy", "Verify the hierarchy manifest");
    hierarchy->add_option("manifest", manifest_file, "Manifest (default: hierarchy.txt)");
    hierarchy->add_option("--dot", dot_file, "Write the graph in dot format ('-' for stdout)");
    hierarchy->add_flag("--dot-only", dot_only, "Only export the graph");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "minlog: " << e.what() << "\n";
        if (app.get_subcommands().empty()) {
            err << app.help();
        }
        return kExitUsage;
    }

    Reporter rep(out, format == "json");
    Context cx{root_dir.empty() ? root : fs::path(root_dir), out, rep, err, valuation_cap};
    try {
        if (check->parsed()) {
            return cmd_check(cx, check_paths);
        }
        if (model->parsed()) {
            return cmd_model(cx, model_file, model_world, model_formula, lets);
        }
        if (scheme->parsed()) {
            return cmd_scheme(cx, scheme_file, scheme_ids);
        }
        if (catalog->parsed()) {
            return cmd_catalog(cx, catalog_file);
        }
        if (certify->parsed()) {
            return cmd_certify(cx, certify_ids, families_dir);
        }
        if (closure->parsed()) {
            return cmd_closure(cx, closure_id, closure_from, closure_cap, families_dir);
        }
        if (hierarchy->parsed()) {
            if (dot_only && dot_file.empty()) {
                dot_file = "-";
            }
            return cmd_hierarchy(cx, manifest_file, dot_file, dot_only);
        }
    } catch (const CapExceeded& e) {
        err << "minlog: " << e.what() << " (raise MINLOG_CAP or --valuation-cap)\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "minlog: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace minlog
