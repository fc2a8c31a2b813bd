// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kernel/proof.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "minlog/kernel/sexpr.hpp"
#include "minlog/syntax/printer.hpp"
#include "minlog/syntax/scheme.hpp"

namespace minlog {

bool is_tt_rule(std::string_view name) { return name == rule::D0 || name == rule::NotD1 || name == rule::Dx; }

ScriptError::ScriptError(const std::string& message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            return false;
        }
    }
    return true;
}

Term read_term(const SExpr& e) {
    if (e.is_list() || e.text.empty()) {
        throw ScriptError("expected a term", e.line);
    }
    if (all_digits(e.text)) {
        return Term::constant(static_cast<std::uint32_t>(std::stoul(e.text)));
    }
    return Term::variable(e.text);
}

std::string read_text(const SExpr& e, const char* what) {
    if (e.is_list()) {
        throw ScriptError(std::string("expected ") + what, e.line);
    }
    return e.text;
}

Formula read_formula(const SExpr& e, Signature& sig) {
    if (!e.is_string()) {
        throw ScriptError("formula must be a string", e.line);
    }
    try {
        return parse_formula(e.text, &sig);
    } catch (const ParseError& err) {
        throw ScriptError("in formula \"" + e.text + "\": " + err.what(), e.line);
    }
}

ProofNode read_node(const SExpr& e, Signature& sig) {
    if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol() || e.items[0].is_keyword()) {
        throw ScriptError("expected a proof node (rule ...)", e.line);
    }
    ProofNode n;
    n.rule = e.items[0].text;
    n.line = e.line;
    bool have_concl = false;
    for (std::size_t j = 1; j < e.items.size(); ++j) {
        const SExpr& it = e.items[j];
        if (it.is_keyword()) {
            if (j + 1 >= e.items.size()) {
                throw ScriptError("keyword " + it.text + " without value", it.line);
            }
            const SExpr& v = e.items[++j];
            if (it.text == ":label") {
                n.label = read_text(v, "a label");
            } else if (it.text == ":discharge") {
                if (v.is_list()) {
                    for (const auto& d : v.items) {
                        n.discharge.push_back(read_text(d, "a label"));
                    }
                } else {
                    n.discharge.push_back(v.text);
                }
            } else if (it.text == ":var") {
                n.var = read_text(v, "a variable");
            } else if (it.text == ":term") {
                n.term = read_term(v);
            } else if (it.text == ":side") {
                n.side = read_text(v, "left or right");
                if (*n.side != "left" && *n.side != "right") {
                    throw ScriptError(":side must be left or right", v.line);
                }
            } else if (it.text == ":concl") {
                n.conclusion = read_formula(v, sig);
                have_concl = true;
            } else {
                throw ScriptError("unknown node keyword " + it.text, it.line);
            }
            continue;
        }
        n.premises.push_back(read_node(it, sig));
    }
    if (!have_concl) {
        throw ScriptError("node " + n.rule + " has no :concl", e.line);
    }
    return n;
}

ReductionClaim read_claim(const SExpr& e, const std::string& default_id) {
    if (!e.is_list() || e.items.empty() || !e.items[0].is_symbol() || e.items[0].text != "claim") {
        throw ScriptError("expected (claim ...)", e.line);
    }
    ReductionClaim c;
    c.id = default_id;
    Signature sig;
    bool have_proof = false;
    bool have_target = false;
    for (std::size_t j = 1; j < e.items.size(); ++j) {
        const SExpr& it = e.items[j];
        if (it.is_keyword()) {
            if (j + 1 >= e.items.size()) {
                throw ScriptError("keyword " + it.text + " without value", it.line);
            }
            const SExpr& v = e.items[++j];
            if (it.text == ":id") {
                c.id = read_text(v, "an id");
            } else if (it.text == ":premises") {
                if (!v.is_list()) {
                    throw ScriptError(":premises takes a list", v.line);
                }
                for (const auto& p : v.items) {
                    const std::string name = read_text(p, "a scheme id");
                    if (find_scheme(name) == nullptr) {
                        throw ScriptError("unknown scheme " + name, p.line);
                    }
                    c.premises.insert(name);
                }
            } else if (it.text == ":tt") {
                const std::string b = read_text(v, "true or false");
                if (b != "true" && b != "false") {
                    throw ScriptError(":tt must be true or false", v.line);
                }
                c.tt = b == "true";
            } else if (it.text == ":target") {
                c.target = read_text(v, "a scheme id");
                if (find_scheme(c.target) == nullptr) {
                    throw ScriptError("unknown scheme " + c.target, v.line);
                }
                have_target = true;
            } else {
                throw ScriptError("unknown claim keyword " + it.text, it.line);
            }
            continue;
        }
        if (it.is_list() && !it.items.empty() && it.items[0].is_symbol() && it.items[0].text == "proof") {
            if (have_proof || it.items.size() != 2) {
                throw ScriptError("a claim has exactly one (proof <node>)", it.line);
            }
            c.proof = read_node(it.items[1], sig);
            have_proof = true;
            continue;
        }
        throw ScriptError("unexpected element in claim", it.line);
    }
    if (!have_target) {
        throw ScriptError("claim has no :target", e.line);
    }
    if (!have_proof) {
        throw ScriptError("claim has no (proof ...)", e.line);
    }
    if (c.id.empty()) {
        throw ScriptError("claim has no :id", e.line);
    }
    return c;
}

SExpr node_to_sexpr(const ProofNode& n) {
    std::vector<SExpr> items{SExpr::symbol(n.rule)};
    if (n.label) {
        items.push_back(SExpr::symbol(":label"));
        items.push_back(SExpr::string(*n.label));
    }
    if (n.discharge.size() == 1) {
        items.push_back(SExpr::symbol(":discharge"));
        items.push_back(SExpr::string(n.discharge[0]));
    } else if (n.discharge.size() > 1) {
        std::vector<SExpr> ds;
        for (const auto& d : n.discharge) {
            ds.push_back(SExpr::string(d));
        }
        items.push_back(SExpr::symbol(":discharge"));
        items.push_back(SExpr::list(std::move(ds)));
    }
    if (n.var) {
        items.push_back(SExpr::symbol(":var"));
        items.push_back(SExpr::string(*n.var));
    }
    if (n.term) {
        items.push_back(SExpr::symbol(":term"));
        items.push_back(SExpr::symbol(n.term->to_string()));
    }
    if (n.side) {
        items.push_back(SExpr::symbol(":side"));
        items.push_back(SExpr::symbol(*n.side));
    }
    items.push_back(SExpr::symbol(":concl"));
    items.push_back(SExpr::string(to_string(n.conclusion)));
    for (const auto& p : n.premises) {
        items.push_back(node_to_sexpr(p));
    }
    return SExpr::list(std::move(items));
}

} // namespace

ReductionClaim parse_claim(std::string_view text, const std::string& default_id) {
    std::vector<SExpr> top;
    try {
        top = read_sexprs(text);
    } catch (const SExprError& err) {
        throw ScriptError(err.what(), err.line());
    }
    if (top.size() != 1) {
        throw ScriptError("a script holds exactly one claim", top.empty() ? 1 : top[1].line);
    }
    return read_claim(top[0], default_id);
}

ReductionClaim load_claim(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ScriptError("cannot read " + file.string(), 0);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ReductionClaim c = parse_claim(buf.str(), file.stem().string());
    c.source = file;
    return c;
}

std::string write_claim(const ReductionClaim& c) {
    std::string out = "(claim :id \"" + c.id + "\" :premises (";
    bool first = true;
    for (const auto& p : c.premises) {
        if (!first) {
            out += ' ';
        }
        out += p;
        first = false;
    }
    out += ") :tt ";
    out += c.tt ? "true" : "false";
    out += " :target " + c.target + "\n  (proof\n    ";
    out += write_sexpr(node_to_sexpr(c.proof), 4);
    out += "))\n";
    return out;
}

std::size_t proof_size(const ProofNode& n) {
    std::size_t s = 1;
    for (const auto& p : n.premises) {
        s += proof_size(p);
    }
    return s;
}

} // namespace minlog
