// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kripke/catalog.hpp"

#include <fstream>
#include <sstream>

namespace minlog {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::vector<std::string> ids(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        if (w != kTT && find_scheme(w) == nullptr) {
            throw ModelError("unknown scheme " + w + " in catalog");
        }
        out.push_back(w);
    }
    return out;
}

} // namespace

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ModelError("cannot read " + file.string());
    }
    std::vector<CatalogEntry> out;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) {
            line.erase(h);
        }
        if (trim(line).empty()) {
            continue;
        }
        CatalogEntry e;
        std::istringstream parts(line);
        for (std::string part; std::getline(parts, part, '|');) {
            const auto colon = part.find(':');
            if (colon == std::string::npos) {
                throw ModelError(file.string() + ":" + std::to_string(lineno) + ": expected key: value");
            }
            const std::string key = trim(part.substr(0, colon));
            const std::string value = trim(part.substr(colon + 1));
            if (key == "model") {
                e.file = file.parent_path() / value;
                e.name = e.file.stem().string();
            } else if (key == "holds") {
                e.holds = ids(value);
            } else if (key == "fails") {
                e.fails = ids(value);
            } else {
                throw ModelError(file.string() + ":" + std::to_string(lineno) + ": unknown key " + key);
            }
        }
        if (e.file.empty()) {
            throw ModelError(file.string() + ":" + std::to_string(lineno) + ": entry has no model");
        }
        out.push_back(std::move(e));
    }
    return out;
}

CatalogResult check_catalog_entry(const CatalogEntry& e, const FullCheckOptions& opts) {
    CatalogResult r;
    r.entry = e;
    r.model = load_model_file(e.file);
    auto compute = [&](const std::string& id) {
        if (id == kTT) {
            return tt_holds(r.model, opts).holds;
        }
        FullVerdict v = scheme_holds_full(r.model, id, opts);
        if (v.witness) {
            if (!witness_refutes(r.model, get_scheme(id).tmpl, *v.witness)) {
                r.mismatches.push_back(id + ": witness does not re-check");
            }
            r.witnesses.emplace(id, *v.witness);
        }
        return v.holds;
    };
    for (const auto& id : e.holds) {
        r.computed[id] = compute(id);
        if (!r.computed[id]) {
            auto w = r.witnesses.find(id);
            r.mismatches.push_back(id + " is listed as holding but fails" +
                                   (w == r.witnesses.end() ? std::string() : " " + w->second.describe(r.model)));
        }
    }
    for (const auto& id : e.fails) {
        if (r.computed.contains(id)) {
            r.mismatches.push_back(id + " is listed both as holding and failing");
            continue;
        }
        r.computed[id] = compute(id);
        if (r.computed[id]) {
            r.mismatches.push_back(id + " is listed as failing but holds");
        }
    }
    r.derived = derived_checks(r.model, opts);
    if (!r.derived.ok()) {
        r.mismatches.push_back("derived checks disagree with the exhaustive checker");
    }
    return r;
}

bool CatalogReport::ok() const {
    for (const auto& r : results) {
        if (!r.ok()) {
            return false;
        }
    }
    return true;
}

std::string CatalogReport::to_text() const {
    std::string out;
    std::size_t good = 0;
    for (const auto& r : results) {
        out += (r.ok() ? "PASS " : "FAIL ") + r.entry.name + "\n";
        std::string h;
        std::string f;
        for (const auto& [id, holds] : r.computed) {
            (holds ? h : f) += " " + id;
        }
        out += "  holds:" + h + "\n  fails:" + f + "\n";
        for (const auto& m : r.mismatches) {
            out += "  " + m + "\n";
        }
        good += r.ok() ? 1 : 0;
    }
    out += std::to_string(good) + "/" + std::to_string(results.size()) + " models reproduce their verdicts\n";
    return out;
}

CatalogReport check_catalog(const std::filesystem::path& file, const FullCheckOptions& opts) {
    CatalogReport rep;
    for (const auto& e : load_catalog(file)) {
        rep.results.push_back(check_catalog_entry(e, opts));
    }
    return rep;
}

std::map<std::string, bool> verdict_table(const KripkeModel& m, const FullCheckOptions& opts) {
    std::map<std::string, bool> out;
    for (const auto& id : primary_scheme_ids()) {
        out[id] = scheme_holds_full(m, id, opts).holds;
    }
    out[kTT] = tt_holds(m, opts).holds;
    return out;
}

} // namespace minlog
