// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/kripke/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace minlog {

std::string GroundAtom::to_string() const {
    return argument ? predicate + "(" + std::to_string(*argument) + ")" : predicate;
}

ModelError::ModelError(const std::string& message, std::vector<std::string> violations)
    : std::runtime_error(message), violations_(std::move(violations)) {}

WorldSet KripkeModel::all() const { return size() == kMaxWorlds ? ~WorldSet{0} : world_bit(size()) - 1; }

std::optional<std::size_t> KripkeModel::world_index(std::string_view name) const {
    for (std::size_t i = 0; i < worlds.size(); ++i) {
        if (worlds[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

bool KripkeModel::in_domain(std::size_t w, std::uint32_t c) const {
    return std::binary_search(domain[w].begin(), domain[w].end(), c);
}

WorldSet KripkeModel::holders(std::uint32_t c) const {
    WorldSet s = 0;
    for (std::size_t w = 0; w < size(); ++w) {
        if (in_domain(w, c)) {
            s |= world_bit(w);
        }
    }
    return s;
}

std::vector<std::uint32_t> KripkeModel::terms() const {
    std::set<std::uint32_t> all;
    for (const auto& d : domain) {
        all.insert(d.begin(), d.end());
    }
    return {all.begin(), all.end()};
}

bool KripkeModel::is_upset(WorldSet s) const {
    for (std::size_t w = 0; w < size(); ++w) {
        if ((s & world_bit(w)) != 0 && (above[w] & ~s) != 0) {
            return false;
        }
    }
    return true;
}

WorldSet KripkeModel::up_closure(WorldSet s) const {
    WorldSet out = 0;
    for (std::size_t w = 0; w < size(); ++w) {
        if ((s & world_bit(w)) != 0) {
            out |= above[w];
        }
    }
    return out;
}

std::string KripkeModel::term_name(std::uint32_t c) const {
    for (const auto& [n, i] : names) {
        if (i == c) {
            return n;
        }
    }
    return std::to_string(c);
}

std::string KripkeModel::world_list(WorldSet s) const {
    std::string out;
    for (std::size_t w = 0; w < size(); ++w) {
        if ((s & world_bit(w)) != 0) {
            out += (out.empty() ? "" : " ") + worlds[w];
        }
    }
    return out;
}

void KripkeModel::close_order() {
    above.assign(size(), 0);
    for (std::size_t w = 0; w < size(); ++w) {
        above[w] = world_bit(w);
    }
    for (const auto& [a, b] : covers) {
        above[a] |= world_bit(b);
    }
    // Warshall on bit rows.
    for (std::size_t k = 0; k < size(); ++k) {
        for (std::size_t i = 0; i < size(); ++i) {
            if ((above[i] & world_bit(k)) != 0) {
                above[i] |= above[k];
            }
        }
    }
}

namespace {

std::string trim(std::string_view s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])) != 0) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])) != 0) {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    out.erase(std::remove(out.begin(), out.end(), ""), out.end());
    return out;
}

bool is_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Reader {
  public:
    explicit Reader(KripkeModel& m) : m_(m) {}

    void section(const std::string& name, const std::string& body, std::size_t line) {
        line_ = line;
        if (!seen_.insert(name).second) {
            fail("section [" + name + "] appears twice");
        }
        if (name == "worlds") {
            for (const auto& w : words(body)) {
                if (m_.world_index(w)) {
                    fail("world " + w + " declared twice");
                }
                m_.worlds.push_back(w);
            }
            if (m_.worlds.size() > kMaxWorlds) {
                fail("more than 64 worlds");
            }
            m_.domain.assign(m_.worlds.size(), {});
        } else if (name == "order") {
            need_worlds(name);
            for (const auto& chain : words(body)) {
                std::vector<std::string> parts;
                std::string cur;
                for (char c : chain) {
                    if (c == '<') {
                        parts.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
                parts.push_back(cur);
                if (parts.size() < 2) {
                    fail("order item '" + chain + "' is not of the form A<B");
                }
                for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
                    m_.covers.emplace_back(world(parts[i]), world(parts[i + 1]));
                }
            }
        } else if (name == "names") {
            for (const auto& item : split(body, ';')) {
                auto colon = item.find(':');
                const std::string n = trim(item.substr(0, colon));
                const std::string v = colon == std::string::npos ? "" : trim(item.substr(colon + 1));
                if (n.empty() || !is_number(v) || is_number(n)) {
                    fail("names entry '" + item + "' is not of the form s: 0");
                }
                m_.names[n] = static_cast<std::uint32_t>(std::stoul(v));
            }
        } else if (name == "domain") {
            need_worlds(name);
            for (const auto& item : split(body, ';')) {
                auto [w, rest] = entry(item);
                std::set<std::uint32_t> d(m_.domain[w].begin(), m_.domain[w].end());
                for (const auto& t : words(rest)) {
                    d.insert(constant(t));
                }
                m_.domain[w].assign(d.begin(), d.end());
            }
        } else if (name == "atoms") {
            need_worlds(name);
            static const std::regex atom(R"(^([A-Za-z_][A-Za-z0-9_']*)(?:\(\s*([A-Za-z0-9_']+)\s*\))?)");
            for (const auto& item : split(body, ';')) {
                auto [w, rest] = entry(item);
                std::string s = trim(rest);
                while (!s.empty()) {
                    std::smatch mt;
                    if (!std::regex_search(s, mt, atom)) {
                        fail("cannot read atom at '" + s + "'");
                    }
                    GroundAtom a{mt[1].str(), std::nullopt};
                    if (mt[2].matched) {
                        a.argument = constant(mt[2].str());
                    }
                    if (a.predicate == "false") {
                        m_.bottom |= world_bit(w);
                    } else {
                        m_.atoms[a] |= world_bit(w);
                    }
                    s = trim(mt.suffix().str());
                }
            }
        } else if (name == "bot") {
            need_worlds(name);
            for (const auto& w : words(body)) {
                m_.bottom |= world_bit(world(w));
            }
        } else {
            fail("unknown section [" + name + "]");
        }
    }

    void finish() {
        if (!seen_.contains("worlds")) {
            throw ModelError("model has no [worlds] section");
        }
        m_.close_order();
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ModelError("line " + std::to_string(line_) + ": " + msg);
    }

    void need_worlds(const std::string& name) const {
        if (!seen_.contains("worlds")) {
            fail("[" + name + "] before [worlds]");
        }
    }

    std::size_t world(const std::string& name) const {
        auto w = m_.world_index(name);
        if (!w) {
            fail("unknown world " + name);
        }
        return *w;
    }

    std::uint32_t constant(const std::string& t) const {
        if (is_number(t)) {
            return static_cast<std::uint32_t>(std::stoul(t));
        }
        auto it = m_.names.find(t);
        if (it == m_.names.end()) {
            fail("unknown term " + t);
        }
        return it->second;
    }

    std::pair<std::size_t, std::string> entry(const std::string& item) const {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            fail("entry '" + item + "' has no 'World:' prefix");
        }
        return {world(trim(item.substr(0, colon))), item.substr(colon + 1)};
    }

    KripkeModel& m_;
    std::set<std::string> seen_;
    std::size_t line_ = 0;
};

} // namespace

KripkeModel parse_model(std::string_view text) {
    KripkeModel m;
    Reader reader(m);
    std::string name;
    std::string body;
    std::size_t start = 0;
    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string t = trim(line);
        if (t.empty()) {
            continue;
        }
        if (t.front() == '[') {
            auto close = t.find(']');
            if (close == std::string::npos) {
                throw ModelError("line " + std::to_string(lineno) + ": unterminated section name");
            }
            if (!name.empty()) {
                reader.section(name, body, start);
            }
            name = t.substr(1, close - 1);
            body = t.substr(close + 1);
            start = lineno;
        } else {
            if (name.empty()) {
                throw ModelError("line " + std::to_string(lineno) + ": text outside a section");
            }
            body += ' ' + t;
        }
    }
    if (!name.empty()) {
        reader.section(name, body, start);
    }
    reader.finish();
    return m;
}

std::vector<std::string> validate_model(const KripkeModel& m) {
    std::vector<std::string> out;
    if (m.domain.size() != m.size() || m.above.size() != m.size()) {
        out.emplace_back("model tables do not match the world list");
        return out;
    }
    for (std::size_t w = 0; w < m.size(); ++w) {
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (w == v || !m.leq(w, v)) {
                continue;
            }
            for (auto c : m.domain[w]) {
                if (!m.in_domain(v, c)) {
                    out.push_back("domain not monotone: " + m.term_name(c) + " is in " + m.worlds[w] + " but not in " +
                                  m.worlds[v] + " (" + m.worlds[w] + " < " + m.worlds[v] + ")");
                }
            }
        }
    }
    auto check_up = [&](const std::string& what, WorldSet s) {
        for (std::size_t w = 0; w < m.size(); ++w) {
            if ((s & world_bit(w)) == 0) {
                continue;
            }
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m.leq(w, v) && (s & world_bit(v)) == 0) {
                    out.push_back(what + " not monotone: forced at " + m.worlds[w] + " but not at " + m.worlds[v] +
                                  " (" + m.worlds[w] + " < " + m.worlds[v] + ")");
                }
            }
        }
    };
    for (const auto& [a, s] : m.atoms) {
        if (a.argument) {
            for (std::size_t w = 0; w < m.size(); ++w) {
                if ((s & world_bit(w)) != 0 && !m.in_domain(w, *a.argument)) {
                    out.push_back("atom " + a.to_string() + " at " + m.worlds[w] + " mentions " +
                                  m.term_name(*a.argument) + ", which is not in the domain of " + m.worlds[w]);
                }
            }
        }
        check_up("atom " + a.to_string(), s);
    }
    check_up("false", m.bottom);
    return out;
}

KripkeModel load_model(std::string_view text) {
    KripkeModel m = parse_model(text);
    auto v = validate_model(m);
    if (!v.empty()) {
        throw ModelError("invalid model: " + v.front(), v);
    }
    return m;
}

KripkeModel load_model_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ModelError("cannot read " + file.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return load_model(buf.str());
    } catch (const ModelError& e) {
        throw ModelError(file.string() + ": " + e.what(), e.violations());
    }
}

std::string write_model(const KripkeModel& m) {
    std::string out = "[worlds]";
    for (const auto& w : m.worlds) {
        out += " " + w;
    }
    out += "\n[order]";
    for (const auto& [a, b] : m.covers) {
        out += " " + m.worlds[a] + "<" + m.worlds[b];
    }
    if (!m.names.empty()) {
        out += "\n[names]";
        bool first = true;
        for (const auto& [n, c] : m.names) {
            out += std::string(first ? " " : " ; ") + n + ": " + std::to_string(c);
            first = false;
        }
    }
    out += "\n[domain]";
    for (std::size_t w = 0; w < m.size(); ++w) {
        out += std::string(w == 0 ? " " : " ; ") + m.worlds[w] + ":";
        for (auto c : m.domain[w]) {
            out += " " + std::to_string(c);
        }
    }
    out += "\n[atoms]";
    bool first = true;
    for (std::size_t w = 0; w < m.size(); ++w) {
        std::string here;
        for (const auto& [a, s] : m.atoms) {
            if ((s & world_bit(w)) != 0) {
                here += " " + a.to_string();
            }
        }
        if (!here.empty()) {
            out += std::string(first ? " " : " ; ") + m.worlds[w] + ":" + here;
            first = false;
        }
    }
    out += "\n[bot]";
    if (m.bottom != 0) {
        out += " " + m.world_list(m.bottom);
    }
    return out + "\n";
}

} // namespace minlog
