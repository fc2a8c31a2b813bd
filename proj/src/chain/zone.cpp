// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/chain/zone.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace minlog {

Dbm::Dbm(std::size_t vars) : n_(vars) {
    if (vars == 0 || vars > kMax) {
        throw ZoneError("bad DBM size");
    }
    for (std::size_t a = 0; a < kMax; ++a) {
        for (std::size_t b = 0; b < kMax; ++b) {
            m_[a][b] = a == b ? 0 : kInf;
        }
    }
}

void Dbm::bound(std::size_t a, std::size_t b, std::int64_t c) { m_[a][b] = std::min(m_[a][b], c); }

bool Dbm::close() {
    for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t a = 0; a < n_; ++a) {
            if (m_[a][k] >= kInf) {
                continue;
            }
            for (std::size_t b = 0; b < n_; ++b) {
                if (m_[k][b] < kInf) {
                    m_[a][b] = std::min(m_[a][b], m_[a][k] + m_[k][b]);
                }
            }
        }
    }
    empty_ = false;
    for (std::size_t a = 0; a < n_; ++a) {
        if (m_[a][a] < 0) {
            empty_ = true;
        }
    }
    return !empty_;
}

void Dbm::forget(std::size_t v) {
    for (std::size_t a = 0; a < n_; ++a) {
        if (a != v) {
            m_[a][v] = kInf;
            m_[v][a] = kInf;
        }
    }
}

bool Dbm::satisfies(const std::array<std::int64_t, kMax>& x) const {
    if (empty_) {
        return false;
    }
    for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
            if (m_[a][b] < kInf && x[a] - x[b] > m_[a][b]) {
                return false;
            }
        }
    }
    return true;
}

bool Zone::contains(int w, std::int64_t i, std::int64_t t) const {
    return w == where && dbm.satisfies({0, i, t, 0});
}

bool Zone::subset_of(const Zone& b) const {
    if (where != b.where) {
        return false;
    }
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            if (dbm.at(x, y) > b.dbm.at(x, y)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::string range(const std::string& e, std::int64_t lo_neg, std::int64_t hi) {
    const bool has_lo = lo_neg < Dbm::kInf;
    const bool has_hi = hi < Dbm::kInf;
    const std::int64_t lo = -lo_neg;
    if (e != "t - i" && has_lo && lo == 0 && !has_hi) {
        return ""; // implied by the universe
    }
    if (has_lo && has_hi && lo == hi) {
        return e + " = " + std::to_string(lo);
    }
    if (has_lo && has_hi) {
        return std::to_string(lo) + " <= " + e + " <= " + std::to_string(hi);
    }
    if (has_lo) {
        return e + " >= " + std::to_string(lo);
    }
    if (has_hi) {
        return e + " <= " + std::to_string(hi);
    }
    return "";
}

} // namespace

std::string Zone::to_string() const {
    std::vector<std::string> parts;
    const bool chain = where == kChain;
    for (auto s : {chain ? range("i", dbm.at(kZero, kI), dbm.at(kI, kZero)) : "",
                   range("t", dbm.at(kZero, kT), dbm.at(kT, kZero)),
                   chain ? range("t - i", dbm.at(kI, kT), dbm.at(kT, kI)) : ""}) {
        if (!s.empty()) {
            parts.push_back(s);
        }
    }
    std::string out;
    for (const auto& p : parts) {
        out += (out.empty() ? "" : ", ") + p;
    }
    return out.empty() ? "all" : out;
}

std::vector<int> Space::wheres() const {
    std::vector<int> out;
    if (chain) {
        out.push_back(Zone::kChain);
    }
    for (std::size_t k = 0; k < prefix; ++k) {
        out.push_back(static_cast<int>(k));
    }
    return out;
}

Zone Space::universe(int where) const {
    Zone z;
    z.where = where;
    z.dbm.bound(kZero, kI, 0);
    z.dbm.bound(kZero, kT, 0);
    if (where != Zone::kChain) {
        z.dbm.bound(kI, kZero, 0);
    }
    z.dbm.close();
    return z;
}

ZoneSet ZoneSet::all(const Space& s) {
    ZoneSet out;
    for (int w : s.wheres()) {
        out.add(s.universe(w));
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::of(Zone z) {
    ZoneSet out;
    z.dbm.close();
    out.add(std::move(z));
    out.normalize();
    return out;
}

void ZoneSet::add(Zone z) {
    if (!z.dbm.empty()) {
        zones_.push_back(std::move(z));
    }
}

void ZoneSet::normalize() {
    std::vector<Zone> kept;
    for (std::size_t a = 0; a < zones_.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < zones_.size() && !drop; ++b) {
            if (a == b || !zones_[a].subset_of(zones_[b])) {
                continue;
            }
            // Equal zones: keep the first copy only.
            drop = !zones_[b].subset_of(zones_[a]) || b < a;
        }
        if (!drop) {
            kept.push_back(zones_[a]);
        }
    }
    auto key = [](const Zone& z) {
        std::array<std::int64_t, 10> k{};
        k[0] = z.where;
        std::size_t n = 1;
        for (std::size_t x = 0; x < 3; ++x) {
            for (std::size_t y = 0; y < 3; ++y) {
                if (x != y) {
                    k[n++] = z.dbm.at(x, y);
                }
            }
        }
        return k;
    };
    std::sort(kept.begin(), kept.end(), [&](const Zone& a, const Zone& b) { return key(a) < key(b); });
    zones_ = std::move(kept);
}

bool ZoneSet::contains(int where, std::int64_t i, std::int64_t t) const {
    return std::any_of(zones_.begin(), zones_.end(), [&](const Zone& z) { return z.contains(where, i, t); });
}

ZoneSet ZoneSet::unite(const ZoneSet& b) const {
    ZoneSet out = *this;
    for (const auto& z : b.zones_) {
        out.zones_.push_back(z);
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::intersect(const ZoneSet& b) const {
    ZoneSet out;
    for (const auto& x : zones_) {
        for (const auto& y : b.zones_) {
            if (x.where != y.where) {
                continue;
            }
            Zone z = x;
            for (std::size_t p = 0; p < 3; ++p) {
                for (std::size_t q = 0; q < 3; ++q) {
                    z.dbm.bound(p, q, y.dbm.at(p, q));
                }
            }
            z.dbm.close();
            out.add(std::move(z));
        }
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::complement(const Space& s) const {
    ZoneSet out;
    for (int w : s.wheres()) {
        const Zone u = s.universe(w);
        ZoneSet cur = ZoneSet::of(u);
        for (const auto& z : zones_) {
            if (z.where != w) {
                continue;
            }
            // Not (x_a - x_b <= c) is x_b - x_a <= -c - 1.
            ZoneSet pieces;
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t b = 0; b < 3; ++b) {
                    if (a == b || z.dbm.at(a, b) >= u.dbm.at(a, b)) {
                        continue;
                    }
                    Zone p = u;
                    p.dbm.bound(b, a, -z.dbm.at(a, b) - 1);
                    p.dbm.close();
                    pieces.add(std::move(p));
                }
            }
            pieces.normalize();
            cur = cur.intersect(pieces);
            if (cur.empty()) {
                break;
            }
        }
        for (auto& z : cur.zones_) {
            out.zones_.push_back(std::move(z));
        }
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::exists_t() const {
    ZoneSet out;
    for (Zone z : zones_) {
        z.dbm.forget(kT);
        z.dbm.bound(kZero, kT, 0);
        z.dbm.close();
        out.add(std::move(z));
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::at_term(std::int64_t c) const {
    ZoneSet out;
    for (Zone z : zones_) {
        z.dbm.bound(kT, kZero, c);
        z.dbm.bound(kZero, kT, -c);
        if (!z.dbm.close()) {
            continue;
        }
        z.dbm.forget(kT);
        z.dbm.bound(kZero, kT, 0);
        z.dbm.close();
        out.add(std::move(z));
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::restrict_to(int where, int to) const {
    ZoneSet out;
    for (Zone z : zones_) {
        if (z.where == where) {
            z.where = to;
            out.add(std::move(z));
        }
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::chain_future(bool ascending) const {
    constexpr std::size_t kJ = 3;
    ZoneSet out;
    for (const auto& z : zones_) {
        if (z.where != Zone::kChain) {
            continue;
        }
        // Old i becomes j; the new i ranges over worlds below j.
        const std::size_t map[3] = {kZero, kJ, kT};
        Dbm d(4);
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                if (a != b) {
                    d.bound(map[a], map[b], z.dbm.at(a, b));
                }
            }
        }
        d.bound(kZero, kI, 0);
        if (ascending) {
            d.bound(kI, kJ, 0);
        } else {
            d.bound(kJ, kI, 0);
        }
        if (!d.close()) {
            continue;
        }
        Zone r;
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t b = 0; b < 3; ++b) {
                if (a != b) {
                    r.dbm.bound(a, b, d.at(a, b));
                }
            }
        }
        r.dbm.close();
        out.add(std::move(r));
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::chain_any_to(int to) const {
    ZoneSet out;
    for (Zone z : zones_) {
        if (z.where != Zone::kChain) {
            continue;
        }
        z.dbm.forget(kI);
        z.dbm.bound(kI, kZero, 0);
        z.dbm.bound(kZero, kI, 0);
        z.dbm.close();
        z.where = to;
        out.add(std::move(z));
    }
    out.normalize();
    return out;
}

ZoneSet ZoneSet::chain_forall_to(int where, const Space& s) const {
    const Space chain_only{true, 0};
    const ZoneSet missing = restrict_to(Zone::kChain, Zone::kChain).complement(chain_only).chain_any_to(where);
    return ZoneSet::of(s.universe(where)).minus(missing, s);
}

std::string ZoneSet::to_string(const std::vector<std::string>& prefix_names) const {
    if (zones_.empty()) {
        return "none";
    }
    std::string out;
    for (const auto& z : zones_) {
        if (!out.empty()) {
            out += " | ";
        }
        if (z.where != Zone::kChain) {
            const auto w = static_cast<std::size_t>(z.where);
            out += (w < prefix_names.size() ? prefix_names[w] : "#" + std::to_string(w)) + ": ";
        }
        out += z.to_string();
    }
    return out;
}

namespace {

struct Linear {
    std::int64_t t = 0;
    std::int64_t i = 0;
    std::int64_t k = 0;
};

Linear parse_linear(std::string_view s) {
    Linear out;
    std::size_t p = 0;
    int sign = 1;
    bool expect_term = true;
    while (p < s.size()) {
        const char c = s[p];
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++p;
        } else if (c == '+' || c == '-') {
            if (!expect_term) {
                expect_term = true;
                sign = 1;
            }
            sign = c == '-' ? -sign : sign;
            ++p;
        } else if (expect_term && (c == 't' || c == 'i')) {
            (c == 't' ? out.t : out.i) += sign;
            ++p;
            expect_term = false;
            sign = 1;
        } else if (expect_term && std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::int64_t v = 0;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p])) != 0) {
                v = v * 10 + (s[p] - '0');
                ++p;
            }
            out.k += sign * v;
            expect_term = false;
            sign = 1;
        } else {
            throw ZoneError("cannot read '" + std::string(s) + "'");
        }
    }
    if (expect_term) {
        throw ZoneError("incomplete expression '" + std::string(s) + "'");
    }
    return out;
}

// Adds e <= 0 for e = a t + b i + k.
void constrain(Zone& z, const Linear& e) {
    const std::int64_t c = -e.k;
    std::size_t p = 0;
    std::size_t q = 0;
    if (e.t == 1 && e.i == 0) {
        p = kT, q = kZero;
    } else if (e.t == -1 && e.i == 0) {
        p = kZero, q = kT;
    } else if (e.t == 0 && e.i == 1) {
        p = kI, q = kZero;
    } else if (e.t == 0 && e.i == -1) {
        p = kZero, q = kI;
    } else if (e.t == 1 && e.i == -1) {
        p = kT, q = kI;
    } else if (e.t == -1 && e.i == 1) {
        p = kI, q = kT;
    } else if (e.t == 0 && e.i == 0) {
        if (c < 0) {
            z.dbm.bound(kZero, kZero, -1);
        }
        return;
    } else {
        throw ZoneError("not a difference constraint");
    }
    z.dbm.bound(p, q, c);
}

Linear negate(Linear e) { return {-e.t, -e.i, -e.k}; }

void apply_constraint(Zone& z, std::string_view text) {
    static const char* ops[] = {"<=", ">=", "=", "<", ">"};
    for (const char* op : ops) {
        const auto at = text.find(op);
        if (at == std::string_view::npos) {
            continue;
        }
        const std::string_view o(op);
        const Linear l = parse_linear(text.substr(0, at));
        const Linear r = parse_linear(text.substr(at + o.size()));
        const Linear d{l.t - r.t, l.i - r.i, l.k - r.k}; // l - r
        if (o == "<=") {
            constrain(z, d);
        } else if (o == ">=") {
            constrain(z, negate(d));
        } else if (o == "=") {
            constrain(z, d);
            constrain(z, negate(d));
        } else if (o == "<") {
            constrain(z, {d.t, d.i, d.k + 1});
        } else {
            Linear n = negate(d);
            constrain(z, {n.t, n.i, n.k + 1});
        }
        return;
    }
    throw ZoneError("constraint '" + std::string(text) + "' has no comparison");
}

std::string strip(std::string_view s) {
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

} // namespace

ZoneSet ZoneSet::parse(std::string_view text, const Space& s, int where) {
    ZoneSet out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        const std::string alt = strip(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
        Zone z = s.universe(where);
        if (alt == "none" || alt == "false") {
            z.dbm.bound(kZero, kZero, -1);
        } else if (alt != "all" && alt != "true") {
            std::size_t p = 0;
            while (p <= alt.size()) {
                std::size_t comma = alt.find_first_of(",&", p);
                const std::string c = strip(std::string_view(alt).substr(p, comma == std::string::npos ? std::string::npos : comma - p));
                if (c.empty()) {
                    throw ZoneError("empty constraint in '" + std::string(text) + "'");
                }
                apply_constraint(z, c);
                if (comma == std::string::npos) {
                    break;
                }
                p = comma + 1;
            }
        }
        z.dbm.close();
        out.add(std::move(z));
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    out.normalize();
    return out;
}

} // namespace minlog
