// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minlog {

// Integer difference-bound matrix over x0 = 0 and up to three variables.
// m(a, b) bounds x_a - x_b from above; kInf means unconstrained.
class Dbm {
  public:
    static constexpr std::int64_t kInf = INT64_MAX / 4;
    static constexpr std::size_t kMax = 4;

    explicit Dbm(std::size_t vars = 3);

    [[nodiscard]] std::size_t vars() const { return n_; }
    [[nodiscard]] std::int64_t at(std::size_t a, std::size_t b) const { return m_[a][b]; }
    // Tightens x_a - x_b <= c.
    void bound(std::size_t a, std::size_t b, std::int64_t c);
    // All-pairs tightening; false iff the constraints are unsatisfiable.
    bool close();
    [[nodiscard]] bool empty() const { return empty_; }
    // Removes every constraint on variable v (after close(), this is exact
    // integer existential projection).
    void forget(std::size_t v);
    [[nodiscard]] bool satisfies(const std::array<std::int64_t, kMax>& x) const;

    friend bool operator==(const Dbm&, const Dbm&) = default;

  private:
    std::size_t n_;
    std::array<std::array<std::int64_t, kMax>, kMax> m_{};
    bool empty_ = false;
};

// Variables of a zone.
inline constexpr std::size_t kZero = 0;
inline constexpr std::size_t kI = 1; // chain index
inline constexpr std::size_t kT = 2; // term

// A convex set of points (world, t). `where` is kChain for chain worlds
// (indexed by i >= 0) or the index of an explicit prefix world (i = 0).
struct Zone {
    static constexpr int kChain = -1;

    int where = kChain;
    Dbm dbm{3};

    [[nodiscard]] bool contains(int w, std::int64_t i, std::int64_t t) const;
    // dbm of a is entrywise at most dbm of b (both closed).
    [[nodiscard]] bool subset_of(const Zone& b) const;
    [[nodiscard]] std::string to_string() const;
};

// The worlds a ZoneSet ranges over.
struct Space {
    bool chain = true;
    std::size_t prefix = 0;

    [[nodiscard]] std::vector<int> wheres() const;
    // i >= 0, t >= 0 on the chain; i = 0, t >= 0 on a prefix world.
    [[nodiscard]] Zone universe(int where) const;
};

class ZoneError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Finite union of zones, kept without empty or subsumed members and in a
// deterministic order.
class ZoneSet {
  public:
    ZoneSet() = default;

    static ZoneSet none() { return {}; }
    static ZoneSet all(const Space& s);
    static ZoneSet of(Zone z);
    // Constraint text over t and i, e.g. "t <= i", "t - i >= 2, i >= 1 | t = 0",
    // "all" or "none", placed at `where`.
    static ZoneSet parse(std::string_view text, const Space& s, int where = Zone::kChain);

    [[nodiscard]] const std::vector<Zone>& zones() const { return zones_; }
    [[nodiscard]] bool empty() const { return zones_.empty(); }
    [[nodiscard]] bool contains(int where, std::int64_t i, std::int64_t t) const;

    [[nodiscard]] ZoneSet unite(const ZoneSet& b) const;
    [[nodiscard]] ZoneSet intersect(const ZoneSet& b) const;
    [[nodiscard]] ZoneSet complement(const Space& s) const;
    [[nodiscard]] ZoneSet minus(const ZoneSet& b, const Space& s) const { return intersect(b.complement(s)); }
    [[nodiscard]] bool subset_of(const ZoneSet& b, const Space& s) const { return minus(b, s).empty(); }
    [[nodiscard]] bool same_points(const ZoneSet& b, const Space& s) const {
        return subset_of(b, s) && b.subset_of(*this, s);
    }

    // Exists t: the set of worlds, as a cylinder over all t >= 0.
    [[nodiscard]] ZoneSet exists_t() const;
    // Points (w, c) turned into a cylinder: the worlds w with (w, c) inside.
    [[nodiscard]] ZoneSet at_term(std::int64_t c) const;
    // Forall i on the chain: the terms t with (i, t) inside for every chain
    // index, placed on prefix world `where`.
    [[nodiscard]] ZoneSet chain_forall_to(int where, const Space& s) const;
    // Only the zones at `where`, moved to `to`.
    [[nodiscard]] ZoneSet restrict_to(int where, int to) const;
    // Exists j reachable from i along the chain order (ascending: j >= i,
    // descending: j <= i), chain zones only.
    [[nodiscard]] ZoneSet chain_future(bool ascending) const;
    // Exists i: chain zones projected to terms, placed on prefix world `to`.
    [[nodiscard]] ZoneSet chain_any_to(int to) const;

    [[nodiscard]] std::string to_string(const std::vector<std::string>& prefix_names = {}) const;

  private:
    void add(Zone z);
    void normalize();
    std::vector<Zone> zones_;
};

} // namespace minlog
