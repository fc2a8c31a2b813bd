// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace minlog {

// A first-order term. There are no function symbols: a term is either a
// variable or a natural-number constant.
class Term {
  public:
    enum class Kind { Variable, Constant };

    static Term variable(std::string name);
    static Term constant(std::uint32_t index);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_variable() const { return kind_ == Kind::Variable; }
    [[nodiscard]] bool is_constant() const { return kind_ == Kind::Constant; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] std::uint32_t index() const { return index_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Term&, const Term&) = default;

  private:
    Term(Kind kind, std::string name, std::uint32_t index) : kind_(kind), name_(std::move(name)), index_(index) {}

    Kind kind_;
    std::string name_;
    std::uint32_t index_;
};

// Immutable formula of first-order minimal logic. Negation is not a
// constructor: ~F is Implies(F, Bottom). Copies share structure.
class Formula {
  public:
    enum class Kind { Bottom, Atom, Implies, And, Or, Forall, Exists };

    static Formula bottom();
    static Formula atom(std::string predicate);
    static Formula atom(std::string predicate, Term argument);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula negation(Formula f);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] bool is(Kind k) const { return kind() == k; }
    [[nodiscard]] bool is_negation() const;
    [[nodiscard]] bool is_quantifier() const { return is(Kind::Forall) || is(Kind::Exists); }
    [[nodiscard]] bool is_binary() const { return is(Kind::Implies) || is(Kind::And) || is(Kind::Or); }

    // Predicate name for atoms, bound variable for quantifiers.
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] const std::optional<Term>& argument() const;
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;
    [[nodiscard]] const Formula& body() const;

    [[nodiscard]] std::set<std::string> free_variables() const;
    [[nodiscard]] bool has_free(std::string_view var) const;
    // Every variable name occurring anywhere, bound or free.
    [[nodiscard]] std::set<std::string> all_variables() const;
    [[nodiscard]] std::set<std::uint32_t> constants() const;
    [[nodiscard]] std::size_t node_count() const;
    [[nodiscard]] bool is_closed() const { return free_variables().empty(); }

    // Structural identity (bound names must match too). Use alpha_equal for
    // the logical notion of formula equality.
    [[nodiscard]] bool identical(const Formula& other) const;

  private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::string name;
    std::optional<Term> argument;
    std::optional<Formula> lhs;
    std::optional<Formula> rhs;
};

// True iff f and g differ only in the names of bound variables.
bool alpha_equal(const Formula& f, const Formula& g);

// Capture-avoiding substitution f[var := t].
Formula substitute(const Formula& f, std::string_view var, const Term& t);

// A name derived from `base` that is not in `avoid` (base', base'', ...).
std::string fresh_variable(const std::string& base, const std::set<std::string>& avoid);

} // namespace minlog
