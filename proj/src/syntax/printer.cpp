// Copyright (c) minlog contributors.
// SPDX-License-Identifier: Apache-2.0
#include "minlog/syntax/printer.hpp"

namespace minlog {

namespace {

// Binding strength of the printed form; operands weaker than required are
// parenthesized.
enum Level { Quant = 0, Imp = 1, Disj = 2, Conj = 3, Neg = 4, Atomic = 5 };

struct Glyphs {
    const char* bottom;
    const char* neg;
    const char* conj;
    const char* disj;
    const char* imp;
    const char* forall;
    const char* exists;
};

constexpr Glyphs kAscii{"false", "~", " & ", " | ", " -> ", "forall ", "exists "};
constexpr Glyphs kUnicode{"⊥", "¬", " ∧ ", " ∨ ", " → ", "∀", "∃"};

Level level_of(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Atom: return Atomic;
    case Formula::Kind::Implies: return f.is_negation() ? Neg : Imp;
    case Formula::Kind::And: return Conj;
    case Formula::Kind::Or: return Disj;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return Quant;
    }
    return Atomic;
}

void emit(const Formula& f, Level need, const Glyphs& g, std::string& out) {
    const bool paren = level_of(f) < need;
    if (paren) {
        out += '(';
    }
    switch (f.kind()) {
    case Formula::Kind::Bottom: out += g.bottom; break;
    case Formula::Kind::Atom:
        out += f.name();
        if (f.argument()) {
            out += '(';
            out += f.argument()->to_string();
            out += ')';
        }
        break;
    case Formula::Kind::Implies:
        if (f.is_negation()) {
            out += g.neg;
            emit(f.lhs(), Neg, g, out);
        } else {
            emit(f.lhs(), Disj, g, out);
            out += g.imp;
            emit(f.rhs(), Quant, g, out);
        }
        break;
    case Formula::Kind::And:
        emit(f.lhs(), Conj, g, out);
        out += g.conj;
        emit(f.rhs(), Neg, g, out);
        break;
    case Formula::Kind::Or:
        emit(f.lhs(), Disj, g, out);
        out += g.disj;
        emit(f.rhs(), Conj, g, out);
        break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
        out += f.is(Formula::Kind::Forall) ? g.forall : g.exists;
        out += f.name();
        out += ". ";
        emit(f.body(), Quant, g, out);
        break;
    }
    if (paren) {
        out += ')';
    }
}

} // namespace

std::string to_string(const Formula& f, PrintStyle style) {
    std::string out;
    emit(f, Quant, style == PrintStyle::Unicode ? kUnicode : kAscii, out);
    return out;
}

} // namespace minlog
