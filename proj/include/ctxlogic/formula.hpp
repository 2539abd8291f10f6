// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_FORMULA_HPP
#define CTXLOGIC_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "ctxlogic/error.hpp"

namespace ctxlogic {

/// AST of the propositional language: atoms (names of physical magnitudes,
/// bound to contexts by a model) combined with &, |, ->, ~.
struct Formula {
    enum class Kind { Atom, And, Or, Implies, Not };

    Kind kind;
    std::string name;                    // Atom only
    std::shared_ptr<const Formula> lhs;  // And/Or/Implies both, Not child
    std::shared_ptr<const Formula> rhs;

    static std::shared_ptr<const Formula> atom(std::string name);
    static std::shared_ptr<const Formula> make(Kind k, std::shared_ptr<const Formula> l,
                                               std::shared_ptr<const Formula> r = nullptr);
};

using FormulaPtr = std::shared_ptr<const Formula>;

/// Recursive-descent parser for
///   formula := imp ; imp := or [ "->" imp ] ; or := and { "|" and } ;
///   and := neg { "&" neg } ; neg := "~" neg | "(" formula ")" | IDENT
/// Precedence ~ > & > | > ->, with -> right-associative. The Unicode
/// aliases ¬ ∧ ∨ → are accepted. Errors carry the byte offset.
FormulaPtr parse_formula(std::string_view text);

/// Minimal-parentheses ASCII rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Atom names occurring in f, sorted.
std::set<std::string> atom_names(const Formula& f);

bool equal(const Formula& a, const Formula& b);

} // namespace ctxlogic

#endif
