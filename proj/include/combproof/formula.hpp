#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "combproof/errors.hpp"

namespace combproof {

// ---------------------------------------------------------------- atoms ---

// An atom is a literal (a variable or its negation) or a constant 0/1.
// Atoms label the vertices of the graphs built from propositions.
struct Atom {
    enum class Kind { Pos, Neg, Zero, One };

    Kind kind = Kind::Zero;
    std::string var;  // set for Pos/Neg only

    static Atom pos(std::string name) { return {Kind::Pos, std::move(name)}; }
    static Atom neg(std::string name) { return {Kind::Neg, std::move(name)}; }
    static Atom zero() { return {Kind::Zero, {}}; }
    static Atom one() { return {Kind::One, {}}; }

    bool is_literal() const { return kind == Kind::Pos || kind == Kind::Neg; }
    bool is_one() const { return kind == Kind::One; }
    bool is_zero() const { return kind == Kind::Zero; }

    Atom dual() const;

    // Surface syntax: "p", "~p", "0", "1".
    std::string text() const;

    auto operator<=>(const Atom&) const = default;
};

// True iff a and b are dual literals (p vs ~p); constants do not count.
bool dual_literals(const Atom& a, const Atom& b);

// Parses the surface syntax of a single atom; throws Error on anything else.
Atom parse_atom(const std::string& text);

// --------------------------------------------------------- propositions ---

class Proposition;
using Prop = std::shared_ptr<const Proposition>;

// Immutable syntax tree.  Leaves are variables or constants; internal
// nodes are ~, &, |, ->.
class Proposition {
  public:
    enum class Kind { Var, Const, Not, And, Or, Implies };

    Kind kind;
    std::string name;  // Var
    bool value = false;  // Const
    Prop lhs, rhs;  // Not uses lhs only

    static Prop var(std::string name);
    static Prop constant(bool value);
    static Prop negation(Prop child);
    static Prop conj(Prop lhs, Prop rhs);
    static Prop disj(Prop lhs, Prop rhs);
    static Prop implies(Prop lhs, Prop rhs);

  private:
    Proposition(Kind kind, std::string name, bool value, Prop lhs, Prop rhs)
        : kind(kind), name(std::move(name)), value(value),
          lhs(std::move(lhs)), rhs(std::move(rhs)) {}
};

bool equal(const Prop& a, const Prop& b);

// Distinct variable names, sorted.
std::vector<std::string> variables(const Prop& phi);

// Number of tree nodes.
int tree_size(const Prop& phi);

// Fully parenthesized form, parentheses omitted around atoms only.
std::string print(const Prop& phi);

// Grammar: atoms 0, 1, identifiers [a-zA-Z][a-zA-Z0-9_]*; operators
// ~ (not), & (and), | (or), -> (implies); parentheses.  Precedence
// ~ > & > | > ->.  & and | associate left, -> associates right.
// Throws SyntaxError with a byte offset.
Prop parse_proposition(const std::string& text);

// ------------------------------------------------------------ valuation ---

using Valuation = std::map<std::string, int>;

// The extension of f to propositions: f^(0)=0, f^(1)=1, f^(~x)=1-f^(x),
// f^(x&y)=min, f^(x|y)=max, f^(x->y)=f^((~x)|y).
// Throws MissingVariable when f is not total on the variables of phi.
int evaluate(const Valuation& f, const Prop& phi);

inline constexpr int kDefaultMaxVars = 24;

// True iff evaluate(f, phi) = 1 for all 2^k valuations of the k distinct
// variables of phi.  Throws ResourceLimit when k > max_vars.
bool is_tautology_bruteforce(const Prop& phi, int max_vars = kDefaultMaxVars);

}  // namespace combproof
