#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace combproof {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lexical or grammatical problem in a formula; offset is a byte position
// into the original input.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, std::size_t offset)
        : Error(what + " (offset " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct MissingVariable : Error {
    explicit MissingVariable(const std::string& name)
        : Error("valuation does not cover variable '" + name + "'"), name(name) {}
    std::string name;
};

struct ResourceLimit : Error {
    using Error::Error;
};

struct IdCollision : Error {
    using Error::Error;
};

struct UnknownVertex : Error {
    using Error::Error;
};

struct NotACograph : Error {
    using Error::Error;
};

struct NotAHomomorphism : Error {
    using Error::Error;
};

struct InvalidColouring : Error {
    using Error::Error;
};

struct NotAPortion : Error {
    using Error::Error;
};

struct SingleColourClass : Error {
    using Error::Error;
};

struct InvalidProof : Error {
    using Error::Error;
};

// A proposition/graph that was required to be true is not; carries the
// offending clause (vertex ids of the target graph).
struct NotTrue : Error {
    NotTrue(const std::string& what, std::vector<int> clause)
        : Error(what), false_clause(std::move(clause)) {}
    std::vector<int> false_clause;
};

// An internal step that theory guarantees cannot fail did fail.  Never
// caught internally; surfacing it loudly is the point.
struct InternalInvariantBroken : Error {
    using Error::Error;
};

}  // namespace combproof
