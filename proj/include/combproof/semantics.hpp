#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "combproof/graph.hpp"

namespace combproof {

// A clause is a maximal stable vertex set of a labelled graph.
using Clause = std::vector<VertexId>;  // ascending

inline constexpr std::size_t kDefaultMaxClauses = 1'000'000;

// All clauses, computed over the cotree: a union node combines one clause
// per child, a join node collects the children's clauses.  Requires a
// non-empty cograph (NotACograph).  Throws ResourceLimit when the clause
// count exceeds max_clauses.
std::set<Clause> clauses(const LabelledGraph& g,
                         std::size_t max_clauses = kDefaultMaxClauses);

// A clause is true when it contains a 1-labelled vertex or two vertices
// labelled by dual literals.  Throws UnknownVertex for foreign ids.
bool clause_is_true(const LabelledGraph& g, const Clause& w);

// A labelled graph is true when all of its clauses are true.
bool graph_is_true(const LabelledGraph& g,
                   std::size_t max_clauses = kDefaultMaxClauses);

// First false clause in clause order, if any.
std::optional<Clause> find_false_clause(const LabelledGraph& g,
                                        std::size_t max_clauses = kDefaultMaxClauses);

}  // namespace combproof
