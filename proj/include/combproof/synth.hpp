#pragma once

#include "combproof/proof.hpp"
#include "combproof/semantics.hpp"

namespace combproof {

// Builds a combinatorial proof of a true labelled cograph by induction on
// the number of edges: an edgeless graph is a single true clause, proved by
// one axiomatic class; otherwise split P as (P1 & P2) | Q, prove Q alone
// when it is true, and otherwise fuse proofs of P1|Q and P2|Q along the
// preimages of P1 and P2.  Deterministic; the result always verifies.
// Throws NotTrue (with a false clause) when the graph is not true,
// NotACograph for non-cographs, ResourceLimit past the clause cap.
CombinatorialProof synthesize(const LabelledGraph& target,
                              std::size_t max_clauses = kDefaultMaxClauses);

// synthesize(graph_of(phi)).
CombinatorialProof prove(const Prop& phi,
                         std::size_t max_clauses = kDefaultMaxClauses);

}  // namespace combproof
