#pragma once

#include "combproof/proof.hpp"

namespace combproof {

// The restriction of h : src -> dst to an induced subgraph of dst: the
// domain is the induced preimage, the map is h itself.
struct Restriction {
    Graph domain;
    VertexMap map;
};

Restriction restrict_map(const VertexMap& h, const Graph& src, const Graph& dst,
                         const std::vector<VertexId>& target_subset);

// A fusion plan: two coloured graphs plus a portion of each (a portion is a
// vertex set with no edges to the rest of its side).  Fusing adds all edges
// between the two portions; empty portions give the plain union, full
// portions the join.
struct FusionSpec {
    ColouredGraph left;
    ColouredGraph right;
    std::vector<VertexId> left_portion;
    std::vector<VertexId> right_portion;

    friend bool operator==(const FusionSpec&, const FusionSpec&) = default;
};

// Throws NotAPortion when a portion has edges to the rest of its side,
// IdCollision when the two sides share vertex ids.
ColouredGraph fusion(const FusionSpec& spec);

// Splits a nice cograph with at least two colour classes into two nice
// halves whose fusion reproduces it exactly, following the block-graph
// bridge construction.  Throws SingleColourClass below two classes and
// InternalInvariantBroken when no matching edge of the block graph is a
// bridge (impossible for a nice input).
FusionSpec fusion_decompose(const ColouredGraph& c);

// Polynomial niceness recognizer: a validly coloured cograph is nicely
// coloured iff iterated fusion decomposition reaches single-class pieces.
// Cross-validated against the exhaustive is_nicely_coloured oracle.
bool is_nicely_coloured_fast(const ColouredGraph& c);

// h is shallow when the preimage of every component of dst has at most one
// component.  Requires a homomorphism (NotAHomomorphism otherwise).
bool is_shallow(const VertexMap& h, const Graph& src, const Graph& dst);

// Replaces the target by one disjoint copy per witness component and sends
// component i into copy i.  The witness is unchanged; the result verifies,
// is shallow, and its target is true iff the original target is.  Requires
// a valid proof (InvalidProof otherwise).
CombinatorialProof shallow_normalize(const CombinatorialProof& proof);

}  // namespace combproof
