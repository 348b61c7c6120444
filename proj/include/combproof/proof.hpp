#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "combproof/graph.hpp"

namespace combproof {

using VertexMap = std::map<VertexId, VertexId>;

// A candidate combinatorial proof: a coloured graph C (the witness), a
// labelled graph P (the target), and a vertex map h : C -> P.  Whether it
// actually proves anything is decided by verify().
struct CombinatorialProof {
    ColouredGraph witness;
    LabelledGraph target;
    VertexMap map;

    friend bool operator==(const CombinatorialProof&, const CombinatorialProof&) = default;
};

enum class ViolationKind {
    EmptyWitness,
    NotACograph,
    InvalidColouring,
    NotNice,
    NonAxiomaticClass,
    NotAHomomorphism,
    SkewLiftingMissing,
};

std::string_view to_string(ViolationKind kind);

// One concrete, hand-checkable defect: the kind, the vertices/edge/class
// involved, and a readable description.
struct Violation {
    ViolationKind kind;
    std::vector<VertexId> site;
    std::string detail;
};

// h maps every edge of src to an edge of dst; an edge may not collapse to
// a single vertex.  h must be total on src with image inside dst
// (UnknownVertex otherwise).
bool is_homomorphism(const VertexMap& h, const Graph& src, const Graph& dst);

struct SkewFailure {
    VertexId vertex;      // v in src
    Edge target_edge;     // h(v)w in dst with no skew lifting at v
};

// h is a skew fibration when every target edge h(v)w has a lifting
// v-w' in src with h(w')w not an edge of dst.  Requires a homomorphism
// (NotAHomomorphism otherwise).
std::optional<SkewFailure> find_skew_failure(const VertexMap& h, const Graph& src,
                                             const Graph& dst);
bool is_skew_fibration(const VertexMap& h, const Graph& src, const Graph& dst);

// Every target edge h(v)w has a unique lifting v-w' with h(w') = w exactly.
bool is_graph_fibration(const VertexMap& h, const Graph& src, const Graph& dst);

// w is non-empty and every member has exactly one neighbour inside w.
bool induces_matching(const Graph& g, const std::vector<VertexId>& w);

inline constexpr std::size_t kDefaultMaxSubsets = std::size_t{1} << 20;

// Exhaustive niceness oracle: every class has at most two vertices and no
// union of two-vertex classes induces a matching.  Returns the offending
// class or class-union on failure.  Throws InvalidColouring when the
// classes are not a stable partition, ResourceLimit when the subset count
// exceeds max_subsets.
std::optional<std::vector<VertexId>> find_nice_failure(
    const ColouredGraph& c, std::size_t max_subsets = kDefaultMaxSubsets);
bool is_nicely_coloured(const ColouredGraph& c,
                        std::size_t max_subsets = kDefaultMaxSubsets);

// nullopt when the classes form a valid colouring (partition into stable
// sets); otherwise a description of the first defect.
std::optional<Violation> find_colouring_failure(const ColouredGraph& c);

// A singleton class is axiomatic when its image is labelled 1; a pair is
// axiomatic when its images are labelled by dual literals.  Larger classes
// never are.
bool class_is_axiomatic(const VertexMap& h, const std::vector<VertexId>& cls,
                        const LabelledGraph& target);

// Checks everything: witness non-empty, a cograph, validly and nicely
// coloured, all classes axiomatic, map a homomorphism and a skew fibration.
// Returns every violation found (empty means the proof is valid).
std::vector<Violation> verify(const CombinatorialProof& proof);

std::string describe(const Violation& v);

}  // namespace combproof
