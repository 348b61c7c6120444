#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "combproof/formula.hpp"

namespace combproof {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized: first < second

Edge make_edge(VertexId a, VertexId b);

// Finite simple graph over integer vertex ids.  Vertices are kept sorted;
// edges are normalized unordered pairs.
struct Graph {
    std::vector<VertexId> vertices;
    std::set<Edge> edges;

    bool has_vertex(VertexId v) const;
    bool adjacent(VertexId v, VertexId w) const;  // false when v == w
    std::vector<VertexId> neighbours(VertexId v) const;

    friend bool operator==(const Graph&, const Graph&) = default;
};

// Graph whose every vertex carries an atom label.
struct LabelledGraph : Graph {
    std::map<VertexId, Atom> labels;

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;
};

// Graph whose vertex set is partitioned into colour classes; vertices in
// the same class are never adjacent.
struct ColouredGraph : Graph {
    std::vector<std::vector<VertexId>> classes;

    friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
};

LabelledGraph single_vertex(VertexId id, Atom label);

// Sorts each class and orders classes by their least member.
void canonicalize_classes(ColouredGraph& g);

// ------------------------------------------------------------ operators ---
// union keeps the two vertex/edge sets side by side; join additionally adds
// every cross edge.  Vertex id sets must be disjoint (IdCollision otherwise);
// labels and classes are inherited.

Graph graph_union(const Graph& g, const Graph& h);
Graph graph_join(const Graph& g, const Graph& h);
LabelledGraph graph_union(const LabelledGraph& g, const LabelledGraph& h);
LabelledGraph graph_join(const LabelledGraph& g, const LabelledGraph& h);
ColouredGraph graph_union(const ColouredGraph& g, const ColouredGraph& h);
ColouredGraph graph_join(const ColouredGraph& g, const ColouredGraph& h);

// Complements the edge set; labels are unchanged.
Graph complement(const Graph& g);
LabelledGraph complement(const LabelledGraph& g);

// Complements the graph and replaces every label by its dual.
LabelledGraph negate(const LabelledGraph& g);

// The graph of a proposition: atoms become single labelled vertices,
// & becomes join, | becomes union, ~ negates, x -> y reads as (~x) | y.
// Vertex ids follow the left-to-right order of atom occurrences (0-based).
LabelledGraph graph_of(const Prop& phi);

// ------------------------------------------------------------- subgraphs ---

// Induced subgraph on w (labels/classes restricted; empty classes dropped).
// Throws UnknownVertex when w is not a subset of the vertex set.
Graph induced(const Graph& g, const std::vector<VertexId>& w);
LabelledGraph induced(const LabelledGraph& g, const std::vector<VertexId>& w);
ColouredGraph induced(const ColouredGraph& g, const std::vector<VertexId>& w);

// Vertex sets of the connected components, ordered by least vertex.
std::vector<std::vector<VertexId>> component_vertex_sets(const Graph& g);

template <class G>
std::vector<G> components(const G& g) {
    std::vector<G> out;
    for (const auto& set : component_vertex_sets(g)) out.push_back(induced(g, set));
    return out;
}

// Shifts every vertex id by offset, preserving structure, labels, classes.
Graph relabel_fresh(const Graph& g, int offset);
LabelledGraph relabel_fresh(const LabelledGraph& g, int offset);
ColouredGraph relabel_fresh(const ColouredGraph& g, int offset);

// --------------------------------------------------------------- cograph ---

// Reference recognizer: a graph is a cograph iff it is non-empty and no
// four distinct vertices induce a path on four vertices.  O(n^4) scan.
bool is_cograph(const Graph& g);

// The four vertices of an induced P4, if any, in path order.
std::optional<std::array<VertexId, 4>> find_induced_p4(const Graph& g);

// Decomposition tree of a cograph.  Children of a Union are never Unions,
// children of a Join never Joins, and children are ordered by least leaf,
// so the tree is canonical.
struct Cotree {
    enum class Kind { Leaf, Union, Join };

    Kind kind = Kind::Leaf;
    VertexId leaf = -1;
    std::vector<Cotree> children;

    std::vector<VertexId> leaves() const;  // ascending
    VertexId min_leaf() const;

    friend bool operator==(const Cotree&, const Cotree&) = default;
};

// Throws NotACograph when some multi-vertex subinstance is connected with a
// connected complement (and for the empty graph).  Doubles as the fast
// cograph recognizer.
Cotree cotree(const Graph& g);

// Rebuilds the plain graph a cotree denotes; inverse of cotree().
Graph rebuild(const Cotree& t);

}  // namespace combproof
