#include "combproof/graph.hpp"

#include <algorithm>
#include <array>

namespace combproof {

Edge make_edge(VertexId a, VertexId b) {
    if (a == b) throw Error("loop edge on vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

bool Graph::has_vertex(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Graph::adjacent(VertexId v, VertexId w) const {
    if (v == w) return false;
    return edges.count(make_edge(v, w)) != 0;
}

std::vector<VertexId> Graph::neighbours(VertexId v) const {
    std::vector<VertexId> out;
    for (const Edge& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabelledGraph single_vertex(VertexId id, Atom label) {
    LabelledGraph g;
    g.vertices = {id};
    g.labels.emplace(id, std::move(label));
    return g;
}

void canonicalize_classes(ColouredGraph& g) {
    for (auto& cls : g.classes) std::sort(cls.begin(), cls.end());
    std::sort(g.classes.begin(), g.classes.end());
}

namespace {

void require_disjoint(const Graph& g, const Graph& h) {
    std::vector<VertexId> common;
    std::set_intersection(g.vertices.begin(), g.vertices.end(),
                          h.vertices.begin(), h.vertices.end(),
                          std::back_inserter(common));
    if (!common.empty())
        throw IdCollision("vertex id " + std::to_string(common.front()) +
                          " appears on both sides");
}

Graph merge_base(const Graph& g, const Graph& h, bool join) {
    require_disjoint(g, h);
    Graph out;
    std::merge(g.vertices.begin(), g.vertices.end(),
               h.vertices.begin(), h.vertices.end(),
               std::back_inserter(out.vertices));
    out.edges = g.edges;
    out.edges.insert(h.edges.begin(), h.edges.end());
    if (join)
        for (VertexId v : g.vertices)
            for (VertexId w : h.vertices) out.edges.insert(make_edge(v, w));
    return out;
}

}  // namespace

Graph graph_union(const Graph& g, const Graph& h) { return merge_base(g, h, false); }
Graph graph_join(const Graph& g, const Graph& h) { return merge_base(g, h, true); }

LabelledGraph graph_union(const LabelledGraph& g, const LabelledGraph& h) {
    LabelledGraph out;
    static_cast<Graph&>(out) = merge_base(g, h, false);
    out.labels = g.labels;
    out.labels.insert(h.labels.begin(), h.labels.end());
    return out;
}

LabelledGraph graph_join(const LabelledGraph& g, const LabelledGraph& h) {
    LabelledGraph out;
    static_cast<Graph&>(out) = merge_base(g, h, true);
    out.labels = g.labels;
    out.labels.insert(h.labels.begin(), h.labels.end());
    return out;
}

ColouredGraph graph_union(const ColouredGraph& g, const ColouredGraph& h) {
    ColouredGraph out;
    static_cast<Graph&>(out) = merge_base(g, h, false);
    out.classes = g.classes;
    out.classes.insert(out.classes.end(), h.classes.begin(), h.classes.end());
    canonicalize_classes(out);
    return out;
}

ColouredGraph graph_join(const ColouredGraph& g, const ColouredGraph& h) {
    ColouredGraph out;
    static_cast<Graph&>(out) = merge_base(g, h, true);
    out.classes = g.classes;
    out.classes.insert(out.classes.end(), h.classes.begin(), h.classes.end());
    canonicalize_classes(out);
    return out;
}

namespace {

std::set<Edge> complement_edges(const Graph& g) {
    std::set<Edge> out;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            Edge e = make_edge(g.vertices[i], g.vertices[j]);
            if (!g.edges.count(e)) out.insert(e);
        }
    return out;
}

}  // namespace

Graph complement(const Graph& g) {
    Graph out;
    out.vertices = g.vertices;
    out.edges = complement_edges(g);
    return out;
}

LabelledGraph complement(const LabelledGraph& g) {
    LabelledGraph out = g;
    out.edges = complement_edges(g);
    return out;
}

LabelledGraph negate(const LabelledGraph& g) {
    LabelledGraph out = complement(g);
    for (auto& [v, label] : out.labels) label = label.dual();
    return out;
}

namespace {

LabelledGraph build_graph(const Prop& phi, VertexId& next_id) {
    switch (phi->kind) {
        case Proposition::Kind::Var:
            return single_vertex(next_id++, Atom::pos(phi->name));
        case Proposition::Kind::Const:
            return single_vertex(next_id++, phi->value ? Atom::one() : Atom::zero());
        case Proposition::Kind::Not:
            return negate(build_graph(phi->lhs, next_id));
        case Proposition::Kind::And: {
            LabelledGraph lhs = build_graph(phi->lhs, next_id);
            return graph_join(lhs, build_graph(phi->rhs, next_id));
        }
        case Proposition::Kind::Or: {
            LabelledGraph lhs = build_graph(phi->lhs, next_id);
            return graph_union(lhs, build_graph(phi->rhs, next_id));
        }
        case Proposition::Kind::Implies: {
            LabelledGraph lhs = negate(build_graph(phi->lhs, next_id));
            return graph_union(lhs, build_graph(phi->rhs, next_id));
        }
    }
    throw Error("corrupt proposition");
}

}  // namespace

LabelledGraph graph_of(const Prop& phi) {
    VertexId next_id = 0;
    return build_graph(phi, next_id);
}

namespace {

void require_subset(const Graph& g, const std::vector<VertexId>& w) {
    for (VertexId v : w)
        if (!g.has_vertex(v))
            throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
}

Graph induced_base(const Graph& g, const std::vector<VertexId>& w) {
    require_subset(g, w);
    Graph out;
    out.vertices = w;
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                       out.vertices.end());
    for (const Edge& e : g.edges)
        if (std::binary_search(out.vertices.begin(), out.vertices.end(), e.first) &&
            std::binary_search(out.vertices.begin(), out.vertices.end(), e.second))
            out.edges.insert(e);
    return out;
}

}  // namespace

Graph induced(const Graph& g, const std::vector<VertexId>& w) {
    return induced_base(g, w);
}

LabelledGraph induced(const LabelledGraph& g, const std::vector<VertexId>& w) {
    LabelledGraph out;
    static_cast<Graph&>(out) = induced_base(g, w);
    for (VertexId v : out.vertices) out.labels.emplace(v, g.labels.at(v));
    return out;
}

ColouredGraph induced(const ColouredGraph& g, const std::vector<VertexId>& w) {
    ColouredGraph out;
    static_cast<Graph&>(out) = induced_base(g, w);
    for (const auto& cls : g.classes) {
        std::vector<VertexId> kept;
        for (VertexId v : cls)
            if (std::binary_search(out.vertices.begin(), out.vertices.end(), v))
                kept.push_back(v);
        if (!kept.empty()) out.classes.push_back(std::move(kept));
    }
    canonicalize_classes(out);
    return out;
}

std::vector<std::vector<VertexId>> component_vertex_sets(const Graph& g) {
    std::map<VertexId, std::vector<VertexId>> adjacency;
    for (VertexId v : g.vertices) adjacency[v];
    for (const Edge& e : g.edges) {
        adjacency[e.first].push_back(e.second);
        adjacency[e.second].push_back(e.first);
    }
    std::set<VertexId> seen;
    std::vector<std::vector<VertexId>> out;
    for (VertexId start : g.vertices) {
        if (seen.count(start)) continue;
        std::vector<VertexId> comp, stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : adjacency[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;  // ordered by least vertex: starts scan ascending
}

namespace {

Graph shift_base(const Graph& g, int offset) {
    Graph out;
    for (VertexId v : g.vertices) out.vertices.push_back(v + offset);
    for (const Edge& e : g.edges)
        out.edges.insert(make_edge(e.first + offset, e.second + offset));
    return out;
}

}  // namespace

Graph relabel_fresh(const Graph& g, int offset) { return shift_base(g, offset); }

LabelledGraph relabel_fresh(const LabelledGraph& g, int offset) {
    LabelledGraph out;
    static_cast<Graph&>(out) = shift_base(g, offset);
    for (const auto& [v, label] : g.labels) out.labels.emplace(v + offset, label);
    return out;
}

ColouredGraph relabel_fresh(const ColouredGraph& g, int offset) {
    ColouredGraph out;
    static_cast<Graph&>(out) = shift_base(g, offset);
    for (const auto& cls : g.classes) {
        std::vector<VertexId> shifted;
        for (VertexId v : cls) shifted.push_back(v + offset);
        out.classes.push_back(std::move(shifted));
    }
    canonicalize_classes(out);
    return out;
}

std::optional<std::array<VertexId, 4>> find_induced_p4(const Graph& g) {
    const std::vector<VertexId>& vs = g.vertices;
    const std::size_t n = vs.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    std::array<VertexId, 4> q{vs[a], vs[b], vs[c], vs[d]};
                    int degree[4] = {0, 0, 0, 0};
                    int edge_count = 0;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            if (g.adjacent(q[i], q[j])) {
                                ++edge_count;
                                ++degree[i];
                                ++degree[j];
                            }
                    if (edge_count != 3) continue;
                    int max_deg = *std::max_element(degree, degree + 4);
                    int min_deg = *std::min_element(degree, degree + 4);
                    if (max_deg != 2 || min_deg != 1) continue;
                    // order as a path: endpoint, then walk
                    std::array<VertexId, 4> path{};
                    for (int i = 0; i < 4; ++i)
                        if (degree[i] == 1) { path[0] = q[i]; break; }
                    std::set<VertexId> used{path[0]};
                    for (int step = 1; step < 4; ++step)
                        for (VertexId cand : q)
                            if (!used.count(cand) && g.adjacent(path[step - 1], cand)) {
                                path[step] = cand;
                                used.insert(cand);
                                break;
                            }
                    return path;
                }
    return std::nullopt;
}

bool is_cograph(const Graph& g) {
    if (g.vertices.empty()) return false;
    return !find_induced_p4(g).has_value();
}

std::vector<VertexId> Cotree::leaves() const {
    if (kind == Kind::Leaf) return {leaf};
    std::vector<VertexId> out;
    for (const Cotree& child : children) {
        std::vector<VertexId> sub = child.leaves();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexId Cotree::min_leaf() const {
    if (kind == Kind::Leaf) return leaf;
    VertexId best = children.front().min_leaf();
    for (const Cotree& child : children) best = std::min(best, child.min_leaf());
    return best;
}

namespace {

Cotree cotree_rec(const Graph& g) {
    if (g.vertices.size() == 1)
        return Cotree{Cotree::Kind::Leaf, g.vertices.front(), {}};

    auto comps = component_vertex_sets(g);
    if (comps.size() >= 2) {
        Cotree node{Cotree::Kind::Union, -1, {}};
        for (const auto& comp : comps) node.children.push_back(cotree_rec(induced(g, comp)));
        return node;
    }
    auto cocomps = component_vertex_sets(complement(g));
    if (cocomps.size() >= 2) {
        Cotree node{Cotree::Kind::Join, -1, {}};
        for (const auto& comp : cocomps) node.children.push_back(cotree_rec(induced(g, comp)));
        return node;
    }
    throw NotACograph("connected graph with connected complement on " +
                      std::to_string(g.vertices.size()) + " vertices");
}

}  // namespace

Cotree cotree(const Graph& g) {
    if (g.vertices.empty()) throw NotACograph("empty graph");
    return cotree_rec(g);  // children inherit component order = least-leaf order
}

Graph rebuild(const Cotree& t) {
    if (t.kind == Cotree::Kind::Leaf) {
        Graph g;
        g.vertices = {t.leaf};
        return g;
    }
    Graph acc = rebuild(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i) {
        Graph next = rebuild(t.children[i]);
        acc = t.kind == Cotree::Kind::Union ? graph_union(acc, next)
                                            : graph_join(acc, next);
    }
    return acc;
}

}  // namespace combproof
