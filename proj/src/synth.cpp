#include "combproof/synth.hpp"

#include <algorithm>

#include "combproof/transform.hpp"

namespace combproof {

namespace {

std::vector<VertexId> sorted_leaves(const std::vector<const Cotree*>& nodes) {
    std::vector<VertexId> out;
    for (const Cotree* node : nodes) {
        auto ls = node->leaves();
        out.insert(out.end(), ls.begin(), ls.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

class Synthesizer {
  public:
    explicit Synthesizer(std::size_t max_clauses) : max_clauses_(max_clauses) {}

    // p: a true, non-empty labelled cograph.  Returns a witness over fresh
    // vertex ids and a map into p's vertex ids.
    std::pair<ColouredGraph, VertexMap> run(const LabelledGraph& p) {
        if (p.edges.empty()) return axiom_case(p);

        Cotree t = cotree(p);
        std::vector<VertexId> p1, p2, q;
        if (t.kind == Cotree::Kind::Join) {
            p1 = t.children.front().leaves();
            std::vector<const Cotree*> rest;
            for (std::size_t i = 1; i < t.children.size(); ++i)
                rest.push_back(&t.children[i]);
            p2 = sorted_leaves(rest);
        } else {
            const Cotree* join_child = nullptr;
            std::vector<const Cotree*> others;
            for (const Cotree& child : t.children) {
                if (!join_child && child.kind == Cotree::Kind::Join)
                    join_child = &child;
                else
                    others.push_back(&child);
            }
            if (!join_child)
                throw InternalInvariantBroken("graph with edges has no join component");
            p1 = join_child->children.front().leaves();
            std::vector<const Cotree*> rest;
            for (std::size_t i = 1; i < join_child->children.size(); ++i)
                rest.push_back(&join_child->children[i]);
            p2 = sorted_leaves(rest);
            q = sorted_leaves(others);
        }

        if (!q.empty()) {
            LabelledGraph outside = induced(p, q);
            if (graph_is_true(outside, max_clauses_))
                return run(outside);  // its map composes with inclusion into p
        }

        std::vector<VertexId> side1, side2;
        std::merge(p1.begin(), p1.end(), q.begin(), q.end(), std::back_inserter(side1));
        std::merge(p2.begin(), p2.end(), q.begin(), q.end(), std::back_inserter(side2));
        auto [c1, h1] = run(induced(p, side1));
        auto [c2, h2] = run(induced(p, side2));

        FusionSpec spec;
        spec.left = std::move(c1);
        spec.right = std::move(c2);
        spec.left_portion = preimage_of(h1, spec.left, p1);
        spec.right_portion = preimage_of(h2, spec.right, p2);
        require_portion_invariant(spec.left, spec.left_portion);
        require_portion_invariant(spec.right, spec.right_portion);

        ColouredGraph witness = fusion(spec);
        VertexMap map = std::move(h1);
        map.insert(h2.begin(), h2.end());
        return {std::move(witness), std::move(map)};
    }

  private:
    // The whole vertex set of an edgeless true graph is one true clause;
    // prove it with a single axiomatic class included at the chosen spot.
    std::pair<ColouredGraph, VertexMap> axiom_case(const LabelledGraph& p) {
        for (VertexId v : p.vertices)
            if (p.labels.at(v).is_one()) {
                ColouredGraph witness;
                VertexId a = next_fresh_++;
                witness.vertices = {a};
                witness.classes = {{a}};
                return {std::move(witness), VertexMap{{a, v}}};
            }
        for (VertexId v : p.vertices)
            for (VertexId w : p.vertices) {
                if (w <= v) continue;
                if (dual_literals(p.labels.at(v), p.labels.at(w))) {
                    ColouredGraph witness;
                    VertexId a = next_fresh_++;
                    VertexId b = next_fresh_++;
                    witness.vertices = {a, b};
                    witness.classes = {{a, b}};
                    return {std::move(witness), VertexMap{{a, v}, {b, w}}};
                }
            }
        throw InternalInvariantBroken("edgeless subproblem has no true clause");
    }

    static std::vector<VertexId> preimage_of(const VertexMap& h, const ColouredGraph& c,
                                             const std::vector<VertexId>& targets) {
        std::vector<VertexId> out;
        for (VertexId v : c.vertices)
            if (std::binary_search(targets.begin(), targets.end(), h.at(v)))
                out.push_back(v);
        return out;
    }

    static void require_portion_invariant(const ColouredGraph& c,
                                          const std::vector<VertexId>& portion) {
        std::set<VertexId> inside(portion.begin(), portion.end());
        for (const Edge& e : c.edges)
            if (inside.count(e.first) != inside.count(e.second))
                throw InternalInvariantBroken(
                    "witness portion has an edge to the rest of its side");
    }

    std::size_t max_clauses_;
    VertexId next_fresh_ = 0;
};

}  // namespace

CombinatorialProof synthesize(const LabelledGraph& target, std::size_t max_clauses) {
    if (auto false_clause = find_false_clause(target, max_clauses))
        throw NotTrue("graph is not true", *false_clause);

    Synthesizer synth(max_clauses);
    auto [witness, map] = synth.run(target);

    CombinatorialProof proof{std::move(witness), target, std::move(map)};
    if (!verify(proof).empty())
        throw InternalInvariantBroken("synthesized proof failed verification");
    return proof;
}

CombinatorialProof prove(const Prop& phi, std::size_t max_clauses) {
    return synthesize(graph_of(phi), max_clauses);
}

}  // namespace combproof
