#include "combproof/transform.hpp"

#include <algorithm>

namespace combproof {

Restriction restrict_map(const VertexMap& h, const Graph& src, const Graph& dst,
                         const std::vector<VertexId>& target_subset) {
    for (VertexId v : target_subset)
        if (!dst.has_vertex(v))
            throw UnknownVertex("vertex " + std::to_string(v) + " not in target");
    std::set<VertexId> targets(target_subset.begin(), target_subset.end());
    std::vector<VertexId> preimage;
    for (VertexId v : src.vertices) {
        auto it = h.find(v);
        if (it == h.end())
            throw UnknownVertex("map undefined on vertex " + std::to_string(v));
        if (targets.count(it->second)) preimage.push_back(v);
    }
    Restriction out;
    out.domain = induced(src, preimage);
    for (VertexId v : preimage) out.map[v] = h.at(v);
    return out;
}

namespace {

void require_portion(const ColouredGraph& side, const std::vector<VertexId>& portion,
                     const char* which) {
    std::set<VertexId> inside(portion.begin(), portion.end());
    for (VertexId v : portion)
        if (!side.has_vertex(v))
            throw UnknownVertex(std::string(which) + " portion vertex " +
                                std::to_string(v) + " not in that side");
    for (const Edge& e : side.edges) {
        bool a = inside.count(e.first), b = inside.count(e.second);
        if (a != b)
            throw NotAPortion(std::string(which) + " portion has edge {" +
                              std::to_string(e.first) + "," + std::to_string(e.second) +
                              "} to the rest of its side");
    }
}

}  // namespace

ColouredGraph fusion(const FusionSpec& spec) {
    require_portion(spec.left, spec.left_portion, "left");
    require_portion(spec.right, spec.right_portion, "right");
    ColouredGraph out = graph_union(spec.left, spec.right);
    for (VertexId v : spec.left_portion)
        for (VertexId w : spec.right_portion) out.edges.insert(make_edge(v, w));
    return out;
}

namespace {

// One decomposition step: nullopt when no matching edge of the block graph
// is a bridge.  Requires a valid colouring on a cograph with >= 2 classes.
std::optional<FusionSpec> decompose_step(const ColouredGraph& c) {
    auto comps = component_vertex_sets(c);

    // blocks: each multi-vertex component split at its top-level join into
    // first co-component vs rest
    std::vector<std::vector<VertexId>> blocks;
    for (const auto& comp : comps) {
        if (comp.size() < 2) continue;  // isolated vertices stay outside
        Graph sub = induced(static_cast<const Graph&>(c), comp);
        auto cocomps = component_vertex_sets(complement(sub));
        if (cocomps.size() < 2)
            throw NotACograph("component is connected with connected complement");
        std::vector<VertexId> first = cocomps.front();
        std::vector<VertexId> rest;
        for (std::size_t i = 1; i < cocomps.size(); ++i)
            rest.insert(rest.end(), cocomps[i].begin(), cocomps[i].end());
        std::sort(rest.begin(), rest.end());
        blocks.push_back(std::move(first));
        blocks.push_back(std::move(rest));
    }

    if (blocks.empty()) {
        // no edges anywhere: split the first class off, portions empty
        const auto& first_class = c.classes.front();
        std::vector<VertexId> rest;
        std::set<VertexId> in_first(first_class.begin(), first_class.end());
        for (VertexId v : c.vertices)
            if (!in_first.count(v)) rest.push_back(v);
        return FusionSpec{induced(c, first_class), induced(c, rest), {}, {}};
    }

    std::map<VertexId, int> block_of;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (VertexId v : blocks[i]) block_of[v] = static_cast<int>(i);

    // block graph: an edge or a colour class between two blocks connects them
    std::set<std::pair<int, int>> block_edges;
    auto connect = [&](VertexId v, VertexId w) {
        auto a = block_of.find(v), b = block_of.find(w);
        if (a == block_of.end() || b == block_of.end() || a->second == b->second)
            return;
        block_edges.insert({std::min(a->second, b->second),
                            std::max(a->second, b->second)});
    };
    for (const Edge& e : c.edges) connect(e.first, e.second);
    for (const auto& cls : c.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j) connect(cls[i], cls[j]);

    const int block_count = static_cast<int>(blocks.size());
    for (int k = 0; k + 1 < block_count; k += 2) {
        // is the matching edge (k, k+1) a bridge separating k from k+1?
        std::vector<char> seen(block_count, 0);
        std::vector<int> stack{k};
        seen[k] = 1;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : block_edges) {
                if (x == std::min(k, k + 1) && y == std::max(k, k + 1)) continue;
                int other = -1;
                if (x == b) other = y;
                else if (y == b) other = x;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    stack.push_back(other);
                }
            }
        }
        if (seen[k + 1]) continue;  // still connected, not a bridge

        // W: every class touching a block on k's side of the cut
        std::vector<VertexId> w_side;
        for (const auto& cls : c.classes) {
            bool touches = false;
            for (VertexId v : cls) {
                auto it = block_of.find(v);
                if (it != block_of.end() && seen[it->second]) touches = true;
            }
            if (touches) w_side.insert(w_side.end(), cls.begin(), cls.end());
        }
        std::sort(w_side.begin(), w_side.end());
        std::vector<VertexId> w_rest;
        std::set_difference(c.vertices.begin(), c.vertices.end(),
                            w_side.begin(), w_side.end(), std::back_inserter(w_rest));

        FusionSpec spec;
        spec.left = induced(c, w_side);
        spec.right = induced(c, w_rest);
        spec.left_portion = blocks[k];
        spec.right_portion = blocks[k + 1];
        return spec;
    }
    return std::nullopt;
}

}  // namespace

FusionSpec fusion_decompose(const ColouredGraph& c) {
    if (auto defect = find_colouring_failure(c)) throw InvalidColouring(defect->detail);
    if (c.classes.size() < 2)
        throw SingleColourClass("fusion decomposition needs at least two colour classes");
    ColouredGraph canon = c;
    canonicalize_classes(canon);
    cotree(canon);  // NotACograph on bad input
    auto spec = decompose_step(canon);
    if (!spec)
        throw InternalInvariantBroken(
            "no matching edge of the block graph is a bridge; the input cannot be nice");
    if (fusion(*spec) != canon)
        throw InternalInvariantBroken("fusion decomposition failed to reconstruct the input");
    return *spec;
}

bool is_nicely_coloured_fast(const ColouredGraph& c) {
    for (const auto& cls : c.classes)
        if (cls.size() > 2) return false;
    if (c.classes.size() <= 1) return true;
    ColouredGraph canon = c;
    canonicalize_classes(canon);
    auto spec = decompose_step(canon);
    if (!spec) return false;
    if (fusion(*spec) != canon)
        throw InternalInvariantBroken("fusion decomposition failed to reconstruct the input");
    return is_nicely_coloured_fast(spec->left) && is_nicely_coloured_fast(spec->right);
}

bool is_shallow(const VertexMap& h, const Graph& src, const Graph& dst) {
    if (!is_homomorphism(h, src, dst))
        throw NotAHomomorphism("map is not a graph homomorphism");
    for (const auto& comp : component_vertex_sets(dst)) {
        Restriction r = restrict_map(h, src, dst, comp);
        if (component_vertex_sets(r.domain).size() > 1) return false;
    }
    return true;
}

CombinatorialProof shallow_normalize(const CombinatorialProof& proof) {
    if (!verify(proof).empty())
        throw InvalidProof("shallow normalization requires a valid proof");

    const auto comps = component_vertex_sets(proof.witness);
    const std::size_t n = comps.size();
    const int stride = proof.target.vertices.back() + 1;

    CombinatorialProof out;
    out.witness = proof.witness;
    for (std::size_t i = 0; i < n; ++i) {
        LabelledGraph copy = relabel_fresh(proof.target, static_cast<int>(i) * stride);
        out.target = i == 0 ? copy : graph_union(out.target, copy);
        for (VertexId v : comps[i])
            out.map[v] = proof.map.at(v) + static_cast<int>(i) * stride;
    }
    return out;
}

}  // namespace combproof
