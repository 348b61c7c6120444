#include "combproof/proof.hpp"

#include <algorithm>
#include <sstream>

#include "combproof/transform.hpp"

namespace combproof {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::EmptyWitness: return "EmptyWitness";
        case ViolationKind::NotACograph: return "NotACograph";
        case ViolationKind::InvalidColouring: return "InvalidColouring";
        case ViolationKind::NotNice: return "NotNice";
        case ViolationKind::NonAxiomaticClass: return "NonAxiomaticClass";
        case ViolationKind::NotAHomomorphism: return "NotAHomomorphism";
        case ViolationKind::SkewLiftingMissing: return "SkewLiftingMissing";
    }
    return "?";
}

namespace {

VertexId image_of(const VertexMap& h, VertexId v) {
    auto it = h.find(v);
    if (it == h.end())
        throw UnknownVertex("map undefined on vertex " + std::to_string(v));
    return it->second;
}

void require_total_map(const VertexMap& h, const Graph& src, const Graph& dst) {
    for (VertexId v : src.vertices) {
        VertexId w = image_of(h, v);
        if (!dst.has_vertex(w))
            throw UnknownVertex("map image " + std::to_string(w) +
                                " not a target vertex");
    }
}

std::map<VertexId, std::vector<VertexId>> adjacency_lists(const Graph& g) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (VertexId v : g.vertices) adj[v];
    for (const Edge& e : g.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto& [v, ns] : adj) std::sort(ns.begin(), ns.end());
    return adj;
}

std::string id_list(const std::vector<VertexId>& vs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "}";
    return os.str();
}

}  // namespace

bool is_homomorphism(const VertexMap& h, const Graph& src, const Graph& dst) {
    require_total_map(h, src, dst);
    for (const Edge& e : src.edges) {
        VertexId a = h.at(e.first), b = h.at(e.second);
        if (a == b || !dst.adjacent(a, b)) return false;
    }
    return true;
}

std::optional<SkewFailure> find_skew_failure(const VertexMap& h, const Graph& src,
                                             const Graph& dst) {
    if (!is_homomorphism(h, src, dst))
        throw NotAHomomorphism("map is not a graph homomorphism");

    auto src_adj = adjacency_lists(src);
    auto dst_adj = adjacency_lists(dst);
    for (VertexId v : src.vertices) {
        const VertexId hv = h.at(v);
        std::vector<VertexId> lifted_images;  // h over the neighbours of v, sorted
        for (VertexId n : src_adj.at(v)) lifted_images.push_back(h.at(n));
        std::sort(lifted_images.begin(), lifted_images.end());
        for (VertexId w : dst_adj.at(hv)) {
            // an exact lifting (some image equals w) always satisfies skewness
            bool lifted = std::binary_search(lifted_images.begin(), lifted_images.end(), w);
            for (std::size_t i = 0; !lifted && i < lifted_images.size(); ++i)
                lifted = !dst.adjacent(lifted_images[i], w);
            if (!lifted) return SkewFailure{v, make_edge(hv, w)};
        }
    }
    return std::nullopt;
}

bool is_skew_fibration(const VertexMap& h, const Graph& src, const Graph& dst) {
    return !find_skew_failure(h, src, dst).has_value();
}

bool is_graph_fibration(const VertexMap& h, const Graph& src, const Graph& dst) {
    if (!is_homomorphism(h, src, dst))
        throw NotAHomomorphism("map is not a graph homomorphism");

    auto src_adj = adjacency_lists(src);
    auto dst_adj = adjacency_lists(dst);
    for (VertexId v : src.vertices) {
        for (VertexId w : dst_adj.at(h.at(v))) {
            int liftings = 0;
            for (VertexId n : src_adj.at(v))
                if (h.at(n) == w) ++liftings;
            if (liftings != 1) return false;
        }
    }
    return true;
}

bool induces_matching(const Graph& g, const std::vector<VertexId>& w) {
    for (VertexId v : w)
        if (!g.has_vertex(v))
            throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
    if (w.empty()) return false;
    for (VertexId v : w) {
        int inside = 0;
        for (VertexId u : w)
            if (g.adjacent(v, u)) ++inside;
        if (inside != 1) return false;
    }
    return true;
}

std::optional<Violation> find_colouring_failure(const ColouredGraph& c) {
    std::map<VertexId, int> membership;
    for (const auto& cls : c.classes)
        for (VertexId v : cls) {
            if (!c.has_vertex(v))
                return Violation{ViolationKind::InvalidColouring, {v},
                                 "class member is not a vertex"};
            if (++membership[v] > 1)
                return Violation{ViolationKind::InvalidColouring, {v},
                                 "vertex appears in more than one class"};
        }
    for (VertexId v : c.vertices)
        if (!membership.count(v))
            return Violation{ViolationKind::InvalidColouring, {v},
                             "vertex belongs to no class"};
    for (const auto& cls : c.classes)
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (c.adjacent(cls[i], cls[j]))
                    return Violation{ViolationKind::InvalidColouring,
                                     {cls[i], cls[j]},
                                     "class contains an edge"};
    return std::nullopt;
}

std::optional<std::vector<VertexId>> find_nice_failure(const ColouredGraph& c,
                                                       std::size_t max_subsets) {
    if (auto defect = find_colouring_failure(c))
        throw InvalidColouring(defect->detail);

    for (const auto& cls : c.classes)
        if (cls.size() > 2) return cls;

    std::vector<const std::vector<VertexId>*> pairs;
    for (const auto& cls : c.classes)
        if (cls.size() == 2) pairs.push_back(&cls);
    const std::size_t k = pairs.size();
    if (k == 0) return std::nullopt;
    if (k >= 63 || (std::size_t{1} << k) - 1 > max_subsets)
        throw ResourceLimit("niceness check needs " + std::to_string(k) +
                            " two-vertex classes' subsets, cap is " +
                            std::to_string(max_subsets));

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<VertexId> u;
        for (std::size_t i = 0; i < k; ++i)
            if (mask >> i & 1) u.insert(u.end(), pairs[i]->begin(), pairs[i]->end());
        std::sort(u.begin(), u.end());
        if (induces_matching(c, u)) return u;
    }
    return std::nullopt;
}

bool is_nicely_coloured(const ColouredGraph& c, std::size_t max_subsets) {
    return !find_nice_failure(c, max_subsets).has_value();
}

bool class_is_axiomatic(const VertexMap& h, const std::vector<VertexId>& cls,
                        const LabelledGraph& target) {
    auto label_of = [&](VertexId v) {
        auto it = target.labels.find(image_of(h, v));
        if (it == target.labels.end())
            throw UnknownVertex("map image not a target vertex");
        return it->second;
    };
    if (cls.size() == 1) return label_of(cls[0]).is_one();
    if (cls.size() == 2) return dual_literals(label_of(cls[0]), label_of(cls[1]));
    return false;
}

std::vector<Violation> verify(const CombinatorialProof& proof) {
    std::vector<Violation> out;
    const ColouredGraph& c = proof.witness;
    const LabelledGraph& p = proof.target;

    if (c.vertices.empty())
        return {Violation{ViolationKind::EmptyWitness, {}, "witness has no vertices"}};

    auto colouring_defect = find_colouring_failure(c);
    if (colouring_defect) out.push_back(*colouring_defect);

    bool cograph_ok = true;
    try {
        cotree(c);
    } catch (const NotACograph& e) {
        cograph_ok = false;
        Violation v{ViolationKind::NotACograph, {}, e.what()};
        if (c.vertices.size() <= 64) {
            if (auto p4 = find_induced_p4(c)) {
                v.site.assign(p4->begin(), p4->end());
                v.detail = "vertices " + id_list(v.site) +
                           " induce a path on four vertices";
            }
        }
        out.push_back(v);
    }

    if (!colouring_defect && cograph_ok && !is_nicely_coloured_fast(c)) {
        Violation v{ViolationKind::NotNice, {}, "colouring is not nice"};
        std::size_t two_classes = 0;
        for (const auto& cls : c.classes) two_classes += cls.size() == 2;
        bool oversized = false;
        for (const auto& cls : c.classes)
            if (cls.size() > 2) {
                v.site = cls;
                v.detail = "class " + id_list(cls) + " has more than two vertices";
                oversized = true;
                break;
            }
        if (!oversized && two_classes <= 20) {
            if (auto witness_union = find_nice_failure(c)) {
                v.site = *witness_union;
                v.detail = "union of two-vertex classes " + id_list(v.site) +
                           " induces a matching";
            }
        }
        out.push_back(v);
    }

    bool map_ok = true;
    for (VertexId v : c.vertices) {
        auto it = proof.map.find(v);
        if (it == proof.map.end()) {
            out.push_back(Violation{ViolationKind::NotAHomomorphism, {v},
                                    "map undefined on witness vertex " + std::to_string(v)});
            map_ok = false;
        } else if (!p.has_vertex(it->second)) {
            out.push_back(Violation{ViolationKind::NotAHomomorphism, {v},
                                    "map image " + std::to_string(it->second) +
                                        " is not a target vertex"});
            map_ok = false;
        }
    }

    if (!colouring_defect && map_ok)
        for (const auto& cls : c.classes)
            if (!class_is_axiomatic(proof.map, cls, p)) {
                std::string images;
                for (VertexId v : cls)
                    images += (images.empty() ? "" : ",") +
                              p.labels.at(proof.map.at(v)).text();
                out.push_back(Violation{ViolationKind::NonAxiomaticClass, cls,
                                        "class " + id_list(cls) + " maps to labels {" +
                                            images + "}"});
            }

    if (map_ok) {
        bool hom_ok = true;
        for (const Edge& e : c.edges) {
            VertexId a = proof.map.at(e.first), b = proof.map.at(e.second);
            if (a == b) {
                out.push_back(Violation{ViolationKind::NotAHomomorphism,
                                        {e.first, e.second},
                                        "edge {" + std::to_string(e.first) + "," +
                                            std::to_string(e.second) +
                                            "} collapses to vertex " + std::to_string(a)});
                hom_ok = false;
            } else if (!p.adjacent(a, b)) {
                out.push_back(Violation{ViolationKind::NotAHomomorphism,
                                        {e.first, e.second},
                                        "edge {" + std::to_string(e.first) + "," +
                                            std::to_string(e.second) +
                                            "} maps to the non-edge {" + std::to_string(a) +
                                            "," + std::to_string(b) + "}"});
                hom_ok = false;
            }
        }

        if (hom_ok) {
            auto src_adj = adjacency_lists(c);
            auto dst_adj = adjacency_lists(p);
            for (VertexId v : c.vertices) {
                const VertexId hv = proof.map.at(v);
                std::vector<VertexId> lifted_images;
                for (VertexId n : src_adj.at(v)) lifted_images.push_back(proof.map.at(n));
                std::sort(lifted_images.begin(), lifted_images.end());
                for (VertexId w : dst_adj.at(hv)) {
                    bool lifted =
                        std::binary_search(lifted_images.begin(), lifted_images.end(), w);
                    for (std::size_t i = 0; !lifted && i < lifted_images.size(); ++i)
                        lifted = !p.adjacent(lifted_images[i], w);
                    if (!lifted)
                        out.push_back(Violation{
                            ViolationKind::SkewLiftingMissing,
                            {v},
                            "no skew lifting of target edge {" + std::to_string(hv) + "," +
                                std::to_string(w) + "} at witness vertex " +
                                std::to_string(v)});
                }
            }
        }
    }

    return out;
}

std::string describe(const Violation& v) {
    return std::string(to_string(v.kind)) + ": " + v.detail;
}

}  // namespace combproof
