#include "combproof/json_io.hpp"

namespace combproof {

using nlohmann::json;

namespace {

json base_to_json(const Graph& g) {
    json vertices = json::array();
    for (VertexId v : g.vertices) vertices.push_back({{"id", v}});
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back({e.first, e.second});
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(std::string("malformed graph JSON: ") + what);
}

Graph base_from_json(const json& j) {
    require(j.is_object(), "expected an object");
    require(j.contains("vertices") && j["vertices"].is_array(), "missing vertices array");
    require(j.contains("edges") && j["edges"].is_array(), "missing edges array");
    Graph g;
    for (const json& v : j["vertices"]) {
        require(v.is_object() && v.contains("id") && v["id"].is_number_integer(),
                "vertex entries need an integer id");
        VertexId id = v["id"].get<VertexId>();
        require(id >= 0, "vertex ids are non-negative");
        g.vertices.push_back(id);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    require(std::adjacent_find(g.vertices.begin(), g.vertices.end()) == g.vertices.end(),
            "duplicate vertex id");
    for (const json& e : j["edges"]) {
        require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                    e[1].is_number_integer(),
                "edges must be pairs of ids");
        VertexId a = e[0].get<VertexId>(), b = e[1].get<VertexId>();
        require(a != b, "loop edge");
        require(g.has_vertex(a) && g.has_vertex(b), "edge endpoint is not a vertex");
        g.edges.insert(make_edge(a, b));
    }
    return g;
}

}  // namespace

json to_json(const LabelledGraph& g) {
    json out = base_to_json(g);
    for (json& v : out["vertices"])
        v["label"] = g.labels.at(v["id"].get<VertexId>()).text();
    return out;
}

json to_json(const ColouredGraph& g) {
    json out = base_to_json(g);
    json classes = json::array();
    for (const auto& cls : g.classes) classes.push_back(cls);
    out["classes"] = std::move(classes);
    return out;
}

json to_json(const CombinatorialProof& proof) {
    json map = json::object();
    for (const auto& [v, w] : proof.map) map[std::to_string(v)] = w;
    return {{"target", to_json(proof.target)},
            {"witness", to_json(proof.witness)},
            {"map", std::move(map)}};
}

json to_json(const FusionSpec& spec) {
    return {{"left", to_json(spec.left)},
            {"right", to_json(spec.right)},
            {"left_portion", spec.left_portion},
            {"right_portion", spec.right_portion}};
}

LabelledGraph labelled_graph_from_json(const json& j) {
    LabelledGraph g;
    static_cast<Graph&>(g) = base_from_json(j);
    for (const json& v : j["vertices"]) {
        require(v.contains("label") && v["label"].is_string(),
                "labelled graph vertices need a label");
        try {
            g.labels.emplace(v["id"].get<VertexId>(), parse_atom(v["label"].get<std::string>()));
        } catch (const Error&) {
            throw Error("malformed graph JSON: bad atom label '" +
                        v["label"].get<std::string>() + "'");
        }
    }
    return g;
}

ColouredGraph coloured_graph_from_json(const json& j) {
    ColouredGraph g;
    static_cast<Graph&>(g) = base_from_json(j);
    require(j.contains("classes") && j["classes"].is_array(),
            "coloured graph needs a classes array");
    for (const json& cls : j["classes"]) {
        require(cls.is_array() && !cls.empty(), "classes must be non-empty arrays");
        std::vector<VertexId> members;
        for (const json& v : cls) {
            require(v.is_number_integer(), "class members must be ids");
            members.push_back(v.get<VertexId>());
        }
        g.classes.push_back(std::move(members));
    }
    canonicalize_classes(g);
    return g;
}

CombinatorialProof proof_from_json(const json& j) {
    require(j.is_object(), "expected an object");
    require(j.contains("target") && j.contains("witness") && j.contains("map"),
            "proof JSON needs target, witness and map");
    CombinatorialProof proof;
    proof.target = labelled_graph_from_json(j["target"]);
    proof.witness = coloured_graph_from_json(j["witness"]);
    require(j["map"].is_object(), "map must be an object");
    for (const auto& [key, value] : j["map"].items()) {
        require(value.is_number_integer(), "map values must be ids");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw Error("malformed graph JSON: map key '" + key + "' is not an id");
        }
        require(used == key.size(), "map key is not an id");
        proof.map[v] = value.get<VertexId>();
    }
    return proof;
}

FusionSpec fusion_spec_from_json(const json& j) {
    require(j.is_object() && j.contains("left") && j.contains("right") &&
                j.contains("left_portion") && j.contains("right_portion"),
            "fusion spec JSON needs left, right and both portions");
    FusionSpec spec;
    spec.left = coloured_graph_from_json(j["left"]);
    spec.right = coloured_graph_from_json(j["right"]);
    require(j["left_portion"].is_array() && j["right_portion"].is_array(),
            "portions must be arrays");
    for (const json& v : j["left_portion"]) spec.left_portion.push_back(v.get<VertexId>());
    for (const json& v : j["right_portion"]) spec.right_portion.push_back(v.get<VertexId>());
    return spec;
}

}  // namespace combproof
