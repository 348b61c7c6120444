#include "combproof/dot.hpp"

#include <sstream>

namespace combproof {

namespace {

std::string dot_label(const Atom& atom) {
    switch (atom.kind) {
        case Atom::Kind::Pos: return atom.var;
        case Atom::Kind::Neg: return "¬" + atom.var;
        case Atom::Kind::Zero: return "0";
        case Atom::Kind::One: return "1";
    }
    return "?";
}

const char* kClassFills[] = {"white",     "grey80",    "lightblue", "lightyellow",
                             "lightpink", "palegreen", "orange",    "plum"};

void emit_target(std::ostream& os, const LabelledGraph& g, const std::string& indent) {
    for (VertexId v : g.vertices)
        os << indent << "t" << v << " [label=\"" << dot_label(g.labels.at(v)) << "\"];\n";
    for (const Edge& e : g.edges)
        os << indent << "t" << e.first << " -> t" << e.second << " [dir=none];\n";
}

}  // namespace

std::string to_dot(const LabelledGraph& g) {
    std::ostringstream os;
    os << "digraph proposition {\n";
    os << "  node [shape=circle, fontname=\"Helvetica\"];\n";
    emit_target(os, g, "  ");
    os << "}\n";
    return os.str();
}

std::string to_dot(const CombinatorialProof& proof) {
    std::ostringstream os;
    os << "digraph proof {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=circle, fontname=\"Helvetica\"];\n";
    os << "  subgraph cluster_witness {\n";
    os << "    label=\"witness\";\n";
    std::map<VertexId, std::size_t> class_of;
    for (std::size_t i = 0; i < proof.witness.classes.size(); ++i)
        for (VertexId v : proof.witness.classes[i]) class_of[v] = i;
    for (VertexId v : proof.witness.vertices) {
        const char* fill = "white";
        auto it = class_of.find(v);
        if (it != class_of.end())
            fill = kClassFills[it->second % (sizeof(kClassFills) / sizeof(*kClassFills))];
        os << "    w" << v << " [label=\"\", style=filled, fillcolor=" << fill << "];\n";
    }
    for (const Edge& e : proof.witness.edges)
        os << "    w" << e.first << " -> w" << e.second << " [dir=none];\n";
    os << "  }\n";
    os << "  subgraph cluster_target {\n";
    os << "    label=\"target\";\n";
    emit_target(os, proof.target, "    ");
    os << "  }\n";
    for (const auto& [v, w] : proof.map)
        os << "  w" << v << " -> t" << w << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

}  // namespace combproof
