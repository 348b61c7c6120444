#include "combproof/semantics.hpp"

#include <algorithm>

namespace combproof {

namespace {

std::set<Clause> clauses_of(const Cotree& t, std::size_t max_clauses) {
    if (t.kind == Cotree::Kind::Leaf) return {{t.leaf}};

    if (t.kind == Cotree::Kind::Join) {
        std::set<Clause> out;
        for (const Cotree& child : t.children) {
            std::set<Clause> sub = clauses_of(child, max_clauses);
            out.insert(sub.begin(), sub.end());
            if (out.size() > max_clauses)
                throw ResourceLimit("clause count exceeds " + std::to_string(max_clauses));
        }
        return out;
    }

    // Union: one clause per child, unioned.
    std::set<Clause> acc{{}};
    for (const Cotree& child : t.children) {
        std::set<Clause> sub = clauses_of(child, max_clauses);
        if (acc.size() * sub.size() > max_clauses)
            throw ResourceLimit("clause count exceeds " + std::to_string(max_clauses));
        std::set<Clause> next;
        for (const Clause& a : acc)
            for (const Clause& b : sub) {
                Clause merged;
                std::merge(a.begin(), a.end(), b.begin(), b.end(),
                           std::back_inserter(merged));
                next.insert(std::move(merged));
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

std::set<Clause> clauses(const LabelledGraph& g, std::size_t max_clauses) {
    return clauses_of(cotree(g), max_clauses);
}

bool clause_is_true(const LabelledGraph& g, const Clause& w) {
    std::set<std::string> positive, negative;
    for (VertexId v : w) {
        auto it = g.labels.find(v);
        if (it == g.labels.end())
            throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
        const Atom& label = it->second;
        switch (label.kind) {
            case Atom::Kind::One: return true;
            case Atom::Kind::Zero: break;
            case Atom::Kind::Pos:
                if (negative.count(label.var)) return true;
                positive.insert(label.var);
                break;
            case Atom::Kind::Neg:
                if (positive.count(label.var)) return true;
                negative.insert(label.var);
                break;
        }
    }
    return false;
}

bool graph_is_true(const LabelledGraph& g, std::size_t max_clauses) {
    return !find_false_clause(g, max_clauses).has_value();
}

std::optional<Clause> find_false_clause(const LabelledGraph& g,
                                        std::size_t max_clauses) {
    for (const Clause& w : clauses(g, max_clauses))
        if (!clause_is_true(g, w)) return w;
    return std::nullopt;
}

}  // namespace combproof
