#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "combproof/graph.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace combproof;

namespace {

LabelledGraph peirce_graph() { return graph_of(parse_proposition("((p->q)->p)->p")); }

std::set<Edge> edge_set(std::initializer_list<Edge> es) { return {es}; }

Graph p4() {
    Graph g;
    g.vertices = {0, 1, 2, 3};
    g.edges = edge_set({{0, 1}, {1, 2}, {2, 3}});
    return g;
}

}  // namespace

TEST_CASE("union and join on singletons") {
    LabelledGraph p = single_vertex(0, Atom::pos("p"));
    LabelledGraph q = single_vertex(1, Atom::pos("q"));

    LabelledGraph u = graph_union(p, q);
    CHECK(u.vertices == std::vector<VertexId>{0, 1});
    CHECK(u.edges.empty());

    LabelledGraph j = graph_join(p, q);
    CHECK(j.edges == edge_set({{0, 1}}));

    LabelledGraph pq = graph_of(parse_proposition("p & q"));
    LabelledGraph with_r = graph_union(pq, single_vertex(2, Atom::pos("r")));
    CHECK(with_r.edges == edge_set({{0, 1}}));

    CHECK_THROWS_AS(graph_union(p, p), IdCollision);
    CHECK_THROWS_AS(graph_join(p, single_vertex(0, Atom::pos("r"))), IdCollision);
}

TEST_CASE("the join of two edgeless pairs has all four cross edges") {
    // ((p | ~q) & (0 | p)): two edgeless pairs joined
    LabelledGraph g = graph_of(parse_proposition("(p | ~q) & (0 | p)"));
    CHECK(g.vertices == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(g.labels.at(0) == Atom::pos("p"));
    CHECK(g.labels.at(1) == Atom::neg("q"));
    CHECK(g.labels.at(2) == Atom::zero());
    CHECK(g.labels.at(3) == Atom::pos("p"));
    CHECK(g.edges == edge_set({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

    // complement keeps exactly the other two pairs
    LabelledGraph co = complement(g);
    CHECK(co.edges == edge_set({{0, 1}, {2, 3}}));
    CHECK(co.labels == g.labels);

    // complementing a single edge isolates its endpoints
    CHECK(complement(graph_of(parse_proposition("p & q"))).edges.empty());

    // negation also dualizes every label
    LabelledGraph neg = negate(g);
    CHECK(neg.edges == edge_set({{0, 1}, {2, 3}}));
    CHECK(neg.labels.at(0) == Atom::neg("p"));
    CHECK(neg.labels.at(1) == Atom::pos("q"));
    CHECK(neg.labels.at(2) == Atom::one());
    CHECK(neg.labels.at(3) == Atom::neg("p"));

    CHECK(negate(single_vertex(0, Atom::one())) == single_vertex(0, Atom::zero()));
}

TEST_CASE("edge counting under join") {
    std::mt19937 rng(4);
    for (int i = 0; i < 200; ++i) {
        LabelledGraph g = testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 8));
        LabelledGraph h = relabel_fresh(
            testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 8)), 100);
        LabelledGraph j = graph_join(g, h);
        CHECK(j.edges.size() ==
              g.edges.size() + h.edges.size() + g.vertices.size() * h.vertices.size());
        LabelledGraph u = graph_union(g, h);
        CHECK(u.edges.size() == g.edges.size() + h.edges.size());

        // disjoint union/join commute as id-preserving edge sets
        CHECK(graph_union(h, g) == u);
        CHECK(graph_join(h, g) == j);
    }
}

TEST_CASE("involutions") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        LabelledGraph g = testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 10));
        CHECK(complement(complement(g)) == g);
        CHECK(negate(negate(g)) == g);
    }
}

TEST_CASE("graph_of: worked examples") {
    LabelledGraph g = peirce_graph();
    CHECK(g.vertices == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(g.labels.at(0) == Atom::neg("p"));
    CHECK(g.labels.at(1) == Atom::pos("q"));
    CHECK(g.labels.at(2) == Atom::neg("p"));
    CHECK(g.labels.at(3) == Atom::pos("p"));
    CHECK(g.edges == edge_set({{0, 2}, {1, 2}}));

    LabelledGraph h = graph_of(parse_proposition("p -> (p & 1)"));
    CHECK(h.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(h.labels.at(0) == Atom::neg("p"));
    CHECK(h.labels.at(1) == Atom::pos("p"));
    CHECK(h.labels.at(2) == Atom::one());
    CHECK(h.edges == edge_set({{1, 2}}));

    LabelledGraph atom = graph_of(parse_proposition("p"));
    CHECK(atom == single_vertex(0, Atom::pos("p")));
}

TEST_CASE("graph_of respects the propositional algebra") {
    std::mt19937 rng(6);
    for (int i = 0; i < 300; ++i) {
        Prop phi = testgen::random_prop(rng, testgen::pick(rng, 1, 8), {"p", "q", "r"});
        Prop rho = testgen::random_prop(rng, testgen::pick(rng, 1, 8), {"p", "q", "r"});

        CHECK(graph_of(Proposition::negation(Proposition::negation(phi))) == graph_of(phi));
        CHECK(graph_of(Proposition::negation(Proposition::conj(phi, rho))) ==
              graph_of(Proposition::disj(Proposition::negation(phi),
                                         Proposition::negation(rho))));
        CHECK(graph_of(Proposition::negation(Proposition::disj(phi, rho))) ==
              graph_of(Proposition::conj(Proposition::negation(phi),
                                         Proposition::negation(rho))));
        CHECK(graph_of(Proposition::implies(phi, rho)) ==
              graph_of(Proposition::disj(Proposition::negation(phi), rho)));
    }
}

TEST_CASE("cograph recognition") {
    CHECK_FALSE(is_cograph(p4()));
    CHECK(find_induced_p4(p4()).has_value());

    Graph single;
    single.vertices = {0};
    CHECK(is_cograph(single));

    Graph empty;
    CHECK_FALSE(is_cograph(empty));

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i)
        CHECK(is_cograph(testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 10))));
}

TEST_CASE("cotree: worked examples") {
    Cotree leaf_p{Cotree::Kind::Leaf, 0, {}};
    Cotree leaf_q{Cotree::Kind::Leaf, 1, {}};
    Cotree expected_join{Cotree::Kind::Join, -1, {leaf_p, leaf_q}};
    CHECK(cotree(graph_of(parse_proposition("p & q"))) == expected_join);

    // Union(Join(Union(L0, L1), L2), L3)
    Cotree inner_union{Cotree::Kind::Union, -1,
                       {Cotree{Cotree::Kind::Leaf, 0, {}}, Cotree{Cotree::Kind::Leaf, 1, {}}}};
    Cotree join{Cotree::Kind::Join, -1, {inner_union, Cotree{Cotree::Kind::Leaf, 2, {}}}};
    Cotree expected{Cotree::Kind::Union, -1, {join, Cotree{Cotree::Kind::Leaf, 3, {}}}};
    CHECK(cotree(peirce_graph()) == expected);

    CHECK_THROWS_AS(cotree(p4()), NotACograph);
    CHECK_THROWS_AS(cotree(Graph{}), NotACograph);
}

TEST_CASE("cotree recognizer agrees with the 4-subset scan") {
    std::mt19937 rng(8);
    int cographs_seen = 0;
    for (int i = 0; i < 400; ++i) {
        Graph g = testgen::random_graph(rng, testgen::pick(rng, 1, 10),
                                        std::uniform_real_distribution<double>(0, 1)(rng));
        bool reference = is_cograph(g);
        bool via_cotree = true;
        try {
            cotree(g);
        } catch (const NotACograph&) {
            via_cotree = false;
        }
        CHECK(reference == via_cotree);
        cographs_seen += reference;
    }
    CHECK(cographs_seen > 20);  // the sample actually exercises both outcomes
}

TEST_CASE("rebuild inverts cotree") {
    std::mt19937 rng(9);
    for (int i = 0; i < 300; ++i) {
        LabelledGraph g = testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 10));
        CHECK(rebuild(cotree(g)) == static_cast<const Graph&>(g));
    }
}

TEST_CASE("cotree children are canonical") {
    std::mt19937 rng(10);
    for (int i = 0; i < 200; ++i) {
        LabelledGraph g = testgen::random_labelled_cograph(rng, testgen::pick(rng, 2, 10));
        Cotree t = cotree(g);
        if (t.kind == Cotree::Kind::Leaf) continue;
        CHECK(t.children.size() >= 2);
        for (std::size_t c = 0; c + 1 < t.children.size(); ++c)
            CHECK(t.children[c].min_leaf() < t.children[c + 1].min_leaf());
        for (const Cotree& child : t.children) CHECK(child.kind != t.kind);
    }
}

TEST_CASE("components and induced subgraphs") {
    LabelledGraph g = peirce_graph();
    auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(comps[1].vertices == std::vector<VertexId>{3});
    CHECK(comps[1].labels.at(3) == Atom::pos("p"));

    CHECK(induced(g, g.vertices) == g);
    CHECK_THROWS_AS(induced(g, std::vector<VertexId>{7}), UnknownVertex);

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        LabelledGraph a = testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 6));
        LabelledGraph b = relabel_fresh(
            testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 6)), 50);
        CHECK(components(graph_join(a, b)).size() == 1);
    }
}

TEST_CASE("relabel_fresh preserves structure") {
    std::mt19937 rng(12);
    for (int i = 0; i < 100; ++i) {
        LabelledGraph g = testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 8));
        LabelledGraph shifted = relabel_fresh(g, 1000);
        CHECK(shifted.vertices.size() == g.vertices.size());
        CHECK(shifted.edges.size() == g.edges.size());
        CHECK(relabel_fresh(shifted, -1000) == g);
        CHECK(testoracle::canonical_form(shifted) == testoracle::canonical_form(g));
    }
}
