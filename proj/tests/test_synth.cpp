#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "combproof/semantics.hpp"
#include "combproof/synth.hpp"
#include "combproof/transform.hpp"
#include "support/gen.hpp"

using namespace combproof;

TEST_CASE("base case: an edgeless true clause proved by inclusion") {
    CombinatorialProof proof = prove(parse_proposition("p | ~p"));
    CHECK(proof.witness.vertices == std::vector<VertexId>{0, 1});
    CHECK(proof.witness.edges.empty());
    CHECK(proof.witness.classes == std::vector<std::vector<VertexId>>{{0, 1}});
    CHECK(proof.map == VertexMap{{0, 0}, {1, 1}});
    CHECK(verify(proof).empty());
}

TEST_CASE("a 1-labelled vertex beats a dual pair") {
    // clause {~p, p, 1}: the 1 gives a singleton witness
    CombinatorialProof proof = prove(parse_proposition("p -> (p | 1)"));
    CHECK(proof.witness.vertices.size() == 1);
    CHECK(proof.witness.classes.size() == 1);
    CHECK(proof.target.labels.at(proof.map.at(proof.witness.vertices.front())).is_one());
    CHECK(verify(proof).empty());
}

TEST_CASE("Peirce's law synthesizes to the two-class proof") {
    CombinatorialProof proof = prove(parse_proposition("((p->q)->p)->p"));
    CHECK(verify(proof).empty());
    CHECK(proof.witness.vertices.size() == 4);
    CHECK(proof.witness.classes.size() == 2);

    // exactly the hand-drawn proof: classes {0,1},{2,3}, edge 0-2,
    // map 0->~p0, 1->p3, 2->~p2, 3->p3
    CHECK(proof.witness.edges == std::set<Edge>{{0, 2}});
    CHECK(proof.witness.classes == std::vector<std::vector<VertexId>>{{0, 1}, {2, 3}});
    CHECK(proof.map == VertexMap{{0, 0}, {1, 3}, {2, 2}, {3, 3}});
}

TEST_CASE("refutations carry a false clause") {
    try {
        prove(parse_proposition("p & ~p"));
        FAIL("expected NotTrue");
    } catch (const NotTrue& e) {
        CHECK((e.false_clause == Clause{0} || e.false_clause == Clause{1}));
    }
    CHECK_THROWS_AS(prove(parse_proposition("0")), NotTrue);
    CHECK_THROWS_AS(prove(parse_proposition("p")), NotTrue);
    CHECK_THROWS_AS(synthesize(graph_of(parse_proposition("p | (q & ~q)"))), NotTrue);
}

TEST_CASE("synthesize rejects non-cographs") {
    LabelledGraph p4;
    p4.vertices = {0, 1, 2, 3};
    p4.edges = {{0, 1}, {1, 2}, {2, 3}};
    for (VertexId v : p4.vertices) p4.labels.emplace(v, Atom::one());
    CHECK_THROWS_AS(synthesize(p4), NotACograph);
    CHECK_THROWS_AS(synthesize(LabelledGraph{}), NotACograph);
}

TEST_CASE("a conjunction of axioms needs one class per conjunct") {
    CombinatorialProof proof = prove(parse_proposition("(a | ~a) & (b | ~b)"));
    CHECK(verify(proof).empty());
    CHECK(proof.witness.classes.size() == 2);
}

TEST_CASE("the outside-subgraph short circuit composes with inclusion") {
    // Q = {r, ~r} is true on its own, so the proof lives entirely inside it
    CombinatorialProof proof = prove(parse_proposition("(p & q) | (r | ~r)"));
    CHECK(verify(proof).empty());
    CHECK(proof.witness.vertices.size() == 2);
    std::set<VertexId> images;
    for (const auto& [v, w] : proof.map) images.insert(w);
    CHECK(images == std::set<VertexId>{2, 3});  // the r / ~r vertices
}

TEST_CASE("skew lifting repair shapes verify") {
    // Q not true forces the fusion branch; the witness edge set must still
    // lift every target edge
    CombinatorialProof proof = prove(parse_proposition("(a & (b | ~b)) | ~a"));
    CHECK(verify(proof).empty());
    CHECK(proof.witness.classes.size() == 2);

    CombinatorialProof nested = prove(parse_proposition("((a | ~a) & (b | ~b)) | (c & ~c)"));
    CHECK(verify(nested).empty());
}

TEST_CASE("synthesis is deterministic") {
    std::mt19937 rng(50);
    for (int i = 0; i < 200; ++i) {
        Prop phi = testgen::random_prop(rng, testgen::pick(rng, 1, 10), {"p", "q", "r"});
        try {
            CombinatorialProof first = prove(phi);
            CombinatorialProof second = prove(phi);
            CHECK(first == second);
        } catch (const NotTrue&) {
        }
    }
}

TEST_CASE("soundness and completeness at random") {
    std::mt19937 rng(51);
    int proved = 0, refuted = 0;
    for (int i = 0; i < 1500; ++i) {
        Prop phi = testgen::random_prop(rng, testgen::pick(rng, 1, 11), {"p", "q", "r"});
        bool taut = is_tautology_bruteforce(phi);
        try {
            CombinatorialProof proof = prove(phi);
            CHECK(taut);
            CHECK(verify(proof).empty());
            ++proved;
        } catch (const NotTrue&) {
            CHECK_FALSE(taut);
            ++refuted;
        }
    }
    CHECK(proved > 200);
    CHECK(refuted > 200);
}

TEST_CASE("clause cap propagates") {
    LabelledGraph acc = graph_of(parse_proposition("a & ~a"));
    for (int i = 1; i < 12; ++i)
        acc = graph_union(acc, relabel_fresh(graph_of(parse_proposition("a & ~a")), 10 * i));
    CHECK_THROWS_AS(synthesize(acc, 100), ResourceLimit);
}
