#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "combproof/dot.hpp"
#include "combproof/json_io.hpp"
#include "combproof/synth.hpp"
#include "support/gen.hpp"

using namespace combproof;
using nlohmann::json;

TEST_CASE("labelled graph JSON shape") {
    LabelledGraph g = graph_of(parse_proposition("((p->q)->p)->p"));
    json j = to_json(g);
    CHECK(j["edges"] == json::parse("[[0,2],[1,2]]"));
    CHECK(j["vertices"][0] == json::parse(R"({"id":0,"label":"~p"})"));
    CHECK(j["vertices"][2] == json::parse(R"({"id":2,"label":"~p"})"));
    CHECK_FALSE(j.contains("classes"));
    CHECK(labelled_graph_from_json(j) == g);
}

TEST_CASE("coloured graph JSON carries classes") {
    ColouredGraph c;
    c.vertices = {0, 1, 2, 3};
    c.edges = {{0, 2}};
    c.classes = {{0, 1}, {2, 3}};
    json j = to_json(c);
    CHECK(j["classes"] == json::parse("[[0,1],[2,3]]"));
    CHECK(coloured_graph_from_json(j) == c);
}

TEST_CASE("graph JSON round trips") {
    std::mt19937 rng(60);
    for (int i = 0; i < 300; ++i) {
        LabelledGraph g = testgen::random_labelled_cograph(rng, testgen::pick(rng, 1, 10));
        CHECK(labelled_graph_from_json(json::parse(to_json(g).dump())) == g);

        ColouredGraph c = testgen::random_coloured_cograph(rng, testgen::pick(rng, 1, 10));
        CHECK(coloured_graph_from_json(json::parse(to_json(c).dump())) == c);
    }
}

TEST_CASE("proof JSON round trips and stays verifiable") {
    std::mt19937 rng(61);
    int done = 0;
    while (done < 200) {
        Prop phi = testgen::random_prop(rng, testgen::pick(rng, 1, 9), {"p", "q"});
        CombinatorialProof proof;
        try {
            proof = prove(phi);
        } catch (const NotTrue&) {
            continue;
        }
        CombinatorialProof back = proof_from_json(json::parse(to_json(proof).dump()));
        CHECK(back == proof);
        CHECK(verify(back).empty());
        ++done;
    }
}

TEST_CASE("fusion spec JSON round trips") {
    std::mt19937 rng(62);
    for (int i = 0; i < 100; ++i) {
        FusionSpec spec;
        spec.left = testgen::random_nice_cograph(rng, testgen::pick(rng, 0, 4));
        spec.right = relabel_fresh(testgen::random_nice_cograph(rng, testgen::pick(rng, 0, 4)),
                                   500);
        spec.left_portion = testgen::random_portion(rng, spec.left);
        spec.right_portion = testgen::random_portion(rng, spec.right);
        FusionSpec back = fusion_spec_from_json(json::parse(to_json(spec).dump()));
        CHECK(back == spec);
    }
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(labelled_graph_from_json(json::parse("{}")), Error);
    CHECK_THROWS_AS(labelled_graph_from_json(json::parse(R"({"vertices":[{"id":0}],"edges":[]})")),
                    Error);  // missing label
    CHECK_THROWS_AS(
        labelled_graph_from_json(json::parse(
            R"({"vertices":[{"id":0,"label":"p"}],"edges":[[0,0]]})")),
        Error);  // loop
    CHECK_THROWS_AS(
        labelled_graph_from_json(json::parse(
            R"({"vertices":[{"id":0,"label":"p"},{"id":0,"label":"q"}],"edges":[]})")),
        Error);  // duplicate id
    CHECK_THROWS_AS(
        labelled_graph_from_json(json::parse(
            R"({"vertices":[{"id":0,"label":"p$"}],"edges":[]})")),
        Error);  // bad atom
    CHECK_THROWS_AS(
        coloured_graph_from_json(json::parse(R"({"vertices":[{"id":0}],"edges":[]})")),
        Error);  // no classes
    CHECK_THROWS_AS(
        labelled_graph_from_json(json::parse(
            R"({"vertices":[{"id":-1,"label":"p"}],"edges":[]})")),
        Error);  // negative id
    CHECK_THROWS_AS(proof_from_json(json::parse(R"({"target":{}})")), Error);
}

TEST_CASE("DOT output") {
    LabelledGraph g = graph_of(parse_proposition("p & ~q"));
    std::string dot = to_dot(g);
    CHECK(dot.find("t0 [label=\"p\"]") != std::string::npos);
    CHECK(dot.find("t1 [label=\"¬q\"]") != std::string::npos);
    CHECK(dot.find("t0 -> t1 [dir=none]") != std::string::npos);

    CombinatorialProof proof = prove(parse_proposition("p | ~p"));
    std::string proof_dot = to_dot(proof);
    CHECK(proof_dot.find("cluster_witness") != std::string::npos);
    CHECK(proof_dot.find("cluster_target") != std::string::npos);
    CHECK(proof_dot.find("w0 -> t0 [style=dashed]") != std::string::npos);
}
