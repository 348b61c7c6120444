#pragma once

#include <json.hpp>

#include "combproof/proof.hpp"
#include "combproof/transform.hpp"

namespace combproof {

// Graph interchange format:
//   {"vertices":[{"id":0,"label":"~p"},...],
//    "edges":[[0,2],[1,2]],
//    "classes":[[0,1],[2,3]]}
// labels use the formula surface syntax for atoms; classes appear only on
// coloured graphs.  Proofs serialize their map with string keys:
//   {"map":{"0":0,...},"target":<graph>,"witness":<coloured graph>}

nlohmann::json to_json(const LabelledGraph& g);
nlohmann::json to_json(const ColouredGraph& g);
nlohmann::json to_json(const CombinatorialProof& proof);
nlohmann::json to_json(const FusionSpec& spec);

LabelledGraph labelled_graph_from_json(const nlohmann::json& j);
ColouredGraph coloured_graph_from_json(const nlohmann::json& j);
CombinatorialProof proof_from_json(const nlohmann::json& j);
FusionSpec fusion_spec_from_json(const nlohmann::json& j);

}  // namespace combproof
