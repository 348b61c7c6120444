#pragma once

#include <string>

#include "combproof/proof.hpp"

namespace combproof {

// DOT rendering of a labelled graph; "~p" renders as UTF-8 "¬p".
std::string to_dot(const LabelledGraph& g);

// DOT rendering of a proof: witness cluster above the target cluster,
// witness vertices filled by colour class, map arrows dashed.
std::string to_dot(const CombinatorialProof& proof);

}  // namespace combproof
