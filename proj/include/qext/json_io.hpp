#pragma once

#include <json.hpp>

#include "qext/bicrossed.hpp"
#include "qext/cohomology.hpp"
#include "qext/group.hpp"
#include "qext/matched_pair.hpp"

namespace qext {

using json = nlohmann::ordered_json;

// group-spec document: either an explicit table
//   {"name": str, "order": n, "table": [[int]]}
// or permutation generators
//   {"name": str, "degree": d, "generators": [[int]]}
FiniteGroup group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);

// matched-pair document: {"name", "ambient": <group doc or file path handled
// by the caller>, "h1": [int], "h2": [int]}; serialization includes the
// derived action tables.
MatchedPair pair_from_json(const json& j, const FiniteGroup& ambient);
json pair_to_json(const MatchedPair& p);

// {"denominator": d, "U": [[[int]]], "V": [[[int]]]} with integers mod d
CocyclePair cocycle_from_json(const json& j, const MatchedPair& pair);
json cocycle_to_json(const CocyclePair& c);

json gamma_to_json(const AbelianInvariants& g);
json operator_to_json(const PhasePermOperator& w);
json checks_to_json(const std::vector<AxiomCheck>& checks);

}  // namespace qext
