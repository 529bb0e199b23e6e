#pragma once

#include <json.hpp>

#include "pgg/equilibria.hpp"
#include "pgg/graph.hpp"
#include "pgg/metrics.hpp"

namespace pgg {

using Json = nlohmann::ordered_json;

// Weight file: a JSON object mapping every graph label to a rational string
// ("3/2", "1"). Missing or unknown labels and bad rationals are errors.
RatVec weights_from_json(const std::string& text, const Graph& g);

Json rat_vec_to_json(const RatVec& v);
Json profile_to_json(const EffortProfile& p);
Json piece_to_json(const EquilibriumPiece& piece);
Json equilibrium_set_to_json(const EquilibriumSet& es);
Json classification_to_json(const ProfileClassification& c);

const char* role_name(AgentRole role);
const char* kind_name(ProfileKind kind);

}  // namespace pgg
