#include "pgg/io_json.hpp"

#include <stdexcept>

namespace pgg {

RatVec weights_from_json(const std::string& text, const Graph& g) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("weight file: ") + e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("weight file: expected an object");
  RatVec w(g.n());
  std::vector<bool> seen(g.n(), false);
  std::vector<std::string> labels;
  for (int v = 0; v < g.n(); ++v) labels.push_back(g.label(v));
  for (auto& [key, val] : j.items()) {
    int id = -1;
    for (int v = 0; v < g.n(); ++v)
      if (labels[v] == key) {
        id = v;
        break;
      }
    if (id == -1)
      throw std::invalid_argument("weight file: unknown label '" + key + "'");
    if (!val.is_string())
      throw std::invalid_argument("weight file: value for '" + key +
                                  "' must be a rational string");
    w[id] = rat_from_string(val.get<std::string>());
    seen[id] = true;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!seen[v])
      throw std::invalid_argument("weight file: missing label '" + labels[v] +
                                  "'");
  return w;
}

Json rat_vec_to_json(const RatVec& v) {
  Json arr = Json::array();
  for (const Rat& q : v) arr.push_back(rat_to_string(q));
  return arr;
}

Json profile_to_json(const EffortProfile& p) {
  Json j;
  j["efforts"] = rat_vec_to_json(p.x);
  j["e_star"] = rat_to_string(p.e_star);
  return j;
}

Json piece_to_json(const EquilibriumPiece& piece) {
  Json j;
  j["support"] = piece.support.members;
  j["dim"] = piece.dim;
  j["base"] = rat_vec_to_json(piece.base);
  Json dirs = Json::array();
  for (const RatVec& d : piece.directions) dirs.push_back(rat_vec_to_json(d));
  j["directions"] = dirs;
  Json cons = Json::array();
  for (const IneqRow& row : piece.constraints) {
    Json r;
    r["coeffs"] = rat_vec_to_json(row.a);
    r["offset"] = rat_to_string(row.c0);
    cons.push_back(r);
  }
  j["constraints"] = cons;
  Json verts = Json::array();
  for (const RatVec& v : piece.vertices) verts.push_back(rat_vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

Json equilibrium_set_to_json(const EquilibriumSet& es) {
  Json j;
  j["n"] = es.n;
  j["e_star"] = rat_to_string(es.e_star);
  Json pieces = Json::array();
  for (const EquilibriumPiece& piece : es.pieces)
    pieces.push_back(piece_to_json(piece));
  j["pieces"] = pieces;
  return j;
}

const char* role_name(AgentRole role) {
  switch (role) {
    case AgentRole::specialist: return "specialist";
    case AgentRole::free_rider: return "free_rider";
    case AgentRole::co_specialist: return "co_specialist";
    case AgentRole::other_supporting: return "other_supporting";
  }
  return "?";
}

const char* kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::specialized: return "specialized";
    case ProfileKind::distributed: return "distributed";
    case ProfileKind::hybrid: return "hybrid";
  }
  return "?";
}

Json classification_to_json(const ProfileClassification& c) {
  Json j;
  j["kind"] = kind_name(c.kind);
  Json roles = Json::array();
  for (AgentRole role : c.roles) roles.push_back(role_name(role));
  j["roles"] = roles;
  Json links = Json::array();
  for (auto [a, b] : c.co_specialist_links) links.push_back(Json::array({a, b}));
  j["co_specialist_links"] = links;
  return j;
}

}  // namespace pgg
