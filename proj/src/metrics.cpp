#include "pgg/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "pgg/indep_sets.hpp"

namespace pgg {

Rat neighborhood_effort(const Graph& g, const RatVec& x, int i) {
  if (i < 0 || i >= g.n()) throw std::out_of_range("agent id out of range");
  Rat s = x.at(i);
  for (int j : g.neighbors(i)) s += x[j];
  return s;
}

double welfare(const BenefitFunction& bf, const Graph& g,
               const EffortProfile& p) {
  RatVec scn = neighborhood_efforts(g, p.x);
  double total = 0.0;
  for (int i = 0; i < g.n(); ++i) total += bf.value(rat_to_double(scn[i]));
  return total - rat_to_double(bf.c * vec_sum(p.x));
}

double utility(const BenefitFunction& bf, const Graph& g,
               const EffortProfile& p, int i) {
  Rat scn = neighborhood_effort(g, p.x, i);
  return bf.value(rat_to_double(scn)) - rat_to_double(bf.c * p.x.at(i));
}

Rat weighted_effort(const RatVec& w, const EffortProfile& p) {
  return dot(w, p.x);
}

Rat cost(const Rat& c, const EffortProfile& p) {
  if (c <= 0) throw std::invalid_argument("cost rate must be positive");
  return c * vec_sum(p.x);
}

ProfileClassification classify(const Graph& g, const EffortProfile& p) {
  EquilibriumCheck chk = check_equilibrium(g, p);
  if (!chk.ok) throw std::invalid_argument("profile is not an equilibrium");
  ProfileClassification out;
  out.roles.assign(g.n(), AgentRole::other_supporting);
  for (int i = 0; i < g.n(); ++i) {
    if (p.x[i] == 0) {
      out.roles[i] = AgentRole::free_rider;
    } else if (p.x[i] == p.e_star) {
      out.roles[i] = AgentRole::specialist;
    } else {
      out.roles[i] = AgentRole::other_supporting;
      for (int j : g.neighbors(i)) {
        if (p.x[j] > 0 && p.x[i] + p.x[j] == p.e_star) {
          out.roles[i] = AgentRole::co_specialist;
          if (i < j) out.co_specialist_links.emplace_back(i, j);
          break;
        }
      }
    }
  }
  bool any_free = false, any_partial = false;
  for (int i = 0; i < g.n(); ++i) {
    if (out.roles[i] == AgentRole::free_rider) any_free = true;
    if (out.roles[i] == AgentRole::co_specialist ||
        out.roles[i] == AgentRole::other_supporting)
      any_partial = true;
  }
  if (!any_partial)
    out.kind = ProfileKind::specialized;
  else if (!any_free)
    out.kind = ProfileKind::distributed;
  else
    out.kind = ProfileKind::hybrid;
  return out;
}

namespace {

void expect(StructureReport& r, bool cond, const std::string& what) {
  if (!cond) {
    r.ok = false;
    r.failures.push_back(what);
  }
}

}  // namespace

StructureReport check_equilibrium_structure(const Graph& g,
                                            const EffortProfile& p) {
  StructureReport r;
  EquilibriumCheck chk = check_equilibrium(g, p);
  expect(r, chk.ok, "profile is an equilibrium");
  if (!chk.ok) return r;
  RatVec scn = neighborhood_efforts(g, p.x);
  ProfileClassification cls = classify(g, p);

  uint64_t support = 0;
  for (int i = 0; i < g.n(); ++i)
    if (p.x[i] > 0) support |= uint64_t{1} << i;
  expect(r, is_dominating(g, support), "support is a dominating set");

  uint64_t specialists = 0;
  for (int i = 0; i < g.n(); ++i)
    if (cls.roles[i] == AgentRole::specialist) specialists |= uint64_t{1} << i;
  expect(r, is_independent(g, specialists), "specialists are independent");

  expect(r, is_matching(g, cls.co_specialist_links),
         "co-specialist links form a matching");

  for (int i = 0; i < g.n(); ++i) {
    int d = g.degree(i);
    if (d == 0) {
      expect(r, p.x[i] == p.e_star && scn[i] == p.e_star,
             "isolated agent exerts exactly e*");
      continue;
    }
    expect(r, p.x[i] <= p.e_star, "effort at most e*");
    expect(r, scn[i] >= p.e_star, "neighborhood effort at least e*");
    expect(r, scn[i] <= Rat(d) * p.e_star,
           "neighborhood effort at most degree times e*");
    if (p.x[i] > 0)
      expect(r, scn[i] == p.e_star, "supporting agent has tight neighborhood");
    // saturation: neighborhood effort hits d e* exactly when the agent free
    // rides surrounded by specialists (or trivially, supports with a single
    // neighbor, where the tight neighborhood is already d e*)
    bool all_nb_specialists = true;
    for (int j : g.neighbors(i))
      if (cls.roles[j] != AgentRole::specialist) all_nb_specialists = false;
    bool saturated = scn[i] == Rat(d) * p.e_star;
    bool saturation_cases =
        (p.x[i] == 0 && all_nb_specialists) || (p.x[i] > 0 && d == 1);
    expect(r, saturated == saturation_cases,
           "neighborhood saturation only for free riders among specialists");
  }
  return r;
}

StructureReport check_pendant_rules(const Graph& g, const EffortProfile& p) {
  StructureReport r;
  EquilibriumCheck chk = check_equilibrium(g, p);
  expect(r, chk.ok, "profile is an equilibrium");
  if (!chk.ok) return r;
  ProfileClassification cls = classify(g, p);
  std::vector<PendantPair> pendants = dependants_and_guardians(g);

  std::vector<std::vector<int>> dependants_of(g.n());
  for (const PendantPair& pp : pendants)
    dependants_of[pp.guardian].push_back(pp.dependant);

  for (const PendantPair& pp : pendants) {
    AgentRole role = cls.roles[pp.dependant];
    expect(r, role != AgentRole::other_supporting,
           "dependant is specialist, free rider, or co-specialist");
    if (role == AgentRole::specialist)
      expect(r, cls.roles[pp.guardian] == AgentRole::free_rider,
             "guardian of a specialist dependant free rides");
    if (role == AgentRole::free_rider)
      expect(r, cls.roles[pp.guardian] == AgentRole::specialist,
             "guardian of a free-riding dependant is a specialist");
    if (role == AgentRole::co_specialist) {
      bool linked = false;
      for (auto [a, b] : cls.co_specialist_links)
        if ((a == pp.dependant && b == pp.guardian) ||
            (b == pp.dependant && a == pp.guardian))
          linked = true;
      expect(r, linked, "co-specialist dependant pairs with its guardian");
      expect(r, dependants_of[pp.guardian].size() == 1,
             "co-specialist dependant is its guardian's only dependant");
    }
  }
  for (int gdn = 0; gdn < g.n(); ++gdn) {
    if (dependants_of[gdn].size() < 2) continue;
    bool all_spec = true, all_free = true;
    for (int dep : dependants_of[gdn]) {
      if (cls.roles[dep] != AgentRole::specialist) all_spec = false;
      if (cls.roles[dep] != AgentRole::free_rider) all_free = false;
    }
    expect(r, all_spec || all_free,
           "dependants sharing a guardian share one role");
  }
  return r;
}

bool stability_necessary(const Graph& g, const EffortProfile& p) {
  ProfileClassification cls = classify(g, p);
  if (cls.kind != ProfileKind::specialized) return false;
  for (int i = 0; i < g.n(); ++i) {
    if (cls.roles[i] != AgentRole::free_rider) continue;
    int specialist_neighbors = 0;
    for (int j : g.neighbors(i))
      if (cls.roles[j] == AgentRole::specialist) ++specialist_neighbors;
    if (specialist_neighbors < 2) return false;
  }
  return true;
}

EffortProfile improve_pendant_cospecialist(const Graph& g,
                                           const EffortProfile& p,
                                           int dependant) {
  if (dependant < 0 || dependant >= g.n())
    throw std::out_of_range("agent id out of range");
  if (g.degree(dependant) != 1)
    throw std::invalid_argument("agent is not a dependant");
  int guardian = g.neighbors(dependant)[0];
  if (g.degree(guardian) < 2)
    throw std::invalid_argument("co-dependant pair cannot be improved");
  if (!(p.x[dependant] > 0 && p.x[guardian] > 0 &&
        p.x[dependant] + p.x[guardian] == p.e_star))
    throw std::invalid_argument("pair is not a co-specialist link");
  for (const PendantPair& pp : dependants_and_guardians(g))
    if (pp.guardian == guardian && pp.dependant != dependant)
      throw std::invalid_argument("guardian has another dependant");
  if (!check_equilibrium(g, p).ok)
    throw std::invalid_argument("profile is not an equilibrium");

  EffortProfile y = p;
  y.x[guardian] = p.e_star;
  y.x[dependant] = 0;
  if (!check_equilibrium(g, y).ok)
    throw std::logic_error("shifted profile failed the equilibrium check");
  return y;
}

EffortProfile forest_specialize_support(const Graph& g,
                                        const EffortProfile& p) {
  if (!is_forest(g)) throw std::invalid_argument("graph is not a forest");
  if (!check_equilibrium(g, p).ok)
    throw std::invalid_argument("profile is not an equilibrium");
  uint64_t support = 0;
  for (int i = 0; i < g.n(); ++i)
    if (p.x[i] > 0) support |= uint64_t{1} << i;
  for (const NodeSet& s : enumerate_mis(g)) {  // lex order
    if ((s.mask & ~support) == 0) {
      EffortProfile y = specialized_from_mis(g, p.e_star, s);
      if (vec_sum(y.x) != vec_sum(p.x))
        throw std::logic_error("specialized support changed total effort");
      return y;
    }
  }
  throw std::logic_error("no maximal independent set inside the support");
}

Rat forest_cost_formula(const Graph& g, const Rat& c, const EffortProfile& p) {
  if (!is_forest(g)) throw std::invalid_argument("graph is not a forest");
  ProfileClassification cls = classify(g, p);
  long specialists = 0, co_specialists = 0;
  for (AgentRole role : cls.roles) {
    if (role == AgentRole::specialist) ++specialists;
    if (role == AgentRole::co_specialist) ++co_specialists;
  }
  Rat predicted = c * p.e_star * (rat(specialists) + rat(co_specialists, 2));
  Rat actual = cost(c, p);
  if (predicted != actual)
    throw std::logic_error("cost formula mismatch on a forest equilibrium");
  return predicted;
}

}  // namespace pgg
