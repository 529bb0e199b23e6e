// pggnet: command line front end. Subcommands:
//   equilibria  enumerate the polyhedral pieces of the equilibrium set
//   analyze     extremal welfare / effort / cost report with witnesses
//   verify      run the theorem battery (or a per-graph structure matrix)
//   gen         seeded instance generators
//   export-dot  render one equilibrium with role annotations
// Exit codes: 0 ok, 1 verification failure, 2 bad input.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "pgg/benefit.hpp"
#include "pgg/equilibria.hpp"
#include "pgg/generators.hpp"
#include "pgg/graph.hpp"
#include "pgg/indep_sets.hpp"
#include "pgg/io_json.hpp"
#include "pgg/metrics.hpp"
#include "pgg/optimizer.hpp"
#include "pgg/verify.hpp"

namespace {

using namespace pgg;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// empty path means stdout
void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

Graph load_graph(const std::string& path, int n_max) {
  Graph g = parse_edge_list(read_file(path));
  if (g.n() > n_max)
    throw std::invalid_argument("graph has " + std::to_string(g.n()) +
                                " vertices, above the --n-max guard of " +
                                std::to_string(n_max));
  return g;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json labels = Json::array();
  for (int v = 0; v < g.n(); ++v) labels.push_back(g.label(v));
  j["labels"] = labels;
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = edges;
  return j;
}

RatVec resolve_weights(const std::string& spec, const Graph& g) {
  RatVec w(g.n());
  if (spec == "ones") {
    for (Rat& q : w) q = 1;
    return w;
  }
  if (spec == "degrees") {
    for (int v = 0; v < g.n(); ++v) w[v] = g.degree(v);
    return w;
  }
  return weights_from_json(read_file(spec), g);
}

Rat parse_positive(const std::string& s, const char* flag) {
  Rat q = rat_from_string(s);
  if (q <= 0)
    throw std::invalid_argument(std::string(flag) + " must be positive");
  return q;
}

bool has_isolated(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

struct ParamOpts {
  std::string e_star = "1";
  std::string cost = "1";
  std::string b0 = "1";
  double k = 1.0;
  double sigma_b = 0.5;
  std::vector<double> sweep;
};

struct ResolvedParams {
  Rat e_star, c, b0;
  std::vector<double> ks;
  std::vector<double> sigmas;  // parallel to ks when concavity-driven
};

ResolvedParams resolve_params(const ParamOpts& o, int n, bool sigma_given,
                              bool sweep_given) {
  ResolvedParams r;
  r.e_star = parse_positive(o.e_star, "--e-star");
  r.c = parse_positive(o.cost, "--cost");
  r.b0 = rat_from_string(o.b0);
  auto sigma_to_k = [&](double s) {
    if (!(s > 0 && s < 1))
      throw std::invalid_argument(
          "concavity index must lie strictly between 0 and 1");
    if (n < 2)
      throw std::invalid_argument(
          "concavity targets need at least two agents");
    return solve_k_for_sigma(s, n, r.e_star);
  };
  if (sweep_given) {
    if (o.sweep.empty())
      throw std::invalid_argument("--sigma-sweep needs at least one value");
    for (double s : o.sweep) {
      r.sigmas.push_back(s);
      r.ks.push_back(sigma_to_k(s));
    }
  } else if (sigma_given) {
    r.sigmas.push_back(o.sigma_b);
    r.ks.push_back(sigma_to_k(o.sigma_b));
  } else {
    if (!(o.k > 0) || !std::isfinite(o.k))
      throw std::invalid_argument("--k must be positive and finite");
    r.ks.push_back(o.k);
  }
  return r;
}

BenefitFunction benefit_for(const ResolvedParams& r, int n, double k) {
  return make_benefit(r.b0, r.c, r.e_star, k, std::max(2, n));
}

// ---------------------------------------------------------------- equilibria

int cmd_equilibria(const Graph& g, const Rat& e_star, int n_max,
                   const std::string& out) {
  Json j;
  j["graph"] = graph_to_json(g);
  j["e_star"] = rat_to_string(e_star);
  if (g.n() == 0) {
    j["piece_count"] = 0;
    j["pieces"] = Json::array();
    Json kc;
    kc["specialized"] = 0;
    kc["distributed"] = 0;
    kc["hybrid"] = 0;
    j["kind_counts"] = kc;
    write_json(out, j);
    return 0;
  }
  EquilibriumSet es = enumerate_pieces(g, e_star, n_max);
  j["piece_count"] = static_cast<long>(es.pieces.size());
  int counts[3] = {0, 0, 0};
  Json pieces = Json::array();
  for (const EquilibriumPiece& pc : es.pieces) {
    Json pj = piece_to_json(pc);
    EffortProfile bary{pc.barycenter(), e_star};
    pj["barycenter"] = rat_vec_to_json(bary.x);
    ProfileClassification cl = classify(g, bary);
    pj["classification"] = classification_to_json(cl);
    counts[static_cast<int>(cl.kind)]++;
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  Json kc;
  kc["specialized"] = counts[static_cast<int>(ProfileKind::specialized)];
  kc["distributed"] = counts[static_cast<int>(ProfileKind::distributed)];
  kc["hybrid"] = counts[static_cast<int>(ProfileKind::hybrid)];
  j["kind_counts"] = kc;
  write_json(out, j);
  return 0;
}

// ------------------------------------------------------------------- analyze

int cmd_analyze(const Graph& g, const ResolvedParams& pr,
                const std::string& weights_spec, int n_max,
                const std::string& out) {
  if (g.n() == 0) throw std::invalid_argument("graph is empty");
  const int n = g.n();
  RatVec w = resolve_weights(weights_spec, g);
  EquilibriumSet es = enumerate_pieces(g, pr.e_star, n_max);
  const bool isolated = has_isolated(g);
  const bool forest = is_forest(g);
  const bool wc_forest = forest && !isolated && is_well_covered_forest(g);
  const int beta = independent_domination_number(g);
  std::vector<std::string> bad;

  LinearOptimum ew = max_weighted_effort(es, w);
  LinearOptimum cm = min_cost(es, pr.c);
  WeightedIndependence wi = weighted_independence(g, w);
  if (ew.value != pr.e_star * wi.weight)
    bad.push_back("weighted effort maximum differs from e* times the "
                  "maximum independence weight");

  Json j;
  j["graph"] = graph_to_json(g);
  Json par;
  par["e_star"] = rat_to_string(pr.e_star);
  par["cost"] = rat_to_string(pr.c);
  par["b0"] = rat_to_string(pr.b0);
  par["weights"] = weights_spec;
  j["parameters"] = std::move(par);
  j["piece_count"] = static_cast<long>(es.pieces.size());

  Json exact;
  {
    Json q;
    q["value"] = rat_to_string(ew.value);
    q["witness"] = profile_to_json(ew.witness);
    q["tie_pieces"] = ew.tie_pieces;
    exact["effort_max"] = std::move(q);
  }
  {
    Json q;
    q["weight"] = rat_to_string(wi.weight);
    q["witness"] = wi.witness.members;
    q["tie_sets"] = wi.tie_count;
    exact["weighted_independence"] = std::move(q);
  }
  {
    Json q;
    q["value"] = rat_to_string(cm.value);
    q["witness"] = profile_to_json(cm.witness);
    q["tie_pieces"] = cm.tie_pieces;
    exact["cost_min"] = std::move(q);
  }

  Json reports = Json::array();
  Json table = Json::array();
  const double tol_scale = 1e-7;
  for (size_t ki = 0; ki < pr.ks.size(); ++ki) {
    const double k = pr.ks[ki];
    BenefitFunction bf = benefit_for(pr, n, k);
    WelfareOptimum wm = max_welfare(es, g, bf);
    SpecializedExtrema sx = specialized_extrema(g, pr.e_star, bf, w, pr.c);
    DistributedExtrema dx = distributed_extrema(es, g, bf, pr.c);

    if (ki == 0) {
      if (ew.value != sx.max_weighted_effort)
        bad.push_back("weighted effort maximum not attained at a "
                      "specialized equilibrium");
      if (cm.value > sx.min_cost)
        bad.push_back("specialized minimum cost fell below the global one");
      if (forest && cm.value != pr.c * pr.e_star * beta)
        bad.push_back("forest: minimum cost differs from c e* times the "
                      "smallest maximal independent set");
      if (dx.exists && (cm.value > dx.min_cost || dx.min_cost > sx.min_cost))
        bad.push_back("distributed minimum cost escaped the "
                      "global/specialized cost sandwich");
      {
        Json q;
        q["value"] = rat_to_string(sx.max_weighted_effort);
        q["witness"] = profile_to_json(sx.max_weighted_effort_witness);
        q["ties"] = sx.max_weighted_effort_ties;
        exact["effort_max_specialized"] = std::move(q);
      }
      {
        Json q;
        q["value"] = rat_to_string(sx.min_cost);
        q["witness"] = profile_to_json(sx.min_cost_witness);
        q["ties"] = sx.min_cost_ties;
        exact["cost_min_specialized"] = std::move(q);
      }
      {
        Json q;
        q["exists"] = dx.exists;
        if (dx.exists) {
          q["value"] = rat_to_string(dx.min_cost);
          q["witness"] = profile_to_json(dx.min_cost_witness);
          q["closure_witness"] = dx.min_cost_closure;
        }
        exact["cost_min_distributed"] = std::move(q);
      }
    }

    const double wscale = std::max(1.0, std::fabs(sx.max_welfare));
    if (wm.value < sx.max_welfare - tol_scale * wscale)
      bad.push_back("welfare maximum fell below the specialized maximum at "
                    "k " + std::to_string(k));
    if (forest && dx.exists) {
      double floor_w = n * rat_to_double(pr.b0) -
                       rat_to_double(pr.c * pr.e_star) * beta;
      if (dx.min_welfare < floor_w - tol_scale * std::max(1.0, std::fabs(floor_w)))
        bad.push_back("forest: distributed welfare fell below the "
                      "smallest-cover level at k " + std::to_string(k));
    }

    Json rep;
    rep["k"] = k;
    if (!pr.sigmas.empty()) rep["sigma_b_requested"] = pr.sigmas[ki];
    if (n >= 2) rep["sigma_b"] = concavity(bf, n);
    {
      Json q;
      q["value"] = wm.value;
      q["gap"] = wm.gap;
      q["converged"] = wm.converged;
      q["iterations"] = wm.iterations;
      q["piece"] = wm.piece_index;
      Json wit = Json::array();
      for (double x : wm.witness) wit.push_back(x);
      q["witness"] = std::move(wit);
      rep["welfare_max"] = std::move(q);
    }
    {
      Json q;
      q["value"] = sx.max_welfare;
      q["witness"] = profile_to_json(sx.max_welfare_witness);
      rep["welfare_max_specialized"] = std::move(q);
    }
    {
      Json q;
      q["exists"] = dx.exists;
      if (dx.exists) {
        q["value"] = dx.min_welfare;
        q["witness"] = profile_to_json(dx.min_welfare_witness);
        q["closure_witness"] = dx.min_welfare_closure;
      }
      rep["welfare_min_distributed"] = std::move(q);
    }

    if (!isolated) {
      LimitTargets lt = limit_targets(g, bf);
      Json lj;
      lj["high_concavity_welfare"] = lt.high_concavity_welfare;
      lj["high_witness"] = lt.high_witness.members;
      if (lt.low_concavity_welfare) {
        lj["low_concavity_welfare"] = *lt.low_concavity_welfare;
        lj["low_witness"] = lt.low_witness->members;
      }
      rep["limits"] = std::move(lj);

      EffortProfile high = specialized_from_mis(g, pr.e_star, lt.high_witness);
      double w_high = welfare(bf, g, high);
      Json cv;
      cv["welfare_at_high_witness"] = w_high;
      cv["refinement_gap"] = std::fabs(wm.value - w_high);
      cv["gap_to_high_limit"] = std::fabs(wm.value - lt.high_concavity_welfare);
      if (lt.low_concavity_welfare)
        cv["gap_to_low_limit"] =
            std::fabs(wm.value - *lt.low_concavity_welfare);
      rep["convergence"] = cv;

      Json bj;
      {
        WelfareBounds bb = welfare_bounds(bf, g, sx.max_welfare_witness);
        double wv = sx.max_welfare;
        Json q;
        q["lower"] = bb.lower;
        q["welfare"] = wv;
        q["upper"] = bb.upper;
        bj["specialized_max_witness"] = std::move(q);
        double s = std::max(1.0, std::fabs(wv));
        if (wv < bb.lower - tol_scale * s || wv > bb.upper + tol_scale * s)
          bad.push_back("welfare sandwich violated at the specialized "
                        "maximum witness, k " + std::to_string(k));
      }
      if (dx.exists) {
        WelfareBounds bb = welfare_bounds(bf, g, dx.min_welfare_witness);
        double wv = welfare(bf, g, dx.min_welfare_witness);
        Json q;
        q["lower"] = bb.lower;
        q["welfare"] = wv;
        q["upper"] = bb.upper;
        bj["distributed_min_witness"] = std::move(q);
        double s = std::max(1.0, std::fabs(wv));
        if (wv < bb.lower - tol_scale * s || wv > bb.upper + tol_scale * s)
          bad.push_back("welfare sandwich violated at the distributed "
                        "minimum witness, k " + std::to_string(k));
      }
      rep["bounds"] = std::move(bj);

      Json row;
      if (!pr.sigmas.empty()) row["sigma_b"] = pr.sigmas[ki];
      row["k"] = k;
      row["welfare_max"] = wm.value;
      row["welfare_at_high_witness"] = w_high;
      row["refinement_gap"] = std::fabs(wm.value - w_high);
      row["gap_to_high_limit"] =
          std::fabs(wm.value - lt.high_concavity_welfare);
      if (lt.low_concavity_welfare)
        row["gap_to_low_limit"] =
            std::fabs(wm.value - *lt.low_concavity_welfare);
      table.push_back(std::move(row));
    } else if (ki == 0) {
      rep["limits_skipped"] = "graph has isolated vertices";
    }
    reports.push_back(std::move(rep));
  }

  j["exact"] = std::move(exact);
  j["reports"] = std::move(reports);
  if (pr.ks.size() > 1 && !table.empty()) j["convergence_table"] = table;

  {
    Json cc;
    cc["applies"] = wc_forest;
    if (wc_forest) {
      Rat half = pr.c * pr.e_star * rat(n, 2);
      cc["value"] = rat_to_string(half);
      if (cm.value != half)
        bad.push_back("well-covered forest: minimum cost differs from half "
                      "of c e* n");
    }
    j["constant_cost_well_covered_forest"] = std::move(cc);
  }

  Json bj = Json::array();
  for (const std::string& s : bad) bj.push_back(s);
  j["invariant_failures"] = std::move(bj);
  write_json(out, j);
  if (!bad.empty()) {
    for (const std::string& s : bad) std::cerr << "analyze: " << s << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------- gen

int cmd_gen(const std::string& kind, int n, int pairs, double p,
            uint64_t seed, const std::string& out) {
  SeededRng rng(seed);
  Graph g(0);
  if (kind == "gnp") {
    if (n < 1) throw std::invalid_argument("gnp needs --n >= 1");
    if (!(p >= 0 && p <= 1))
      throw std::invalid_argument("--p must lie in [0,1]");
    g = gen_gnp(n, p, rng);
  } else if (kind == "tree") {
    if (n < 1) throw std::invalid_argument("tree needs --n >= 1");
    g = gen_tree(n, rng);
    if (!is_forest(g) || !is_connected(g))
      throw std::runtime_error("generated tree failed its predicate");
  } else if (kind == "forest") {
    if (n < 1) throw std::invalid_argument("forest needs --n >= 1");
    if (!(p >= 0 && p <= 1))
      throw std::invalid_argument("--p must lie in [0,1]");
    g = gen_forest(n, p, rng);
    if (!is_forest(g))
      throw std::runtime_error("generated forest failed its predicate");
  } else if (kind == "regular-cycle") {
    if (n < 3) throw std::invalid_argument("regular-cycle needs --n >= 3");
    g = make_cycle(n);
    if (regular_degree(g) != std::optional<int>(2) || !is_connected(g))
      throw std::runtime_error("generated cycle failed its predicate");
  } else if (kind == "well-covered-forest") {
    if (pairs < 1)
      throw std::invalid_argument("well-covered-forest needs --pairs >= 1");
    g = gen_well_covered_forest(pairs, rng);
    if (!is_well_covered_forest(g))
      throw std::runtime_error(
          "generated well-covered forest failed its predicate");
  } else {
    throw std::invalid_argument("unknown kind " + kind);
  }
  write_text(out, emit_edge_list(g));
  return 0;
}

// --------------------------------------------------------------- export-dot

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

int cmd_export_dot(const Graph& g, const Rat& e_star, int n_max,
                   int piece_idx, const std::string& profile_path,
                   const std::string& out) {
  if (g.n() == 0) {
    write_text(out, "graph pgg {\n}\n");
    return 0;
  }
  EffortProfile p;
  p.e_star = e_star;
  if (!profile_path.empty()) {
    Json pj = Json::parse(read_file(profile_path));
    const Json& arr =
        (pj.is_object() && pj.contains("efforts")) ? pj["efforts"] : pj;
    if (!arr.is_array() || static_cast<int>(arr.size()) != g.n())
      throw std::invalid_argument(
          "profile file must hold one rational string per vertex");
    for (const Json& e : arr) {
      if (!e.is_string())
        throw std::invalid_argument("profile entries must be rational strings");
      p.x.push_back(rat_from_string(e.get<std::string>()));
    }
    EquilibriumCheck chk = check_equilibrium(g, p);
    if (!chk.ok)
      throw std::invalid_argument(
          "profile is not an equilibrium (first problem at agent " +
          std::to_string(chk.violations.front().agent) + ")");
  } else {
    EquilibriumSet es = enumerate_pieces(g, e_star, n_max);
    if (piece_idx < 0 || piece_idx >= static_cast<int>(es.pieces.size()))
      throw std::invalid_argument(
          "--piece out of range, graph has " +
          std::to_string(es.pieces.size()) + " pieces");
    p.x = es.pieces[piece_idx].barycenter();
  }

  ProfileClassification cl = classify(g, p);
  std::set<std::pair<int, int>> colinks(cl.co_specialist_links.begin(),
                                        cl.co_specialist_links.end());
  std::ostringstream d;
  d << "graph pgg {\n";
  d << "  overlap=false;\n";
  d << "  node [shape=circle, fontsize=10, fixedsize=true];\n";
  for (int v = 0; v < g.n(); ++v) {
    std::string label =
        dot_escape(g.label(v)) + "\\n" + rat_to_string(p.x[v]);
    d << "  n" << v << " [label=\"" << label << "\"";
    switch (cl.roles[v]) {
      case AgentRole::specialist:
        d << ", style=filled, fillcolor=black, fontcolor=white, width=0.5";
        break;
      case AgentRole::co_specialist:
        d << ", style=filled, fillcolor=gray70, width=0.4";
        break;
      case AgentRole::free_rider:
        d << ", width=0.25";
        break;
      case AgentRole::other_supporting:
        d << ", width=0.4";
        break;
    }
    d << "];\n";
  }
  for (auto [u, v] : g.edges()) {
    d << "  n" << u << " -- n" << v;
    if (colinks.count({u, v}))
      d << " [style=solid, penwidth=2]";
    else
      d << " [style=dotted]";
    d << ";\n";
  }
  d << "}\n";
  write_text(out, d.str());
  return 0;
}

// -------------------------------------------------------------------- verify

int cmd_verify_battery(const std::vector<int>& ids, const std::string& out) {
  std::vector<CriterionResult> rows = run_acceptance(ids, &std::cerr);
  bool all = true;
  std::ostringstream txt;
  for (const CriterionResult& r : rows) {
    all = all && r.pass;
    txt << (r.pass ? "[pass]" : "[FAIL]") << " criterion "
        << (r.id < 10 ? " " : "") << r.id << ": " << r.name << "\n";
    txt << "        " << r.detail << "\n";
  }
  txt << (all ? "all criteria hold" : "criteria FAILED") << " ("
      << rows.size() << " run)\n";
  std::cout << txt.str();
  if (!out.empty()) {
    Json j;
    Json arr = Json::array();
    for (const CriterionResult& r : rows) {
      Json row;
      row["id"] = r.id;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    j["all_pass"] = all;
    write_json(out, j);
  }
  return all ? 0 : 1;
}

struct VRow {
  std::string name;
  int st;  // 0 pass, 1 fail, 2 not applicable
  std::string detail;
};

int cmd_verify_graph(const Graph& g, const ResolvedParams& pr,
                     const std::string& weights_spec, int n_max,
                     const std::string& out) {
  if (g.n() == 0) throw std::invalid_argument("graph is empty");
  const int n = g.n();
  RatVec w = resolve_weights(weights_spec, g);
  BenefitFunction bf = benefit_for(pr, n, pr.ks[0]);
  EquilibriumSet es = enumerate_pieces(g, pr.e_star, n_max);
  const bool forest = is_forest(g);
  const bool isolated = has_isolated(g);

  std::vector<EffortProfile> points;
  for (const EquilibriumPiece& pc : es.pieces) {
    for (const RatVec& v : pc.vertices) points.push_back({v, pr.e_star});
    points.push_back({pc.barycenter(), pr.e_star});
  }
  std::vector<VRow> rows;
  auto add = [&](const std::string& name, int st, const std::string& detail) {
    rows.push_back({name, st, detail});
  };
  const std::string pts = std::to_string(points.size()) + " points on " +
                          std::to_string(es.pieces.size()) + " pieces";

  {
    int badv = 0;
    for (const EffortProfile& p : points)
      if (!check_equilibrium(g, p).ok) ++badv;
    add("enumerated points are equilibria", badv ? 1 : 0,
        badv ? std::to_string(badv) + " of " + pts + " failed" : pts);
  }
  {
    std::string first;
    for (const EffortProfile& p : points) {
      StructureReport sr = check_equilibrium_structure(g, p);
      if (!sr.ok && first.empty()) first = sr.failures.front();
    }
    add("support dominates, roles and effort chain hold", first.empty() ? 0 : 1,
        first.empty() ? pts : first);
  }
  {
    std::string first;
    for (const EffortProfile& p : points) {
      StructureReport sr = check_pendant_rules(g, p);
      if (!sr.ok && first.empty()) first = sr.failures.front();
    }
    add("degree-one agent rules hold", first.empty() ? 0 : 1,
        first.empty() ? pts : first);
  }
  {
    auto pairs = dependants_and_guardians(g);
    bool applicable = false;
    for (const PendantPair& pp : pairs)
      if (!pp.co_dependant) applicable = true;
    if (!applicable) {
      add("every equilibrium has a free rider", 2,
          "needs a dependant that is not a co-dependant");
    } else {
      bool ok = !distributed_piece(es).has_value();
      for (const EquilibriumPiece& pc : es.pieces) {
        RatVec b = pc.barycenter();
        bool zero = false;
        for (const Rat& q : b)
          if (q == 0) zero = true;
        if (!zero) ok = false;
      }
      add("every equilibrium has a free rider", ok ? 0 : 1,
          ok ? "no strictly positive piece"
             : "found a piece with strictly positive interior");
    }
  }
  if (forest) {
    std::string first;
    for (const EffortProfile& p : points) {
      try {
        forest_cost_formula(g, pr.c, p);
      } catch (const std::exception& e) {
        if (first.empty()) first = e.what();
      }
    }
    add("forest cost counts specialists plus half the co-specialists",
        first.empty() ? 0 : 1, first.empty() ? pts : first);
    Rat target = pr.c * pr.e_star * independent_domination_number(g);
    Rat got = min_cost(es, pr.c).value;
    add("forest minimum cost sits at the smallest maximal independent set",
        got == target ? 0 : 1,
        "C* " + rat_to_string(got) + " vs c e* beta " + rat_to_string(target));
  } else {
    add("forest cost counts specialists plus half the co-specialists", 2,
        "graph has a cycle");
    add("forest minimum cost sits at the smallest maximal independent set", 2,
        "graph has a cycle");
  }
  if (forest && !isolated && is_well_covered_forest(g)) {
    Rat half = pr.c * pr.e_star * rat(n, 2);
    int badc = 0;
    for (const EffortProfile& p : points)
      if (cost(pr.c, p) != half) ++badc;
    add("well-covered forest: every equilibrium costs c e* n / 2",
        badc ? 1 : 0,
        badc ? std::to_string(badc) + " points off the constant"
             : rat_to_string(half) + " at " + pts);
  } else {
    add("well-covered forest: every equilibrium costs c e* n / 2", 2,
        "pendant edges do not form a perfect matching on a forest");
  }
  {
    LinearOptimum ew = max_weighted_effort(es, w);
    WeightedIndependence wi = weighted_independence(g, w);
    bool ok = ew.value == pr.e_star * wi.weight;
    add("weighted effort maximum is specialized at the best independent set",
        ok ? 0 : 1,
        "E_w* " + rat_to_string(ew.value) + " vs e* alpha_w " +
            rat_to_string(pr.e_star * wi.weight));
  }
  {
    std::optional<int> d = regular_degree(g);
    if (!d) {
      add("regular graph: uniform split is the cheapest equilibrium", 2,
          "graph is not regular");
    } else {
      Rat target = pr.c * pr.e_star * rat(n, *d + 1);
      Rat got = min_cost(es, pr.c).value;
      RatVec uni(n, pr.e_star / (*d + 1));
      bool uok = check_equilibrium(g, {uni, pr.e_star}).ok;
      add("regular graph: uniform split is the cheapest equilibrium",
          (got == target && uok) ? 0 : 1,
          "C* " + rat_to_string(got) + " vs c e* n/(d+1) " +
              rat_to_string(target));
    }
  }
  if (!isolated) {
    int badb = 0;
    for (const EffortProfile& p : points) {
      WelfareBounds bb = welfare_bounds(bf, g, p);
      double wv = welfare(bf, g, p);
      double s = 1e-7 * std::max(1.0, std::fabs(wv));
      if (wv < bb.lower - s || wv > bb.upper + s) ++badb;
    }
    add("welfare sandwich holds at every point", badb ? 1 : 0,
        badb ? std::to_string(badb) + " of " + pts + " escaped"
             : pts + ", k " + std::to_string(pr.ks[0]));
    WelfareOptimum wm = max_welfare(es, g, bf);
    SpecializedExtrema sx =
        specialized_extrema(g, pr.e_star, bf, w, pr.c);
    double s = 1e-7 * std::max(1.0, std::fabs(sx.max_welfare));
    add("welfare maximum dominates the specialized maximum",
        wm.value >= sx.max_welfare - s ? 0 : 1,
        "W* " + std::to_string(wm.value) + " vs specialized " +
            std::to_string(sx.max_welfare));
  } else {
    add("welfare sandwich holds at every point", 2,
        "isolated vertices present");
    add("welfare maximum dominates the specialized maximum", 2,
        "isolated vertices present");
  }

  bool any_fail = false;
  std::ostringstream txt;
  for (const VRow& r : rows) {
    const char* tag = r.st == 0 ? "[pass]" : r.st == 1 ? "[FAIL]" : "[ n/a]";
    if (r.st == 1) any_fail = true;
    txt << tag << " " << r.name << "\n        " << r.detail << "\n";
  }
  txt << (any_fail ? "structure checks FAILED\n" : "structure checks hold\n");
  std::cout << txt.str();
  if (!out.empty()) {
    Json j;
    j["graph"] = graph_to_json(g);
    Json arr = Json::array();
    for (const VRow& r : rows) {
      Json row;
      row["name"] = r.name;
      row["status"] =
          r.st == 0 ? "pass" : r.st == 1 ? "fail" : "not_applicable";
      row["detail"] = r.detail;
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    j["all_pass"] = !any_fail;
    write_json(out, j);
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibria of public goods games on networks"};
  app.require_subcommand(1);
  int rc = 0;

  // equilibria
  struct {
    std::string graph, e_star = "1", out;
    int n_max = 16;
  } eq;
  CLI::App* s_eq =
      app.add_subcommand("equilibria", "enumerate all equilibrium pieces");
  s_eq->add_option("--graph", eq.graph, "edge list file")->required();
  s_eq->add_option("--e-star", eq.e_star, "effort level, rational")
      ->capture_default_str();
  s_eq->add_option("--n-max", eq.n_max, "vertex count guard")
      ->capture_default_str();
  s_eq->add_option("--out", eq.out, "write JSON here (default stdout)");
  s_eq->callback([&] {
    Graph g = load_graph(eq.graph, eq.n_max);
    rc = cmd_equilibria(g, parse_positive(eq.e_star, "--e-star"), eq.n_max,
                        eq.out);
  });

  // analyze
  struct {
    std::string graph, weights = "ones", out;
    int n_max = 16;
    ParamOpts par;
  } an;
  CLI::App* s_an = app.add_subcommand(
      "analyze", "extremal welfare, effort and cost with witnesses");
  s_an->add_option("--graph", an.graph, "edge list file")->required();
  s_an->add_option("--e-star", an.par.e_star, "effort level, rational")
      ->capture_default_str();
  s_an->add_option("--cost", an.par.cost, "marginal cost, rational")
      ->capture_default_str();
  s_an->add_option("--b0", an.par.b0, "benefit at e*, rational")
      ->capture_default_str();
  CLI::Option* an_sig;
  CLI::Option* an_sweep;
  {
    CLI::Option_group* grp = s_an->add_option_group(
        "curvature", "exactly one of --k, --sigma-b, --sigma-sweep");
    grp->add_option("--k", an.par.k, "curvature parameter");
    an_sig = grp->add_option("--sigma-b", an.par.sigma_b,
                             "target concavity index in (0,1)");
    an_sweep = grp->add_option("--sigma-sweep", an.par.sweep,
                               "comma separated concavity indices")
                   ->delimiter(',');
    grp->require_option(1);
  }
  s_an->add_option("--weights", an.weights,
                   "ones, degrees, or a JSON weight file")
      ->capture_default_str();
  s_an->add_option("--n-max", an.n_max, "vertex count guard")
      ->capture_default_str();
  s_an->add_option("--out", an.out, "write JSON here (default stdout)");
  s_an->callback([&] {
    Graph g = load_graph(an.graph, an.n_max);
    ResolvedParams pr = resolve_params(an.par, g.n(), an_sig->count() > 0,
                                       an_sweep->count() > 0);
    rc = cmd_analyze(g, pr, an.weights, an.n_max, an.out);
  });

  // verify
  struct {
    std::vector<int> criteria;
    std::string graph, weights = "ones", out;
    int n_max = 16;
    ParamOpts par;
  } vf;
  CLI::App* s_vf = app.add_subcommand(
      "verify", "run the seeded theorem battery, or check one graph");
  s_vf->add_option("--criteria", vf.criteria,
                   "comma separated criterion ids (default: all)")
      ->delimiter(',');
  CLI::Option* vf_graph =
      s_vf->add_option("--graph", vf.graph, "check this graph instead");
  s_vf->add_option("--e-star", vf.par.e_star, "effort level, rational")
      ->capture_default_str();
  s_vf->add_option("--cost", vf.par.cost, "marginal cost, rational")
      ->capture_default_str();
  s_vf->add_option("--b0", vf.par.b0, "benefit at e*, rational")
      ->capture_default_str();
  CLI::Option* vf_sig;
  {
    CLI::Option_group* grp = s_vf->add_option_group(
        "curvature", "at most one of --k, --sigma-b (default k = 1)");
    grp->add_option("--k", vf.par.k, "curvature parameter");
    vf_sig = grp->add_option("--sigma-b", vf.par.sigma_b,
                             "target concavity index in (0,1)");
    grp->require_option(0, 1);
  }
  s_vf->add_option("--weights", vf.weights,
                   "ones, degrees, or a JSON weight file")
      ->capture_default_str();
  s_vf->add_option("--n-max", vf.n_max, "vertex count guard")
      ->capture_default_str();
  s_vf->add_option("--out", vf.out, "also write a JSON matrix here");
  s_vf->callback([&] {
    if (vf_graph->count() > 0) {
      if (!vf.criteria.empty())
        throw std::invalid_argument(
            "--criteria applies to the battery, not to --graph mode");
      Graph g = load_graph(vf.graph, vf.n_max);
      ResolvedParams pr =
          resolve_params(vf.par, g.n(), vf_sig->count() > 0, false);
      rc = cmd_verify_graph(g, pr, vf.weights, vf.n_max, vf.out);
    } else {
      rc = cmd_verify_battery(vf.criteria, vf.out);
    }
  });

  // gen
  struct {
    std::string kind, out;
    int n = 0, pairs = 0;
    double p = 0.5;
    uint64_t seed = 0;
  } gn;
  CLI::App* s_gn =
      app.add_subcommand("gen", "generate a graph instance (seeded)");
  s_gn->add_option("--kind", gn.kind, "instance family")
      ->required()
      ->check(CLI::IsMember({"gnp", "tree", "forest", "regular-cycle",
                             "well-covered-forest"}));
  s_gn->add_option("--n", gn.n, "vertex count");
  s_gn->add_option("--pairs", gn.pairs,
                   "guardian count for well-covered-forest");
  s_gn->add_option("--p", gn.p, "edge / attachment probability")
      ->capture_default_str();
  s_gn->add_option("--seed", gn.seed, "generator seed")->required();
  s_gn->add_option("--out", gn.out, "write edge list here (default stdout)");
  s_gn->callback(
      [&] { rc = cmd_gen(gn.kind, gn.n, gn.pairs, gn.p, gn.seed, gn.out); });

  // export-dot
  struct {
    std::string graph, e_star = "1", profile, out;
    int n_max = 16, piece = 0;
  } ed;
  CLI::App* s_ed = app.add_subcommand(
      "export-dot", "render one equilibrium with role annotations");
  s_ed->add_option("--graph", ed.graph, "edge list file")->required();
  s_ed->add_option("--e-star", ed.e_star, "effort level, rational")
      ->capture_default_str();
  s_ed->add_option("--n-max", ed.n_max, "vertex count guard")
      ->capture_default_str();
  CLI::Option* ed_piece = s_ed->add_option(
      "--piece", ed.piece, "piece index, rendered at its barycenter");
  CLI::Option* ed_prof = s_ed->add_option(
      "--profile", ed.profile, "JSON file with one rational effort per vertex");
  ed_piece->excludes(ed_prof);
  ed_prof->excludes(ed_piece);
  s_ed->add_option("--out", ed.out, "write DOT here (default stdout)");
  s_ed->callback([&] {
    Graph g = load_graph(ed.graph, ed.n_max);
    rc = cmd_export_dot(g, parse_positive(ed.e_star, "--e-star"), ed.n_max,
                        ed.piece, ed.profile, ed.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
