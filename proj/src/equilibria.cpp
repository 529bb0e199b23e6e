#include "pgg/equilibria.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "pgg/indep_sets.hpp"

namespace pgg {

RatVec neighborhood_efforts(const Graph& g, const RatVec& x) {
  if (static_cast<int>(x.size()) != g.n())
    throw std::invalid_argument("profile size does not match graph");
  RatVec scn(x);
  for (auto [u, v] : g.edges()) {
    scn[u] += x[v];
    scn[v] += x[u];
  }
  return scn;
}

EquilibriumCheck check_equilibrium(const Graph& g, const EffortProfile& p) {
  if (p.e_star <= 0) throw std::invalid_argument("e_star must be positive");
  RatVec scn = neighborhood_efforts(g, p.x);
  EquilibriumCheck out;
  for (int i = 0; i < g.n(); ++i) {
    if (p.x[i] < 0)
      out.violations.push_back({i, EquilibriumViolation::negative_effort});
    if (scn[i] < p.e_star)
      out.violations.push_back(
          {i, EquilibriumViolation::coverage_below_minimum});
    if (p.x[i] > 0 && scn[i] != p.e_star)
      out.violations.push_back({i, EquilibriumViolation::supporter_not_tight});
  }
  out.ok = out.violations.empty();
  return out;
}

RatVec EquilibriumPiece::barycenter() const {
  if (vertices.empty()) throw std::logic_error("empty piece");
  RatVec b(vertices[0].size(), Rat(0));
  for (const RatVec& v : vertices)
    for (size_t j = 0; j < b.size(); ++j) b[j] += v[j];
  Rat m(static_cast<long>(vertices.size()));
  for (Rat& q : b) q /= m;
  return b;
}

bool EquilibriumPiece::contains(const Graph& g, const Rat& e_star,
                                const RatVec& x) const {
  if (static_cast<int>(x.size()) != g.n()) return false;
  RatVec scn = neighborhood_efforts(g, x);
  for (int i = 0; i < g.n(); ++i) {
    if (support.contains(i)) {
      if (x[i] < 0 || scn[i] != e_star) return false;
    } else {
      if (x[i] != 0 || scn[i] < e_star) return false;
    }
  }
  return true;
}

EquilibriumSet enumerate_pieces(const Graph& g, const Rat& e_star, int max_n) {
  if (e_star <= 0) throw std::invalid_argument("e_star must be positive");
  if (g.n() > max_n)
    throw std::invalid_argument("graph exceeds enumeration bound");
  int n = g.n();
  EquilibriumSet es;
  es.n = n;
  es.e_star = e_star;

  std::vector<uint64_t> nb(n);
  for (int v = 0; v < n; ++v) nb[v] = g.neighbor_mask(v);

  std::vector<EquilibriumPiece> raw;
  uint64_t full = g.all_mask();
  for (uint64_t mask = 0;; ++mask) {
    bool dominating = true;
    for (int v = 0; v < n && dominating; ++v)
      if (!((mask >> v) & 1u) && !(nb[v] & mask)) dominating = false;
    if (dominating) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.push_back(v);
      int k = static_cast<int>(s.size());
      // tight system over the support: closed neighborhood efforts hit e*
      RatMat M(k, RatVec(k, Rat(0)));
      RatVec rhs(k, e_star);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (a == b || g.has_edge(s[a], s[b])) M[a][b] = 1;
      AffineSolution sol = solve_affine(M, rhs);
      if (sol.consistent) {
        EquilibriumPiece piece;
        piece.support = NodeSet::from_mask(mask, n);
        piece.base.assign(n, Rat(0));
        for (int a = 0; a < k; ++a) piece.base[s[a]] = sol.base[a];
        for (const RatVec& d : sol.directions) {
          RatVec dx(n, Rat(0));
          for (int a = 0; a < k; ++a) dx[s[a]] = d[a];
          piece.directions.push_back(std::move(dx));
        }
        int t_dim = static_cast<int>(piece.directions.size());
        // inequality rows over the direction coefficients:
        //   support coordinates stay nonnegative
        for (int a = 0; a < k; ++a) {
          IneqRow row;
          row.c0 = piece.base[s[a]];
          for (int l = 0; l < t_dim; ++l)
            row.a.push_back(piece.directions[l][s[a]]);
          piece.constraints.push_back(std::move(row));
        }
        //   non-support agents keep neighborhood effort at least e*
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1u) continue;
          IneqRow row;
          Rat c = -e_star;
          for (int a = 0; a < k; ++a)
            if (g.has_edge(v, s[a])) c += piece.base[s[a]];
          row.c0 = c;
          for (int l = 0; l < t_dim; ++l) {
            Rat coef(0);
            for (int a = 0; a < k; ++a)
              if (g.has_edge(v, s[a])) coef += piece.directions[l][s[a]];
            row.a.push_back(coef);
          }
          piece.constraints.push_back(std::move(row));
        }
        std::vector<RatVec> tverts =
            polytope_vertices(piece.constraints, t_dim);
        if (!tverts.empty()) {
          for (const RatVec& t : tverts) {
            RatVec x = piece.base;
            for (int l = 0; l < t_dim; ++l)
              for (int j = 0; j < n; ++j) x[j] += t[l] * piece.directions[l][j];
            piece.vertices.push_back(std::move(x));
          }
          std::sort(piece.vertices.begin(), piece.vertices.end(),
                    vec_lex_less);
          piece.vertices.erase(std::unique(piece.vertices.begin(),
                                           piece.vertices.end(), vec_eq),
                               piece.vertices.end());
          piece.dim = affine_rank(piece.vertices);
          raw.push_back(std::move(piece));
        }
      }
    }
    if (mask == full) break;
  }

  // merge pieces that describe the same point set; the smallest support
  // (then lexicographically smallest) is the canonical name
  std::map<std::vector<RatVec>, size_t> canon;
  std::vector<EquilibriumPiece> merged;
  for (EquilibriumPiece& piece : raw) {
    auto it = canon.find(piece.vertices);
    if (it == canon.end()) {
      canon[piece.vertices] = merged.size();
      merged.push_back(std::move(piece));
    } else {
      EquilibriumPiece& kept = merged[it->second];
      const std::vector<int>& a = piece.support.members;
      const std::vector<int>& b = kept.support.members;
      if (a.size() < b.size() || (a.size() == b.size() && a < b))
        kept = std::move(piece);
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const EquilibriumPiece& a, const EquilibriumPiece& b) {
              return a.support.members < b.support.members;
            });
  es.pieces = std::move(merged);
  return es;
}

EffortProfile specialized_from_mis(const Graph& g, const Rat& e_star,
                                   const NodeSet& s) {
  if (e_star <= 0) throw std::invalid_argument("e_star must be positive");
  if (!is_independent(g, s.mask) || !is_dominating(g, s.mask))
    throw std::invalid_argument("set is not a maximal independent set");
  EffortProfile p;
  p.e_star = e_star;
  p.x.assign(g.n(), Rat(0));
  for (int v : s.members) p.x[v] = e_star;
  return p;
}

std::vector<EffortProfile> enumerate_specialized(const Graph& g,
                                                 const Rat& e_star) {
  std::vector<EffortProfile> out;
  for (const NodeSet& s : enumerate_mis(g))
    out.push_back(specialized_from_mis(g, e_star, s));
  return out;
}

std::optional<EquilibriumPiece> distributed_piece(const EquilibriumSet& es) {
  for (const EquilibriumPiece& piece : es.pieces) {
    if (piece.support.size() != es.n) continue;
    RatVec b = piece.barycenter();
    bool positive = true;
    for (const Rat& q : b)
      if (q <= 0) positive = false;
    if (positive) return piece;
    return std::nullopt;  // some coordinate vanishes on the whole piece
  }
  return std::nullopt;
}

std::vector<EffortProfile> sample_piece(const EquilibriumPiece& piece,
                                        const Rat& e_star, int count,
                                        uint64_t seed) {
  if (piece.vertices.empty()) throw std::invalid_argument("empty piece");
  if (count < 0) throw std::invalid_argument("negative sample count");
  std::mt19937_64 rng(seed);
  std::vector<EffortProfile> out;
  size_t m = piece.vertices.size();
  for (int i = 0; i < count; ++i) {
    RatVec w(m);
    Rat total(0);
    for (size_t j = 0; j < m; ++j) {
      w[j] = Rat(static_cast<long>(1 + rng() % 997));
      total += w[j];
    }
    RatVec x(piece.vertices[0].size(), Rat(0));
    for (size_t j = 0; j < m; ++j)
      for (size_t l = 0; l < x.size(); ++l)
        x[l] += w[j] * piece.vertices[j][l];
    for (Rat& q : x) q /= total;
    out.push_back({std::move(x), e_star});
  }
  return out;
}

}  // namespace pgg
