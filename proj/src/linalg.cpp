#include "pgg/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pgg {

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot column of each
// pivot row (rows get compacted to the top).
std::vector<int> rref(RatMat& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p == -1) continue;
    std::swap(m[r], m[p]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

AffineSolution solve_affine(const RatMat& M, const RatVec& rhs) {
  if (M.size() != rhs.size())
    throw std::invalid_argument("solve_affine: row count mismatch");
  AffineSolution out;
  int rows = static_cast<int>(M.size());
  int cols = rows ? static_cast<int>(M[0].size()) : 0;
  if (rows == 0) {  // no equations
    out.consistent = true;
    out.base.assign(cols, Rat(0));
    return out;
  }
  RatMat aug(rows, RatVec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(M[i].size()) != cols)
      throw std::invalid_argument("solve_affine: ragged matrix");
    for (int j = 0; j < cols; ++j) aug[i][j] = M[i][j];
    aug[i][cols] = rhs[i];
  }
  std::vector<int> pivots = rref(aug);
  // pivot in the rhs column means 0 = 1
  if (!pivots.empty() && pivots.back() == cols) {
    out.consistent = false;
    return out;
  }
  out.consistent = true;
  out.base.assign(cols, Rat(0));
  std::vector<int> pivot_row_of(cols, -1);
  for (size_t r = 0; r < pivots.size(); ++r) {
    pivot_row_of[pivots[r]] = static_cast<int>(r);
    out.base[pivots[r]] = aug[r][cols];
  }
  for (int f = 0; f < cols; ++f) {
    if (pivot_row_of[f] != -1) continue;
    RatVec dir(cols, Rat(0));
    dir[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) dir[pivots[r]] = -aug[r][f];
    out.directions.push_back(std::move(dir));
  }
  return out;
}

namespace {

bool satisfies_all(const std::vector<IneqRow>& rows, const RatVec& t) {
  for (const IneqRow& r : rows)
    if (dot(r.a, t) + r.c0 < 0) return false;
  return true;
}

}  // namespace

std::vector<RatVec> polytope_vertices(std::vector<IneqRow> rows, int dim) {
  // constant rows: either trivially true (drop) or the region is empty
  std::vector<IneqRow> kept;
  for (IneqRow& r : rows) {
    if (static_cast<int>(r.a.size()) != dim)
      throw std::invalid_argument("polytope_vertices: row size mismatch");
    bool zero = true;
    for (const Rat& x : r.a)
      if (x != 0) {
        zero = false;
        break;
      }
    if (zero) {
      if (r.c0 < 0) return {};
      continue;
    }
    // canonical scale: leading coefficient has absolute value 1
    Rat lead;
    for (const Rat& x : r.a)
      if (x != 0) {
        lead = abs(x);
        break;
      }
    for (Rat& x : r.a) x /= lead;
    r.c0 /= lead;
    kept.push_back(std::move(r));
  }
  if (dim == 0) return {RatVec{}};

  // same direction + offset: keep only the tighter offset
  std::map<RatMat, Rat> tightest;  // key wrapped as single-row matrix
  for (IneqRow& r : kept) {
    RatMat key{r.a};
    auto it = tightest.find(key);
    if (it == tightest.end() || r.c0 < it->second) tightest[key] = r.c0;
  }
  kept.clear();
  for (auto& [key, c0] : tightest) kept.push_back({key[0], c0});

  // interval-product fast path
  bool separable = true;
  for (const IneqRow& r : kept) {
    int nz = 0;
    for (const Rat& x : r.a)
      if (x != 0) ++nz;
    if (nz != 1) {
      separable = false;
      break;
    }
  }
  if (separable) {
    if (dim > 20)
      throw std::runtime_error("polytope_vertices: dimension guard tripped");
    std::vector<Rat> lo(dim), hi(dim);
    std::vector<bool> has_lo(dim, false), has_hi(dim, false);
    for (const IneqRow& r : kept) {
      int j = 0;
      while (r.a[j] == 0) ++j;
      Rat bound = -r.c0 / r.a[j];
      if (r.a[j] > 0) {  // t_j >= bound
        if (!has_lo[j] || bound > lo[j]) lo[j] = bound;
        has_lo[j] = true;
      } else {  // t_j <= bound
        if (!has_hi[j] || bound < hi[j]) hi[j] = bound;
        has_hi[j] = true;
      }
    }
    for (int j = 0; j < dim; ++j) {
      if (!has_lo[j] || !has_hi[j])
        throw std::runtime_error("polytope_vertices: unbounded direction");
      if (lo[j] > hi[j]) return {};
    }
    std::vector<RatVec> verts{RatVec{}};
    for (int j = 0; j < dim; ++j) {
      std::vector<RatVec> next;
      for (const RatVec& v : verts) {
        RatVec w = v;
        w.push_back(lo[j]);
        next.push_back(w);
        if (hi[j] != lo[j]) {
          w.back() = hi[j];
          next.push_back(w);
        }
      }
      verts = std::move(next);
    }
    std::sort(verts.begin(), verts.end(), vec_lex_less);
    return verts;
  }

  // general case: every vertex is the unique solution of dim active rows
  int m = static_cast<int>(kept.size());
  if (m < dim) {
    // bounded region needs more facets than dimensions; with fewer rows the
    // region is empty or unbounded, and callers guarantee boundedness
    return {};
  }
  double combos = 1;
  for (int i = 0; i < dim; ++i) combos *= static_cast<double>(m - i) / (i + 1);
  if (combos > 200000)
    throw std::runtime_error("polytope_vertices: basis enumeration too large");

  std::vector<RatVec> verts;
  std::vector<int> idx(dim);
  for (int i = 0; i < dim; ++i) idx[i] = i;
  while (true) {
    RatMat M(dim, RatVec(dim));
    RatVec rhs(dim);
    for (int i = 0; i < dim; ++i) {
      M[i] = kept[idx[i]].a;
      rhs[i] = -kept[idx[i]].c0;
    }
    AffineSolution sol = solve_affine(M, rhs);
    if (sol.consistent && sol.directions.empty() &&
        satisfies_all(kept, sol.base))
      verts.push_back(sol.base);
    // next combination
    int i = dim - 1;
    while (i >= 0 && idx[i] == m - dim + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(verts.begin(), verts.end(), vec_lex_less);
  verts.erase(std::unique(verts.begin(), verts.end(), vec_eq), verts.end());
  return verts;
}

int affine_rank(const std::vector<RatVec>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  RatMat diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    RatVec d(points[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<int>(rref(diffs).size());
}

}  // namespace pgg
