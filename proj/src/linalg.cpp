#include "dtc/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dtc::lin {

Rat dot(const Vec& a, const Vec& b) {
  DTC_CHECK(a.size() == b.size(), "dot dimension mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec scale(const Vec& a, const Rat& s) {
  Vec r = a;
  for (auto& v : r) v *= s;
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec matvec(const Mat& m, const Vec& x) {
  Vec r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, x));
  return r;
}

Vec primitive(const Vec& v) {
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& r : v) {
    num_gcd = boost::multiprecision::gcd(num_gcd, r.num() < 0 ? BigInt(-r.num()) : r.num());
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, r.den()) * r.den();
  }
  if (num_gcd == 0) return v;
  Rat s{den_lcm, num_gcd};
  return scale(v, s);
}

int rref(Mat& m, std::vector<int>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat inv = Rat(1) / m[rank][c];
    for (auto& v : m[rank]) v *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Rat f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

Mat nullspace(const Mat& m, int cols) {
  Mat a = m;
  for (auto& row : a) row.resize(cols, Rat(0));
  std::vector<int> piv;
  int rank = rref(a, &piv);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = Rat(1);
    for (int r = 0; r < rank; ++r) v[piv[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_unique(Mat a, Vec b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<int> piv;
  int rank = rref(a, &piv);
  const int cols = n == 0 ? 0 : static_cast<int>(a[0].size()) - 1;
  if (rank != cols) return std::nullopt;
  for (int r = 0; r < n; ++r) {
    bool zero_row = true;
    for (int c = 0; c < cols; ++c) zero_row &= a[r][c].is_zero();
    if (zero_row && !a[r][cols].is_zero()) return std::nullopt;
  }
  Vec x(cols, Rat(0));
  for (int r = 0; r < rank; ++r) x[piv[r]] = a[r][cols];
  return x;
}

namespace {

// min c.v subject to M v = rhs, v >= 0, rhs >= 0. Bland's rule, exact.
struct EqSimplex {
  Mat t;                   // tableau rows: [M | rhs]
  Vec cost;                // reduced cost row, [c | -objective]
  std::vector<int> basis;  // basic variable per row

  void pivot(int row, int col) {
    Rat inv = Rat(1) / t[row][col];
    for (auto& v : t[row]) v *= inv;
    for (size_t r = 0; r < t.size(); ++r) {
      if (static_cast<int>(r) == row || t[r][col].is_zero()) continue;
      Rat f = t[r][col];
      for (size_t k = 0; k < t[r].size(); ++k) t[r][k] -= f * t[row][k];
    }
    if (!cost[col].is_zero()) {
      Rat f = cost[col];
      for (size_t k = 0; k < cost.size(); ++k) cost[k] -= f * t[row][k];
    }
    basis[row] = col;
  }

  // Returns false when unbounded.
  bool run() {
    const int ncols = static_cast<int>(cost.size()) - 1;
    while (true) {
      int col = -1;
      for (int c = 0; c < ncols; ++c) {
        if (cost[c].sign() < 0) {
          col = c;
          break;
        }
      }
      if (col < 0) return true;
      int row = -1;
      for (size_t r = 0; r < t.size(); ++r) {
        if (t[r][col].sign() <= 0) continue;
        if (row < 0) {
          row = static_cast<int>(r);
          continue;
        }
        Rat cur = t[r].back() / t[r][col];
        Rat best = t[row].back() / t[row][col];
        if (cur < best || (cur == best && basis[r] < basis[row])) row = static_cast<int>(r);
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult lp_max(const Vec& c, const Mat& A, const Vec& b) {
  // Variables: x = xp - xm (d each), slack s (m): A xp - A xm - s = b.
  const int m = static_cast<int>(A.size());
  const int d = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(A[0].size());
  const int nv = 2 * d + m;

  EqSimplex sx;
  sx.t.assign(m, Vec(nv + m + 1, Rat(0)));  // + artificials
  for (int r = 0; r < m; ++r) {
    int sgn = b[r].sign() < 0 ? -1 : 1;
    for (int j = 0; j < d; ++j) {
      sx.t[r][j] = Rat(sgn) * A[r][j];
      sx.t[r][d + j] = Rat(-sgn) * A[r][j];
    }
    sx.t[r][2 * d + r] = Rat(-sgn);
    sx.t[r][nv + r] = Rat(1);
    sx.t[r][nv + m] = Rat(sgn) * b[r];
  }
  // Phase 1: minimize artificial sum.
  sx.cost.assign(nv + m + 1, Rat(0));
  for (int r = 0; r < m; ++r) sx.cost[nv + r] = Rat(1);
  sx.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    sx.basis[r] = nv + r;
    for (size_t k = 0; k < sx.cost.size(); ++k) sx.cost[k] -= sx.t[r][k];
  }
  bool ok = sx.run();
  DTC_CHECK(ok, "phase 1 cannot be unbounded");
  if ((-sx.cost.back()).sign() != 0) return {LpStatus::Infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (sx.basis[r] < nv) continue;
    int col = -1;
    for (int cpos = 0; cpos < nv; ++cpos) {
      if (!sx.t[r][cpos].is_zero()) {
        col = cpos;
        break;
      }
    }
    if (col >= 0) sx.pivot(r, col);
  }

  // Phase 2: maximize c.x = minimize -c.x; forbid artificials.
  sx.cost.assign(nv + m + 1, Rat(0));
  for (int j = 0; j < d; ++j) {
    sx.cost[j] = -c[j];
    sx.cost[d + j] = c[j];
  }
  for (int r = 0; r < m; ++r) {
    if (sx.basis[r] >= nv) continue;  // degenerate zero row otherwise
    if (sx.cost[sx.basis[r]].is_zero()) continue;
    Rat f = sx.cost[sx.basis[r]];
    for (size_t k = 0; k < sx.cost.size(); ++k) sx.cost[k] -= f * sx.t[r][k];
  }
  // Block artificial columns from re-entering.
  for (int r = 0; r < m; ++r) sx.cost[nv + r] = Rat(1);
  if (!sx.run()) return {LpStatus::Unbounded, Rat(0), {}};

  Vec x(d, Rat(0));
  for (int r = 0; r < m; ++r) {
    if (sx.basis[r] < d) x[sx.basis[r]] += sx.t[r].back();
    else if (sx.basis[r] < 2 * d) x[sx.basis[r] - d] -= sx.t[r].back();
  }
  return {LpStatus::Optimal, dot(c, x), x};
}

std::optional<Vec> feasible_point(const Mat& A, const Vec& b) {
  int d = A.empty() ? 0 : static_cast<int>(A[0].size());
  auto r = lp_max(Vec(d, Rat(0)), A, b);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.point;
}

std::optional<Vec> cone_interior_point(const Mat& A, const Vec* hint) {
  Mat rows;
  std::set<std::string> seen;
  for (const auto& r : A) {
    Vec p = primitive(r);
    bool zero = true;
    for (const auto& v : p) zero &= v.is_zero();
    if (zero) continue;
    std::string key;
    for (const auto& v : p) {
      key += v.str();
      key += ',';
    }
    if (seen.insert(key).second) rows.push_back(std::move(p));
  }
  if (rows.empty()) return Vec(A.empty() ? 0 : A[0].size(), Rat(0));
  if (hint && !hint->empty()) {
    bool strict = true;
    for (const auto& r : rows) {
      if (dot(r, *hint).sign() <= 0) {
        strict = false;
        break;
      }
    }
    if (strict) return *hint;
  }
  return feasible_point(rows, Vec(rows.size(), Rat(1)));
}

bool cone_full_dim(const Mat& A) { return cone_interior_point(A, nullptr).has_value(); }

bool implied_by(const Vec& g, const Rat& g0, const Mat& A, const Vec& b) {
  auto r = lp_max(scale(g, Rat(-1)), A, b);
  if (r.status == LpStatus::Infeasible) return true;
  DTC_CHECK(r.status == LpStatus::Optimal, "implied_by needs a bounded direction");
  return -r.value >= g0;
}

int affine_dim(const Mat& points) {
  if (points.empty()) return -1;
  Mat diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return diffs.empty() ? 0 : rref(diffs);
}

namespace {

struct AffineChart {
  Vec origin;   // a point of the affine hull
  Mat basis;    // columns spanning the hull's direction space
  Mat ineq_a;   // inequalities pulled back to chart coordinates
  Vec ineq_b;
  bool empty = false;
};

// Restrict {A y >= b, E y = e} to the affine hull of its solution set and
// express everything in chart coordinates of dimension = dim of the hull.
AffineChart make_chart(Mat A, Vec b, Mat E, Vec e) {
  AffineChart ch;
  // Feasibility plus implied equalities.
  Mat all = A;
  Vec allb = b;
  for (size_t i = 0; i < E.size(); ++i) {
    all.push_back(E[i]);
    allb.push_back(e[i]);
    all.push_back(scale(E[i], Rat(-1)));
    allb.push_back(-e[i]);
  }
  auto fp = feasible_point(all, allb);
  if (!fp) {
    ch.empty = true;
    return ch;
  }
  // Find inequality rows that are implied equalities.
  for (size_t i = 0; i < A.size(); ++i) {
    auto r = lp_max(A[i], all, allb);
    DTC_CHECK(r.status == LpStatus::Optimal, "polytope must be bounded");
    if (r.value == b[i]) {
      E.push_back(A[i]);
      e.push_back(b[i]);
    }
  }
  // Chart = origin + span(nullspace of E).
  const int d = static_cast<int>(fp->size());
  Mat esys = E;
  ch.origin = *fp;
  ch.basis = nullspace(esys, d);
  // Pull inequalities back: A (origin + B z) >= b.
  for (size_t i = 0; i < A.size(); ++i) {
    Vec row;
    row.reserve(ch.basis.size());
    for (const auto& bc : ch.basis) row.push_back(dot(A[i], bc));
    ch.ineq_a.push_back(std::move(row));
    ch.ineq_b.push_back(b[i] - dot(A[i], ch.origin));
  }
  return ch;
}

Vec chart_to_ambient(const AffineChart& ch, const Vec& z) {
  Vec y = ch.origin;
  for (size_t j = 0; j < ch.basis.size(); ++j) {
    for (size_t k = 0; k < y.size(); ++k) y[k] += z[j] * ch.basis[j][k];
  }
  return y;
}

}  // namespace

Polytope enumerate_vertices(const Mat& A, const Vec& b, const Mat& E, const Vec& e) {
  Polytope out;
  AffineChart ch = make_chart(A, b, E, e);
  if (ch.empty) return out;
  const int k = static_cast<int>(ch.basis.size());
  if (k == 0) {
    out.vertices.push_back(ch.origin);
    out.dim = 0;
    return out;
  }

  // Deduplicate chart inequality rows (keep the tightest bound per direction).
  std::map<std::vector<std::string>, Rat> best;
  for (size_t i = 0; i < ch.ineq_a.size(); ++i) {
    Vec p = primitive(ch.ineq_a[i]);
    bool zero = true;
    for (auto& v : p) zero &= v.is_zero();
    if (zero) continue;
    Rat sf;  // scale factor from original to primitive
    for (size_t j = 0; j < p.size(); ++j) {
      if (!ch.ineq_a[i][j].is_zero()) {
        sf = p[j] / ch.ineq_a[i][j];
        break;
      }
    }
    std::vector<std::string> key;
    key.reserve(p.size());
    for (auto& v : p) key.push_back(v.str());
    Rat bound = ch.ineq_b[i] * sf;
    auto it = best.find(key);
    if (it == best.end() || bound > it->second) best[key] = bound;
  }
  Mat rows;
  Vec rhs;
  for (auto& [key, bound] : best) {
    Vec r;
    r.reserve(key.size());
    for (auto& s : key) r.push_back(Rat::parse(s));
    rows.push_back(std::move(r));
    rhs.push_back(bound);
  }

  const int m = static_cast<int>(rows.size());
  std::set<std::vector<std::string>> seen;
  std::vector<int> idx(k);
  // All k-subsets of rows.
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  auto next_comb = [&]() {
    int i = k - 1;
    while (i >= 0 && comb[i] == m - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (m >= k) {
    do {
      Mat sq;
      Vec sb;
      for (int i : comb) {
        sq.push_back(rows[i]);
        sb.push_back(rhs[i]);
      }
      auto z = solve_unique(sq, sb);
      if (!z) continue;
      bool inside = true;
      for (int i = 0; i < m && inside; ++i) inside = dot(rows[i], *z) >= rhs[i];
      if (!inside) continue;
      std::vector<std::string> key;
      for (auto& v : *z) key.push_back(v.str());
      if (seen.insert(key).second) out.vertices.push_back(chart_to_ambient(ch, *z));
    } while (next_comb());
  }
  out.dim = affine_dim(out.vertices);
  return out;
}

FaceLattice face_lattice(const Mat& A, const Vec& b, const Mat& E, const Vec& e) {
  FaceLattice fl;
  Polytope p = enumerate_vertices(A, b, E, e);
  fl.vertices = p.vertices;
  if (p.vertices.empty()) return fl;
  const int nv = static_cast<int>(p.vertices.size());

  // Vertex sets of the defining inequalities (candidate facets and beyond).
  std::set<std::vector<int>> sets;
  std::vector<int> all(nv);
  for (int i = 0; i < nv; ++i) all[i] = i;
  sets.insert(all);
  for (size_t i = 0; i < A.size(); ++i) {
    std::vector<int> tight;
    for (int v = 0; v < nv; ++v) {
      if (dot(A[i], p.vertices[v]) == b[i]) tight.push_back(v);
    }
    if (!tight.empty()) sets.insert(tight);
  }
  // Close under intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(sets.begin(), sets.end());
    for (size_t i = 0; i < cur.size(); ++i) {
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(cur[i].begin(), cur[i].end(), cur[j].begin(), cur[j].end(),
                              std::back_inserter(inter));
        if (!inter.empty() && sets.insert(inter).second) grew = true;
      }
    }
  }
  for (auto& s : sets) {
    Mat pts;
    for (int v : s) pts.push_back(p.vertices[v]);
    fl.faces.push_back(s);
    fl.face_dim.push_back(affine_dim(pts));
  }
  return fl;
}

}  // namespace dtc::lin
