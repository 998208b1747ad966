#pragma once

#include <optional>
#include <vector>

#include "dtc/numeric.hpp"

// Exact rational linear algebra: everything the cone machinery needs, no
// floating point anywhere.
namespace dtc::lin {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

Rat dot(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& s);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec matvec(const Mat& m, const Vec& x);

// Scale to coprime integer entries with positive leading coefficient kept as
// is (the sign carries meaning for inequalities). Zero vectors stay zero.
Vec primitive(const Vec& v);

// Gauss-Jordan elimination in place; returns the rank and records the pivot
// column of each reduced row.
int rref(Mat& m, std::vector<int>* pivot_cols = nullptr);

// Basis of { x : M x = 0 }.
Mat nullspace(const Mat& m, int cols);

// Unique solution of a full-rank square system, if it exists.
std::optional<Vec> solve_unique(Mat a, Vec b);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  Vec point;
};

// max c.x subject to A x >= b, x free. Exact two-phase simplex with Bland's
// rule.
LpResult lp_max(const Vec& c, const Mat& A, const Vec& b);

// A point with A x >= b, if any.
std::optional<Vec> feasible_point(const Mat& A, const Vec& b);

// Whether the homogeneous cone { A x >= 0 } has nonempty interior, i.e.
// some point satisfies every (nonzero) row strictly.
bool cone_full_dim(const Mat& A);

// Interior point of the homogeneous cone, if any. A caller-provided hint is
// verified exactly first, which skips the LP on most calls of an incremental
// search.
std::optional<Vec> cone_interior_point(const Mat& A, const Vec* hint);

// Is row g >= g0 implied by A x >= b (assumed feasible and bounded in the g
// direction)? True when no feasible point has g.x < g0.
bool implied_by(const Vec& g, const Rat& g0, const Mat& A, const Vec& b);

// Bounded polytope given by A y >= b plus equalities E y = e.
struct Polytope {
  Mat vertices;  // unique, unordered
  int dim = -1;  // affine dimension, -1 when empty
};

Polytope enumerate_vertices(const Mat& A, const Vec& b, const Mat& E, const Vec& e);

struct FaceLattice {
  // Each face as a sorted list of vertex indices into `vertices`, graded by
  // affine dimension; includes the polytope itself, excludes the empty face.
  Mat vertices;
  std::vector<std::vector<int>> faces;
  std::vector<int> face_dim;
};

FaceLattice face_lattice(const Mat& A, const Vec& b, const Mat& E, const Vec& e);

int affine_dim(const Mat& points);

}  // namespace dtc::lin
