#include <doctest.h>

#include "dtc/linalg.hpp"

using namespace dtc;
using lin::Mat;
using lin::Vec;

namespace {
Vec rv(std::initializer_list<int> xs) {
  Vec v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}
}  // namespace

TEST_CASE("rational arithmetic basics") {
  Rat a(1, 3), b(1, 6);
  CHECK((a + b) == Rat(1, 2));
  CHECK((a - b) == Rat(1, 6));
  CHECK((a * b) == Rat(1, 18));
  CHECK((a / b) == Rat(2));
  CHECK(Rat::parse("-4/6") == Rat(-2, 3));
  CHECK(Rat(-2, 3).str() == "-2/3");
  CHECK(Rat(5, -10).str() == "-1/2");
  CHECK(Rat(7, 3).floor() == 2);
  CHECK(Rat(-7, 3).floor() == -3);
}

TEST_CASE("rref and nullspace") {
  Mat m = {rv({1, 2, 3}), rv({2, 4, 6}), rv({1, 0, 1})};
  CHECK(lin::rref(m) == 2);
  Mat ns = lin::nullspace({rv({1, 1, 0}), rv({0, 1, 1})}, 3);
  REQUIRE(ns.size() == 1);
  CHECK(lin::dot(ns[0], rv({1, 1, 0})) == Rat(0));
  CHECK(lin::dot(ns[0], rv({0, 1, 1})) == Rat(0));
}

TEST_CASE("lp feasibility and optimization") {
  // max x+y st x <= 2, y <= 3, x,y >= 0 (as >=-rows).
  Mat A = {rv({-1, 0}), rv({0, -1}), rv({1, 0}), rv({0, 1})};
  Vec b = {Rat(-2), Rat(-3), Rat(0), Rat(0)};
  auto r = lin::lp_max(rv({1, 1}), A, b);
  REQUIRE(r.status == lin::LpStatus::Optimal);
  CHECK(r.value == Rat(5));

  // Infeasible: x >= 1 and -x >= 0.
  auto bad = lin::feasible_point({rv({1}), rv({-1})}, {Rat(1), Rat(0)});
  CHECK_FALSE(bad.has_value());

  // Unbounded direction.
  auto ub = lin::lp_max(rv({1}), {rv({1})}, {Rat(0)});
  CHECK(ub.status == lin::LpStatus::Unbounded);
}

TEST_CASE("cone dimension test") {
  // Full-dimensional quadrant.
  CHECK(lin::cone_full_dim({rv({1, 0}), rv({0, 1})}));
  // A hyperplane sliver is not.
  CHECK_FALSE(lin::cone_full_dim({rv({1, 0}), rv({-1, 0})}));
  // Zero rows are vacuous.
  CHECK(lin::cone_full_dim({rv({0, 0})}));
}

TEST_CASE("vertex enumeration of a square and a triangle") {
  // Unit square: 0 <= x,y <= 1.
  Mat A = {rv({1, 0}), rv({0, 1}), rv({-1, 0}), rv({0, -1})};
  Vec b = {Rat(0), Rat(0), Rat(-1), Rat(-1)};
  auto p = lin::enumerate_vertices(A, b, {}, {});
  CHECK(p.dim == 2);
  CHECK(p.vertices.size() == 4);

  // Standard 2-simplex in the plane x+y+z=1.
  Mat A3 = {rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})};
  Vec b3 = {Rat(0), Rat(0), Rat(0)};
  auto s = lin::enumerate_vertices(A3, b3, {rv({1, 1, 1})}, {Rat(1)});
  CHECK(s.dim == 2);
  CHECK(s.vertices.size() == 3);
}

TEST_CASE("face lattice of the square") {
  Mat A = {rv({1, 0}), rv({0, 1}), rv({-1, 0}), rv({0, -1})};
  Vec b = {Rat(0), Rat(0), Rat(-1), Rat(-1)};
  auto fl = lin::face_lattice(A, b, {}, {});
  // 4 vertices + 4 edges + the square itself.
  CHECK(fl.faces.size() == 9);
  int by_dim[3] = {0, 0, 0};
  for (size_t i = 0; i < fl.faces.size(); ++i) ++by_dim[fl.face_dim[i]];
  CHECK(by_dim[0] == 4);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 1);
}

TEST_CASE("degenerate and lower-dimensional polytopes") {
  // The segment x+y=1 in the square.
  Mat A = {rv({1, 0}), rv({0, 1}), rv({-1, 0}), rv({0, -1})};
  Vec b = {Rat(0), Rat(0), Rat(-1), Rat(-1)};
  auto p = lin::enumerate_vertices(A, b, {rv({1, 1})}, {Rat(1)});
  CHECK(p.dim == 1);
  CHECK(p.vertices.size() == 2);

  // Empty set.
  auto q = lin::enumerate_vertices(A, b, {rv({1, 1})}, {Rat(5)});
  CHECK(q.dim == -1);
  CHECK(q.vertices.empty());

  // A single point: x >= 1, x <= 1 in 1D.
  auto pt = lin::enumerate_vertices({rv({1}), rv({-1})}, {Rat(1), Rat(-1)}, {}, {});
  CHECK(pt.dim == 0);
  CHECK(pt.vertices.size() == 1);
}

TEST_CASE("implied inequalities") {
  // On the square, x >= -1 is implied, x >= 1/2 is not.
  Mat A = {rv({1, 0}), rv({0, 1}), rv({-1, 0}), rv({0, -1})};
  Vec b = {Rat(0), Rat(0), Rat(-1), Rat(-1)};
  CHECK(lin::implied_by(rv({1, 0}), Rat(-1), A, b));
  CHECK_FALSE(lin::implied_by(rv({1, 0}), Rat(1, 2), A, b));
}
