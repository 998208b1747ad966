#include <doctest.h>

#include "dtc/intersection.hpp"
#include "dtc/surface.hpp"

using namespace dtc;

namespace {
CoordinateDatum chain2() {
  auto d = generate_standard_datum(2, DatumStyle::Chain);
  REQUIRE(d.ok());
  return d.value();
}
}  // namespace

TEST_CASE("reduced dual count on pinned inputs") {
  // The dual curve itself: no crossings once the wrapping arc flips sides.
  CHECK(dual_reduced(2, -1, {0, 0, 0, 0}).value() == 0);
  // A unit twist meets the dual curve twice.
  CHECK(dual_reduced(0, 1, {0, 0, 0, 0}).value() == 2);
  CHECK(dual_reduced(3, 1, {1, 1, 0, 2}).value() == 4);

  auto bad = dual_reduced(1, 0, {1, 1, 1, 1});
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().code == Err::PreconditionViolated);
}

TEST_CASE("general dual count, both strategies") {
  // Reduced inputs: the additive part vanishes.
  CHECK(dual_two_pants(3, 1, {1, 1, 0, 2}, Strategy::ArcCount).value() == 4);
  CHECK(dual_two_pants(3, 1, {1, 1, 0, 2}, Strategy::Literal).value() == 4);
  // One neighbor-to-neighbor arc plus a residual crossing.
  CHECK(dual_two_pants(2, 0, {2, 0, 0, 2}, Strategy::ArcCount).value() == 2);
  CHECK(dual_two_pants(2, 0, {2, 0, 0, 2}, Strategy::Literal).value() == 2);
  // Copies of the curve itself.
  CHECK(dual_two_pants(0, 3, {0, 0, 0, 0}, Strategy::ArcCount).value() == 6);

  // Dominant neighbor: the literal residuals go negative and are reported.
  auto lit = dual_two_pants(1, 0, {4, 1, 0, 1}, Strategy::Literal);
  REQUIRE_FALSE(lit.ok());
  CHECK(lit.error().code == Err::NegativeReduced);
  CHECK(dual_two_pants(1, 0, {4, 1, 0, 1}, Strategy::ArcCount).ok());

  // The strategies agree whenever the literal one is defined.
  for (Int n = 0; n <= 6; ++n) {
    for (Int n1 = 0; n1 <= 4; ++n1)
      for (Int n2 = 0; n2 <= 4; ++n2)
        for (Int n3 = 0; n3 <= 4; ++n3)
          for (Int n4 = 0; n4 <= 4; ++n4) {
            if ((n + n1 + n4) % 2 || (n + n2 + n3) % 2) continue;
            for (Int t = -3; t <= 3; ++t) {
              auto a = dual_two_pants(n, t, {n1, n2, n3, n4}, Strategy::ArcCount);
              auto l = dual_two_pants(n, t, {n1, n2, n3, n4}, Strategy::Literal);
              REQUIRE(a.ok());
              if (l.ok()) CHECK(a.value() == l.value());
            }
          }
  }
}

TEST_CASE("folded dual count") {
  CHECK(dual_one_pants(0, 5, 0).value() == 5);
  CHECK(dual_one_pants(1, 2, 0).value() == 2);
  CHECK(dual_one_pants(1, 0, 4).value() == 1);
  auto bad = dual_one_pants(1, 0, 3);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.error().code == Err::PreconditionViolated);
}

TEST_CASE("dual counts are convex in the twist with bounded slopes") {
  for (Int n = 0; n <= 5; ++n) {
    for (Int n1 = 0; n1 <= 3; ++n1)
      for (Int n2 = 0; n2 <= 3; ++n2)
        for (Int n3 = 0; n3 <= 3; ++n3)
          for (Int n4 = 0; n4 <= 3; ++n4) {
            if ((n + n1 + n4) % 2 || (n + n2 + n3) % 2) continue;
            DualNeighbors b{n1, n2, n3, n4};
            std::vector<Int> vals;
            for (Int t = -8; t <= 8; ++t) {
              vals.push_back(dual_two_pants(n, t, b, Strategy::ArcCount).value());
            }
            for (size_t i = 0; i + 1 < vals.size(); ++i) {
              Int slope = vals[i + 1] - vals[i];
              CHECK(slope >= -2);
              CHECK(slope <= 2);
              CHECK(slope % 2 == 0);
              if (i + 2 < vals.size()) CHECK(vals[i + 2] - vals[i + 1] >= slope);
            }
          }
  }
}

TEST_CASE("twisted dual count is the plain one at shifted twist") {
  auto d = chain2();
  for (Int n0 = 0; n0 <= 3; ++n0)
    for (Int n1 = 0; n1 <= 3; ++n1)
      for (Int n2 = 0; n2 <= 3; ++n2) {
        if ((n0 + n1 + n2) % 2) continue;
        for (Int t0 = -2; t0 <= 2; ++t0)
          for (Int t1 = -2; t1 <= 2; ++t1) {
            DTVector v{{n0, n1, n2}, {t0, t1, 0}};
            if (!validate_dt(d, v).empty()) continue;
            auto w = embed(d, v);
            REQUIRE(w.ok());
            DTVector shifted = v;
            for (int c = 0; c < 3; ++c) shifted.t[c] -= v.n[c];
            auto w2 = embed(d, shifted);
            REQUIRE(w2.ok());
            CHECK(w.value().ndprime == w2.value().nprime);
          }
      }
}

TEST_CASE("embedding the empty and elementary multicurves") {
  auto d = chain2();
  auto zero = embed(d, {{0, 0, 0}, {0, 0, 0}});
  REQUIRE(zero.ok());
  CHECK(zero.value().sum() == 0);

  // One copy of a pants curve: meets its own dual curves twice each and
  // nothing else.
  auto one = embed(d, {{0, 0, 0}, {1, 0, 0}});
  REQUIRE(one.ok());
  CHECK(one.value().nprime[0] == 2);
  CHECK(one.value().ndprime[0] == 2);
  CHECK(one.value().nprime[1] == 0);
  CHECK(one.value().nprime[2] == 0);
  CHECK(one.value().sum() == 4);
}

TEST_CASE("invert recovers every valid vector in a small box") {
  auto d = chain2();
  int checked = 0;
  for (Int n0 = 0; n0 <= 3; ++n0)
    for (Int n1 = 0; n1 <= 3; ++n1)
      for (Int n2 = 0; n2 <= 3; ++n2) {
        if ((n0 + n1 + n2) % 2) continue;
        for (Int t0 = -2; t0 <= 2; ++t0)
          for (Int t1 = -2; t1 <= 2; ++t1)
            for (Int t2 = -2; t2 <= 2; ++t2) {
              DTVector v{{n0, n1, n2}, {t0, t1, t2}};
              if (!validate_dt(d, v).empty()) continue;
              auto w = embed(d, v);
              REQUIRE(w.ok());
              auto back = invert(d, w.value());
              REQUIRE(back.ok());
              CHECK(back.value() == v);
              ++checked;
            }
      }
  CHECK(checked > 1000);
}

TEST_CASE("vectors outside the image are rejected") {
  auto d = chain2();
  // n = 0 forces the two dual counts to agree.
  IntersectionVector w;
  w.n = {0, 0, 0};
  w.nprime = {1, 0, 0};
  w.ndprime = {0, 0, 0};
  CHECK_FALSE(membership(d, w));

  // Every image point passes.
  auto img = embed(d, {{2, 1, 1}, {1, 0, -1}});
  REQUIRE(img.ok());
  CHECK(membership(d, img.value()));
}

TEST_CASE("real embedding is positively homogeneous") {
  auto d = chain2();
  RealDTVector v{{Rat(3, 2), Rat(1), Rat(0)}, {Rat(-5, 3), Rat(1, 2), Rat(2)}};
  auto w = embed_real(d, v);
  Rat lambda(7, 4);
  RealDTVector sv = v;
  for (int c = 0; c < 3; ++c) {
    sv.n[c] = sv.n[c] * lambda;
    sv.t[c] = sv.t[c] * lambda;
  }
  auto sw = embed_real(d, sv);
  for (int c = 0; c < 3; ++c) {
    CHECK(sw.nprime[c] == lambda * w.nprime[c]);
    CHECK(sw.ndprime[c] == lambda * w.ndprime[c]);
  }
}

TEST_CASE("integer embedding scales under multiples") {
  auto d = chain2();
  DTVector v{{2, 1, 1}, {-1, 2, 0}};
  auto w = embed(d, v);
  REQUIRE(w.ok());
  for (Int k : {0, 2, 5}) {
    DTVector kv{{k * 2, k * 1, k * 1}, {k * -1, k * 2, k * 0}};
    auto kw = embed(d, kv);
    REQUIRE(kw.ok());
    for (int c = 0; c < 3; ++c) {
      CHECK(kw.value().nprime[c] == k * w.value().nprime[c]);
      CHECK(kw.value().ndprime[c] == k * w.value().ndprime[c]);
    }
  }
}
