#include <doctest.h>

#include "dtc/dt_vector.hpp"
#include "dtc/surface.hpp"

using namespace dtc;

namespace {
CoordinateDatum chain2() {
  auto d = generate_standard_datum(2, DatumStyle::Chain);
  REQUIRE(d.ok());
  return d.value();
}
}  // namespace

TEST_CASE("parity and twist-sign validation") {
  auto d = chain2();
  CHECK(validate_dt(d, {{2, 0, 0}, {0, 0, 0}}).empty());

  auto bad = validate_dt(d, {{1, 0, 0}, {0, 0, 0}});
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().code == Err::ParityViolation);

  auto neg = validate_dt(d, {{0, 0, 0}, {-1, 0, 0}});
  REQUIRE_FALSE(neg.empty());
  CHECK(neg.front().code == Err::NegativeTwistAtZero);
}

TEST_CASE("single-pants twist correction of the worked product example") {
  // One pants of the picture: counts (2,0,0) on (a1,a2,a3) put one wrapping
  // arc around a2 and none around a3, so only the a2 twist shifts, by 1.
  auto wrap = [](Int n_target, Int n_before, Int n_other) {
    return std::max<Int>((n_before - (n_target + n_other)) / 2, 0);
  };
  CHECK(wrap(0, 2, 0) == 1);  // around a2: one U-arc on a1
  CHECK(wrap(0, 0, 2) == 0);  // around a3: nothing
  // Modified-coordinate sums pick the first smoothing: with the single-pants
  // corrections (0,1,0) and (0,0,0) the sum lands on s1, not s2.
  std::vector<Int> sum_t{0 + 0, 1 + 0, 0 + 0};
  CHECK(sum_t == std::vector<Int>{0, 1, 0});   // = corrected twist of s1
  CHECK(sum_t != std::vector<Int>{1, 0, -1});  // = corrected twist of s2
}

TEST_CASE("modified twists of the worked vectors on the full chain datum") {
  auto d = chain2();
  // On the closed surface both pants contribute a wrapping arc: one around
  // each of the other two curves.
  auto m = to_modified(d, {{2, 0, 0}, {0, 0, 0}});
  CHECK(m.tprime == std::vector<Int>{0, 1, 1});
  CHECK(m.n == std::vector<Int>{2, 0, 0});

  // The smoothings of the worked product have no wrapping arcs.
  auto s2 = to_modified(d, {{2, 1, 1}, {1, 0, -1}});
  CHECK(s2.tprime == std::vector<Int>{1, 0, -1});
  auto s1 = to_modified(d, {{2, 1, 1}, {0, 1, 1}});
  CHECK(s1.tprime == std::vector<Int>{0, 1, 1});

  auto mp = to_modified(d, {{0, 1, 1}, {0, 0, 0}});
  CHECK(mp.tprime == std::vector<Int>{0, 0, 0});
}

TEST_CASE("modified transform round-trips") {
  auto d = chain2();
  for (Int n0 = 0; n0 <= 4; ++n0) {
    for (Int n1 = 0; n1 <= 4; ++n1) {
      for (Int n2 = 0; n2 <= 4; ++n2) {
        if ((n0 + n1 + n2) % 2 != 0) continue;
        for (Int t0 = -2; t0 <= 2; ++t0) {
          DTVector v{{n0, n1, n2}, {t0, -1, 2}};
          auto m = to_modified(d, v);
          CHECK(from_modified(d, m) == v);
          CHECK(m.n == v.n);  // only twists move
        }
      }
    }
  }
}

TEST_CASE("triangle-regime vectors keep their twists") {
  auto d = chain2();
  DTVector v{{2, 1, 1}, {1, 0, -1}};
  auto m = to_modified(d, v);
  CHECK(m.tprime == v.t);
}

TEST_CASE("cone convention forces twist signs at n=0") {
  auto d = chain2();
  DTVector v{{0, 2, 2}, {3, 1, -1}};
  std::vector<TwistSign> signs{TwistSign::DoublePrimeGE, TwistSign::PrimeGE,
                               TwistSign::PrimeGE};
  auto w = apply_cone_convention(d, v, signs);
  CHECK(w.t == std::vector<Int>{-3, 1, -1});  // only the n=0 entry moves
  CHECK(apply_cone_convention(d, w, signs) == w);  // idempotent

  DTVector pos{{2, 2, 2}, {5, -4, 0}};
  CHECK(apply_cone_convention(d, pos, signs) == pos);  // no n=0 entries
}

TEST_CASE("folded offset counts the single wrapping family once") {
  auto d = generate_standard_datum(2, DatumStyle::Handles);
  REQUIRE(d.ok());
  // Curves 0 and 2 are the handle loops, curve 1 the connector. A multicurve
  // crossing the connector four times wraps each loop curve twice when the
  // loops are unused.
  auto off = modified_offsets(d.value(), {0, 4, 0});
  CHECK(off[0] == 2);
  CHECK(off[2] == 2);
  CHECK(off[1] == 0);
}
