#include <doctest.h>

#include "dtc/surface.hpp"

using namespace dtc;

TEST_CASE("genus-2 chain datum is valid") {
  auto d = generate_standard_datum(2, DatumStyle::Chain);
  REQUIRE(d.ok());
  CHECK(validate(d.value()).empty());
  CHECK(d.value().curve_count() == 3);
  CHECK(d.value().pants_count() == 2);
  for (CurveId c = 0; c < 3; ++c) CHECK_FALSE(local_model(d.value(), c).folded);
}

TEST_CASE("a curve occupying three slots is rejected") {
  CoordinateDatum d;
  d.genus = 2;
  d.pants = {{0, 0, 0}, {1, 2, 2}};
  d.finalize();
  auto issues = validate(d);
  REQUIRE_FALSE(issues.empty());
  bool saw_slot_count = false;
  for (auto& i : issues) saw_slot_count |= i.code == Err::BadSlotCount;
  CHECK(saw_slot_count);
}

TEST_CASE("folded pants give a one-pants local model") {
  CoordinateDatum d;
  d.genus = 3;
  // One folded handle (curve 0) hanging off a chain of pants.
  d.pants = {{0, 0, 1}, {1, 2, 3}, {2, 4, 5}, {3, 5, 4}};
  d.finalize();
  CHECK(validate(d).empty());
  auto lm = local_model(d, 0);
  CHECK(lm.folded);
  CHECK(lm.one.pants == 0);
  CHECK(lm.one.a1.curve == 1);
}

TEST_CASE("handles datum contains folded curves") {
  auto d = generate_standard_datum(2, DatumStyle::Handles);
  REQUIRE(d.ok());
  CHECK(validate(d.value()).empty());
  int folded = 0;
  for (CurveId c = 0; c < 3; ++c) folded += local_model(d.value(), c).folded ? 1 : 0;
  CHECK(folded == 2);
}

TEST_CASE("chain data for larger genus") {
  for (int g : {3, 4, 5}) {
    auto d = generate_standard_datum(g, DatumStyle::Chain);
    REQUIRE(d.ok());
    CHECK(validate(d.value()).empty());
    CHECK(static_cast<int>(d.value().pants.size()) == 2 * g - 2);
    for (CurveId c = 0; c < d.value().curve_count(); ++c) {
      CHECK_FALSE(local_model(d.value(), c).folded);
    }
    auto h = generate_standard_datum(g, DatumStyle::Handles);
    REQUIRE(h.ok());
    CHECK(validate(h.value()).empty());
  }
}

TEST_CASE("genus below two is refused") {
  auto d = generate_standard_datum(1, DatumStyle::Chain);
  REQUIRE_FALSE(d.ok());
  CHECK(d.error().code == Err::UnsupportedGenus);
}

TEST_CASE("slot bookkeeping is consistent") {
  for (auto style : {DatumStyle::Chain, DatumStyle::Handles}) {
    auto d = generate_standard_datum(4, style);
    REQUIRE(d.ok());
    // Sum over pants of 3 slots = 2 x number of curves.
    CHECK(3 * d.value().pants_count() == 2 * d.value().curve_count());
    // Rebuilding the slot table from local models reproduces curve_slots.
    for (CurveId c = 0; c < d.value().curve_count(); ++c) {
      auto lm = local_model(d.value(), c);
      const auto& slots = d.value().curve_slots[c];
      if (lm.folded) {
        CHECK(slots[0].pants == lm.one.pants);
        CHECK(slots[1].pants == lm.one.pants);
      } else {
        CHECK(slots[0].pants == lm.two.f_plus);
        CHECK(slots[1].pants == lm.two.f_minus);
        CHECK(lm.two.self[0] == slots[0]);
        CHECK(lm.two.self[1] == slots[1]);
      }
    }
  }
}

TEST_CASE("datum JSON round-trips to identical bytes") {
  auto d = generate_standard_datum(3, DatumStyle::Handles);
  REQUIRE(d.ok());
  std::string s = datum_to_json(d.value());
  auto back = datum_from_json(s);
  REQUIRE(back.ok());
  CHECK(back.value() == d.value());
  CHECK(datum_to_json(back.value()) == s);
}

TEST_CASE("disconnected datum is reported") {
  CoordinateDatum d;
  d.genus = 3;
  // Two separate theta components: not connected.
  d.pants = {{0, 1, 2}, {0, 2, 1}, {3, 4, 5}, {3, 5, 4}};
  d.finalize();
  auto issues = validate(d);
  REQUIRE_FALSE(issues.empty());
  bool saw = false;
  for (auto& i : issues) saw |= i.code == Err::Disconnected;
  CHECK(saw);
}
