#pragma once

#include <array>
#include <string>
#include <vector>

#include "dtc/error.hpp"
#include "dtc/numeric.hpp"

namespace dtc {

// Index of a pants curve, 0..3g-4.
using CurveId = int;

// One boundary slot of a pants. Slot order inside a pants is the
// counter-clockwise cyclic order around the front hexagon.
struct BoundarySlot {
  int pants = -1;
  int position = -1;  // 0,1,2
  CurveId curve = -1;

  friend bool operator==(const BoundarySlot&, const BoundarySlot&) = default;
};

// Pants decomposition plus the slot cyclic orders induced by an embedded dual
// graph. This is all the combinatorial data the coordinate formulas consume.
struct CoordinateDatum {
  int genus = 0;
  std::vector<std::array<CurveId, 3>> pants;  // 2g-2 triples, cyclic CCW

  int curve_count() const { return 3 * genus - 3; }
  int pants_count() const { return 2 * genus - 2; }

  // The two slots of each curve, filled by finalize() in deterministic order
  // (pants index, then position).
  std::vector<std::array<BoundarySlot, 2>> curve_slots;

  void finalize();
  friend bool operator==(const CoordinateDatum& a, const CoordinateDatum& b) {
    return a.genus == b.genus && a.pants == b.pants;
  }
};

struct DatumIssue {
  Err code;
  std::string detail;
};

// Empty result means every datum invariant holds.
std::vector<DatumIssue> validate(const CoordinateDatum& datum);
void require_valid(const CoordinateDatum& datum);

// Local picture around one pants curve. For a curve lying in two distinct
// pants the four neighbor slots are labelled so that in the first pants
// (f_plus) nbr[0] is the slot preceding the curve's slot counter-clockwise
// and nbr[3] the one following it, while in the second pants (f_minus)
// nbr[1] follows and nbr[2] precedes. Swapping the roles of the two pants
// permutes the labels by (0 2)(1 3), which leaves every formula consuming
// them invariant.
struct TwoPantsModel {
  int f_plus = -1;
  int f_minus = -1;
  std::array<BoundarySlot, 4> nbr;
  std::array<BoundarySlot, 2> self;  // the curve's own slots in f_plus, f_minus
};

struct OnePantsModel {
  int pants = -1;
  BoundarySlot a1;  // the third slot of the folded pants
};

struct CurveLocalModel {
  bool folded = false;
  TwoPantsModel two;
  OnePantsModel one;
};

CurveLocalModel local_model(const CoordinateDatum& datum, CurveId a);

enum class DatumStyle { Chain, Handles };

// Reference decompositions: `Chain` glues pants along all-distinct curves
// (theta graph for g=2, a double-rung circular ladder beyond); `Handles`
// hangs g-1 one-holed tori off a cycle of spine pants.
Outcome<CoordinateDatum> generate_standard_datum(int genus, DatumStyle style);

// Canonical JSON text, bit-exact round-trip.
std::string datum_to_json(const CoordinateDatum& datum);
Outcome<CoordinateDatum> datum_from_json(const std::string& text);

}  // namespace dtc
