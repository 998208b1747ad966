#pragma once

#include <vector>

#include "dtc/error.hpp"
#include "dtc/intersection.hpp"
#include "dtc/numeric.hpp"

// Brute-force geometric referee. Everything here counts crossings of explicit
// exact-rational curve representatives; none of it consults the closed-form
// counting functions it is used to check.
namespace dtc::oracle {

// A semi-standard presentation around a two-pants curve: the U-arcs on the
// curve's own boundary may sit on either side of the dual curve (x1/x4 in the
// first pants, x2/x3 in the second), and the annulus is twisted by T. The
// standard twist of the underlying multiarc is t = T - x1 - x3.
struct SemiStandardPresentation {
  Int x1 = 0, x2 = 0, x3 = 0, x4 = 0;
  Int T = 0;
  Int left_top = 0;    // n1 + 2 x1
  Int right_top = 0;   // n4 + 2 x4
  Int left_bottom = 0; // n2 + 2 x2
  Int right_bottom = 0;// n3 + 2 x3
};

// Annulus picture: n marked points per boundary at half-integer positions
// (period n), chords k -> k+T as straight lifts, one dual-curve arc pinned at
// x = 0 (back) and one from bottom position lminus to top position lplus
// (front), drawn with `front_winding` extra wraps.
struct ChordModel {
  Int n = 0;
  Int T = 0;
  Int lplus = 0;
  Int lminus = 0;
  Int front_winding = 0;
};

// Exact crossing count, summed over lifts: segment-sign implementation.
Int chord_crossings(const ChordModel& m);
// Independent floor-arithmetic implementation used as a cross-check.
Int chord_crossings_direct(const ChordModel& m);

Int presentation_count(Int n, const DualNeighbors& b);

// Minimum crossing count with the dual curve over all semi-standard
// presentations, in the regime n >= n1+n4, n >= n2+n3.
Outcome<Int> two_pants_reduced(Int n, Int t, const DualNeighbors& b);

// Same minimum but with the front dual-curve arc drawn with a fixed winding,
// which traces a different curve through the annulus. Exposed for tests.
Outcome<Int> two_pants_reduced_winding(Int n, Int t, const DualNeighbors& b, Int winding);

// Bigon bookkeeping across the presentation family: a presentation is
// bigon-free iff no wrapping arc sits on the short side of the twist
// (x1,x3 idle when 0 < T < delta, x2,x4 idle when delta < T < 0, with
// delta the left-block imbalance). Every bigon-free presentation must
// realize the minimum, and at least one must exist.
struct ReducedCertificate {
  Int minimum = 0;
  bool bigon_free_exists = false;
  bool bigon_free_all_minimal = true;
};
Outcome<ReducedCertificate> two_pants_reduced_certified(Int n, Int t, const DualNeighbors& b);

// Splits off the boundary-to-boundary and wrapping arc families by geometric
// pants arc counts (1 resp. 2 crossings each), then runs the reduced
// enumeration on the residual.
Outcome<Int> two_pants_general(Int n, Int t, const DualNeighbors& b);

// Folded-curve referee: draws the multiarc with the given data on a flat
// one-holed torus and counts crossings with the dual curve after exhaustive
// bigon elimination.
Outcome<Int> one_pants(Int n, Int t, Int n1);

// Diagnostics for the flat model (exposed for tests).
struct FlatModelStats {
  Int raw_crossings = 0;      // before bigon elimination
  Int removed_bigons = 0;     // pairs removed
  Int final_crossings = 0;
  bool same_sign_certificate = false;  // all crossings same orientation
  Int segment_count = 0;
  bool embedded = true;  // no two distinct m-segments intersect
};
Outcome<FlatModelStats> one_pants_stats(Int n, Int t, Int n1, bool check_embedded);

}  // namespace dtc::oracle
