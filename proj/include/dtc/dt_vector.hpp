#pragma once

#include <string>
#include <vector>

#include "dtc/error.hpp"
#include "dtc/numeric.hpp"
#include "dtc/surface.hpp"

namespace dtc {

// Dehn-Thurston coordinates: intersection numbers with the pants curves and
// twist coordinates, indexed by CurveId.
struct DTVector {
  std::vector<Int> n;
  std::vector<Int> t;
  friend bool operator==(const DTVector&, const DTVector&) = default;
};

// Real-weighted variant (exact rationals; no parity constraint).
struct RealDTVector {
  std::vector<Rat> n;
  std::vector<Rat> t;
  friend bool operator==(const RealDTVector&, const RealDTVector&) = default;
};

// Twist coordinates shifted by the count of U-arcs wrapping each curve.
struct ModifiedDTVector {
  std::vector<Int> n;
  std::vector<Int> tprime;
  friend bool operator==(const ModifiedDTVector&, const ModifiedDTVector&) = default;
};

struct DtIssue {
  Err code;
  int index;  // pants index for parity, curve index for twist-sign issues
  std::string detail;
};

// Checks the per-pants parity and the t_i >= 0 convention at n_i = 0.
std::vector<DtIssue> validate_dt(const CoordinateDatum& datum, const DTVector& v);
void require_valid_dt(const CoordinateDatum& datum, const DTVector& v);

// Same convention check for real-weighted vectors (no parity there).
std::vector<DtIssue> validate_real(const CoordinateDatum& datum, const RealDTVector& v);

// Per-curve twist offset of the modified coordinates; depends only on the
// n-block. For a curve in two pants this counts the U-arcs wrapping it on
// each side; for a folded curve the single wrapping family is counted once.
std::vector<Int> modified_offsets(const CoordinateDatum& datum, const std::vector<Int>& n);

ModifiedDTVector to_modified(const CoordinateDatum& datum, const DTVector& v);
DTVector from_modified(const CoordinateDatum& datum, const ModifiedDTVector& m);

// Which of the two dual-curve counts dominates on a cone; fixes the sign
// representative of the twist at n_i = 0.
enum class TwistSign { PrimeGE, DoublePrimeGE };

// Forces the twist representative at n_i = 0 to the sign the cone uses:
// t_i >= 0 under PrimeGE, t_i <= 0 under DoublePrimeGE. Idempotent.
DTVector apply_cone_convention(const CoordinateDatum& datum, const DTVector& v,
                               const std::vector<TwistSign>& signs);

// JSON {"n":[...],"t":[...]} in CurveId order.
std::string dt_to_json(const DTVector& v);
Outcome<DTVector> dt_from_json(const std::string& text, int expect_dim);

}  // namespace dtc
