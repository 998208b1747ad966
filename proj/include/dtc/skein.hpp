#pragma once

#include <vector>

#include "dtc/cones.hpp"
#include "dtc/dt_vector.hpp"
#include "dtc/error.hpp"
#include "dtc/intersection.hpp"

// Intersection-degree filtration and the leading-term product it induces on
// multicurves: coordinate addition within a cone, zero across cones.
namespace dtc::skein {

struct GradedTerm {
  bool zero = true;
  DTVector coords;
  Int degree = 0;
  friend bool operator==(const GradedTerm&, const GradedTerm&) = default;
};

// Leading term of the product: defined when both embeddings share a cone,
// zero otherwise. A shared cone with a failing inversion is reported, never
// swallowed.
Outcome<GradedTerm> graded_product(const cones::ConeSet& cs, const DTVector& m,
                                   const DTVector& mp);

// Same term computed through the modified twist coordinates: apply the cone's
// twist-sign convention, add, invert the twist shift, restore the standard
// representative.
Outcome<GradedTerm> graded_product_via_modified(const cones::ConeSet& cs, const DTVector& m,
                                                const DTVector& mp);

struct Census {
  std::vector<Int> count_le;  // index d: multicurves of degree <= d
  bool complete = true;
};

// Exhaustive count of multicurves per degree bound; the twist box implied by
// the degree bound is enumerated completely.
Outcome<Census> filtration_census(const CoordinateDatum& datum, Int dmax,
                                  Int tuple_cap = 200000000);

}  // namespace dtc::skein
