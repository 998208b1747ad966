#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <vector>

#include "dtc/dt_vector.hpp"
#include "dtc/error.hpp"
#include "dtc/numeric.hpp"
#include "dtc/surface.hpp"

namespace dtc {

// Counts of the multicurve on the four neighbor slots around a two-pants
// curve: n1/n4 share the first pants with it, n2/n3 the second, with n1 and
// n3 carrying the U-arc families that wrap the curve.
template <class S>
struct Neighbors {
  S n1, n2, n3, n4;
};
using DualNeighbors = Neighbors<Int>;

// How U- and beta-arc counts are derived from boundary counts when the
// excess-arc contributions are split off. `Literal` applies the closed-form
// expressions verbatim (they can go negative when one boundary count
// dominates); `ArcCount` uses the geometric pants arc counts, which never do.
enum class Strategy { ArcCount, Literal };

template <class S>
struct ReductionData {
  S delta14, delta23;   // beta-arcs between the two neighbor slots of a pants
  S u1, u2, u3, u4;     // U-arcs on each neighbor slot
  S nt1, nt2, nt3, nt4; // residual counts feeding the reduced formula
};

namespace detail {

template <class S>
S half(const S& x) {
  if constexpr (std::is_same_v<S, Int>) {
    return halve_exact(x);
  } else {
    return x / S(2);
  }
}

template <class S>
S clamp0(const S& x) {
  return x < S(0) ? S(0) : x;
}

template <class S>
S abs_val(const S& x) {
  return x < S(0) ? S(0) - x : x;
}

template <class S>
S max3(const S& a, const S& b, const S& c) {
  return std::max(a, std::max(b, c));
}

// Arcs between slots i and j of a pants with boundary counts (ci, cj, ck).
template <class S>
S pants_arcs(const S& ci, const S& cj, const S& ck) {
  return clamp0(std::min(half<S>(ci + cj - ck), std::min(ci, cj)));
}

}  // namespace detail

template <class S>
ReductionData<S> reduce_literal(const S& n, const Neighbors<S>& b) {
  using detail::clamp0;
  using detail::half;
  ReductionData<S> r;
  r.delta14 = clamp0(half<S>(b.n1 + b.n4 - n));
  r.delta23 = clamp0(half<S>(b.n2 + b.n3 - n));
  r.u1 = clamp0(half<S>(b.n1 - b.n4 - n));
  r.u4 = clamp0(half<S>(b.n4 - b.n1 - n));
  r.u2 = clamp0(half<S>(b.n2 - b.n3 - n));
  r.u3 = clamp0(half<S>(b.n3 - b.n2 - n));
  r.nt1 = b.n1 - S(2) * r.u1 - r.delta14;
  r.nt4 = b.n4 - S(2) * r.u4 - r.delta14;
  r.nt2 = b.n2 - S(2) * r.u2 - r.delta23;
  r.nt3 = b.n3 - S(2) * r.u3 - r.delta23;
  return r;
}

template <class S>
ReductionData<S> reduce_arc_count(const S& n, const Neighbors<S>& b) {
  using detail::clamp0;
  using detail::half;
  using detail::pants_arcs;
  ReductionData<S> r;
  r.delta14 = pants_arcs<S>(b.n1, b.n4, n);
  r.delta23 = pants_arcs<S>(b.n2, b.n3, n);
  r.u1 = clamp0(half<S>(b.n1 - b.n4 - n));
  r.u4 = clamp0(half<S>(b.n4 - b.n1 - n));
  r.u2 = clamp0(half<S>(b.n2 - b.n3 - n));
  r.u3 = clamp0(half<S>(b.n3 - b.n2 - n));
  r.nt1 = pants_arcs<S>(b.n1, n, b.n4);
  r.nt4 = pants_arcs<S>(b.n4, n, b.n1);
  r.nt2 = pants_arcs<S>(b.n2, n, b.n3);
  r.nt3 = pants_arcs<S>(b.n3, n, b.n2);
  return r;
}

template <class S>
S reduction_additive_part(const ReductionData<S>& r) {
  return r.delta14 + r.delta23 + S(2) * (r.u1 + r.u2 + r.u3 + r.u4);
}

// Crossing count with the dual curve for a two-pants curve in the regime with
// no excess arcs (n >= n1+n4 and n >= n2+n3).
template <class S>
S dual_reduced_unchecked(const S& n, const S& t, const Neighbors<S>& b) {
  using detail::abs_val;
  using detail::max3;
  return max3<S>(abs_val<S>(S(2) * t + n - b.n1 - b.n3), b.n1 + b.n3 - n, b.n2 + b.n4 - n);
}

template <class S>
S dual_two_pants_unchecked(const S& n, const S& t, const Neighbors<S>& b, Strategy strategy) {
  ReductionData<S> r =
      strategy == Strategy::ArcCount ? reduce_arc_count<S>(n, b) : reduce_literal<S>(n, b);
  Neighbors<S> res{r.nt1, r.nt2, r.nt3, r.nt4};
  return dual_reduced_unchecked<S>(n, t, res) + reduction_additive_part<S>(r);
}

// Crossing count with the dual curve of a folded (one-pants) curve.
template <class S>
S dual_one_pants_unchecked(const S& n, const S& t, const S& n1) {
  using detail::abs_val;
  using detail::clamp0;
  using detail::half;
  return abs_val<S>(t) + clamp0<S>(half<S>(n1) - n);
}

// Checked integer entry points (report precondition violations).
Outcome<Int> dual_reduced(Int n, Int t, const DualNeighbors& b);
Outcome<Int> dual_two_pants(Int n, Int t, const DualNeighbors& b, Strategy strategy);
Outcome<Int> dual_one_pants(Int n, Int t, Int n1);

// Intersection numbers with the full 9g-9 curve system, blocks ordered as
// (pants curves | dual curves | twisted dual curves).
struct IntersectionVector {
  std::vector<Int> n;
  std::vector<Int> nprime;
  std::vector<Int> ndprime;
  friend bool operator==(const IntersectionVector&, const IntersectionVector&) = default;
  Int sum() const;
};

struct RealIntersectionVector {
  std::vector<Rat> n;
  std::vector<Rat> nprime;
  std::vector<Rat> ndprime;
  friend bool operator==(const RealIntersectionVector&, const RealIntersectionVector&) = default;
};

Outcome<IntersectionVector> embed(const CoordinateDatum& datum, const DTVector& v,
                                  Strategy strategy = Strategy::ArcCount);
RealIntersectionVector embed_real(const CoordinateDatum& datum, const RealDTVector& v);

// Reconstructs DT coordinates from intersection numbers (standard-convention
// representative) and confirms the result re-embeds to the input.
Outcome<DTVector> invert(const CoordinateDatum& datum, const IntersectionVector& w);

// Whether w is the image of a multicurve.
bool membership(const CoordinateDatum& datum, const IntersectionVector& w);

Outcome<Int> degree(const CoordinateDatum& datum, const DTVector& v);

std::string ivec_to_json(const IntersectionVector& w);
Outcome<IntersectionVector> ivec_from_json(const std::string& text, int expect_dim);

}  // namespace dtc
