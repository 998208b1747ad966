#include "dtc/skein.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace dtc::skein {

namespace {

std::vector<int> common_cones(const cones::ConeSet& cs, const DTVector& m, const DTVector& mp) {
  auto a = cones::locate(cs, m);
  auto b = cones::locate(cs, mp);
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common;
}

}  // namespace

Outcome<GradedTerm> graded_product(const cones::ConeSet& cs, const DTVector& m,
                                   const DTVector& mp) {
  require_valid_dt(cs.datum, m);
  require_valid_dt(cs.datum, mp);
  auto common = common_cones(cs, m, mp);
  if (common.empty()) return GradedTerm{};

  auto wm = embed(cs.datum, m);
  auto wmp = embed(cs.datum, mp);
  if (!wm.ok()) return wm.error();
  if (!wmp.ok()) return wmp.error();
  IntersectionVector sum;
  const int nc = cs.datum.curve_count();
  sum.n.resize(nc);
  sum.nprime.resize(nc);
  sum.ndprime.resize(nc);
  for (int c = 0; c < nc; ++c) {
    sum.n[c] = checked_add(wm.value().n[c], wmp.value().n[c]);
    sum.nprime[c] = checked_add(wm.value().nprime[c], wmp.value().nprime[c]);
    sum.ndprime[c] = checked_add(wm.value().ndprime[c], wmp.value().ndprime[c]);
  }
  auto inv = invert(cs.datum, sum);
  if (!inv.ok()) {
    return make_err(Err::InternalInconsistency,
                    "common cone but the summed vector fails inversion: " + inv.error().detail);
  }
  GradedTerm t;
  t.zero = false;
  t.coords = inv.value();
  t.degree = sum.sum();
  return t;
}

Outcome<GradedTerm> graded_product_via_modified(const cones::ConeSet& cs, const DTVector& m,
                                                const DTVector& mp) {
  require_valid_dt(cs.datum, m);
  require_valid_dt(cs.datum, mp);
  auto common = common_cones(cs, m, mp);
  if (common.empty()) return GradedTerm{};
  const auto& cone = cs.cones[common.front()];
  auto signs = cone.twist_signs();

  DTVector am = apply_cone_convention(cs.datum, m, signs);
  DTVector amp = apply_cone_convention(cs.datum, mp, signs);
  ModifiedDTVector mm = to_modified(cs.datum, am);
  ModifiedDTVector mmp = to_modified(cs.datum, amp);
  ModifiedDTVector sum;
  const int nc = cs.datum.curve_count();
  sum.n.resize(nc);
  sum.tprime.resize(nc);
  for (int c = 0; c < nc; ++c) {
    sum.n[c] = checked_add(mm.n[c], mmp.n[c]);
    sum.tprime[c] = checked_add(mm.tprime[c], mmp.tprime[c]);
  }
  DTVector v = from_modified(cs.datum, sum);
  for (int c = 0; c < nc; ++c) {
    if (v.n[c] == 0 && v.t[c] < 0) v.t[c] = -v.t[c];  // back to the standard representative
  }
  auto issues = validate_dt(cs.datum, v);
  if (!issues.empty()) {
    return make_err(Err::InternalInconsistency, "modified-coordinate sum is not a multicurve");
  }
  auto deg = degree(cs.datum, v);
  if (!deg.ok()) return deg.error();
  GradedTerm t;
  t.zero = false;
  t.coords = v;
  t.degree = deg.value();
  return t;
}

Outcome<Census> filtration_census(const CoordinateDatum& datum, Int dmax, Int tuple_cap) {
  DTC_CHECK(dmax >= 0, "census needs dmax >= 0");
  const int nc = datum.curve_count();
  Census out;
  out.count_le.assign(static_cast<size_t>(dmax) + 1, 0);

  // Twist bounds implied by the degree bound: the dual count dominates
  // 2|t| - 3 dmax in a two-pants chart and |t| in a folded one.
  std::vector<Int> tmax(nc);
  for (CurveId c = 0; c < nc; ++c) {
    tmax[c] = local_model(datum, c).folded ? dmax : 2 * dmax;
  }

  std::vector<Int> nblock(nc, 0), tblock(nc, 0);
  Int tuples = 0;

  std::function<bool(int)> rec_t = [&](int c) -> bool {
    if (c == nc) {
      DTVector v{nblock, tblock};
      if (++tuples > tuple_cap) return false;
      auto w = embed(datum, v);
      DTC_CHECK(w.ok(), "embedding of an enumerated vector failed");
      Int deg = w.value().sum();
      if (deg <= dmax) ++out.count_le[static_cast<size_t>(deg)];
      return true;
    }
    Int lo = nblock[c] == 0 ? 0 : -tmax[c];
    for (Int t = lo; t <= tmax[c]; ++t) {
      tblock[c] = t;
      if (!rec_t(c + 1)) return false;
    }
    return true;
  };

  std::function<bool(int)> rec_n = [&](int c) -> bool {
    if (c == nc) {
      // Parity per pants.
      for (int p = 0; p < datum.pants_count(); ++p) {
        Int s = 0;
        for (int pos = 0; pos < 3; ++pos) s += nblock[datum.pants[p][pos]];
        if (s % 2 != 0) return true;
      }
      return rec_t(0);
    }
    for (Int n = 0; n <= dmax; ++n) {
      nblock[c] = n;
      if (!rec_n(c + 1)) return false;
    }
    return true;
  };

  out.complete = rec_n(0);
  // Degree counts accumulate: entry d holds the number with degree <= d.
  for (size_t d = 1; d < out.count_le.size(); ++d) out.count_le[d] += out.count_le[d - 1];
  if (!out.complete) {
    return make_err(Err::ResourceLimit, "census tuple budget exhausted");
  }
  return out;
}

}  // namespace dtc::skein
