#include "dtc/intersection.hpp"

#include <json.hpp>

namespace dtc {

namespace {

constexpr Int kMaxCoord = Int(1) << 40;

bool in_range(Int v) { return v > -kMaxCoord && v < kMaxCoord; }

Outcome<std::monostate> check_two_pants_inputs(Int n, Int t, const DualNeighbors& b) {
  for (Int v : {n, b.n1, b.n2, b.n3, b.n4}) {
    if (v < 0) return make_err(Err::PreconditionViolated, "negative intersection count");
    if (!in_range(v)) return make_err(Err::PreconditionViolated, "coordinate too large");
  }
  if (!in_range(t)) return make_err(Err::PreconditionViolated, "twist too large");
  if ((n + b.n1 + b.n4) % 2 != 0) {
    return make_err(Err::PreconditionViolated, "parity: n+n1+n4 must be even");
  }
  if ((n + b.n2 + b.n3) % 2 != 0) {
    return make_err(Err::PreconditionViolated, "parity: n+n2+n3 must be even");
  }
  return std::monostate{};
}

}  // namespace

Outcome<Int> dual_reduced(Int n, Int t, const DualNeighbors& b) {
  auto pre = check_two_pants_inputs(n, t, b);
  if (!pre.ok()) return pre.error();
  if (n < b.n1 + b.n4) {
    return make_err(Err::PreconditionViolated, "reduced regime needs n >= n1+n4");
  }
  if (n < b.n2 + b.n3) {
    return make_err(Err::PreconditionViolated, "reduced regime needs n >= n2+n3");
  }
  return dual_reduced_unchecked<Int>(n, t, b);
}

Outcome<Int> dual_two_pants(Int n, Int t, const DualNeighbors& b, Strategy strategy) {
  auto pre = check_two_pants_inputs(n, t, b);
  if (!pre.ok()) return pre.error();
  if (strategy == Strategy::Literal) {
    auto r = reduce_literal<Int>(n, b);
    if (r.nt1 < 0 || r.nt2 < 0 || r.nt3 < 0 || r.nt4 < 0) {
      return make_err(Err::NegativeReduced,
                      "literal reduction produced a negative residual count at (n=" +
                          std::to_string(n) + ", n1..n4=" + std::to_string(b.n1) + "," +
                          std::to_string(b.n2) + "," + std::to_string(b.n3) + "," +
                          std::to_string(b.n4) + ")");
    }
  }
  return dual_two_pants_unchecked<Int>(n, t, b, strategy);
}

Outcome<Int> dual_one_pants(Int n, Int t, Int n1) {
  if (n < 0 || n1 < 0) return make_err(Err::PreconditionViolated, "negative intersection count");
  if (!in_range(n) || !in_range(n1) || !in_range(t)) {
    return make_err(Err::PreconditionViolated, "coordinate too large");
  }
  if (n1 % 2 != 0) return make_err(Err::PreconditionViolated, "parity: n1 must be even");
  return dual_one_pants_unchecked<Int>(n, t, n1);
}

Int IntersectionVector::sum() const {
  Int s = 0;
  for (Int v : n) s = checked_add(s, v);
  for (Int v : nprime) s = checked_add(s, v);
  for (Int v : ndprime) s = checked_add(s, v);
  return s;
}

template <class S, class Vec>
static Neighbors<S> neighbors_of(const TwoPantsModel& m, const Vec& counts) {
  return Neighbors<S>{counts[m.nbr[0].curve], counts[m.nbr[1].curve], counts[m.nbr[2].curve],
                      counts[m.nbr[3].curve]};
}

Outcome<IntersectionVector> embed(const CoordinateDatum& datum, const DTVector& v,
                                  Strategy strategy) {
  const int nc = datum.curve_count();
  if (static_cast<int>(v.n.size()) != nc || static_cast<int>(v.t.size()) != nc) {
    return make_err(Err::BadInput, "vector length mismatch");
  }
  IntersectionVector w;
  w.n = v.n;
  w.nprime.resize(nc);
  w.ndprime.resize(nc);
  for (CurveId c = 0; c < nc; ++c) {
    auto lm = local_model(datum, c);
    Int n = v.n[c], t = v.t[c];
    if (lm.folded) {
      Int n1 = v.n[lm.one.a1.curve];
      auto a = dual_one_pants(n, t, n1);
      if (!a.ok()) return a.error();
      auto b = dual_one_pants(n, checked_sub(t, n), n1);
      if (!b.ok()) return b.error();
      w.nprime[c] = a.value();
      w.ndprime[c] = b.value();
    } else {
      auto nb = neighbors_of<Int>(lm.two, v.n);
      auto a = dual_two_pants(n, t, nb, strategy);
      if (!a.ok()) return a.error();
      auto b = dual_two_pants(n, checked_sub(t, n), nb, strategy);
      if (!b.ok()) return b.error();
      w.nprime[c] = a.value();
      w.ndprime[c] = b.value();
    }
  }
  return w;
}

RealIntersectionVector embed_real(const CoordinateDatum& datum, const RealDTVector& v) {
  const int nc = datum.curve_count();
  DTC_CHECK(static_cast<int>(v.n.size()) == nc && static_cast<int>(v.t.size()) == nc,
            "vector length mismatch");
  RealIntersectionVector w;
  w.n = v.n;
  w.nprime.resize(nc);
  w.ndprime.resize(nc);
  for (CurveId c = 0; c < nc; ++c) {
    auto lm = local_model(datum, c);
    const Rat& n = v.n[c];
    const Rat& t = v.t[c];
    if (lm.folded) {
      Rat n1 = v.n[lm.one.a1.curve];
      w.nprime[c] = dual_one_pants_unchecked<Rat>(n, t, n1);
      w.ndprime[c] = dual_one_pants_unchecked<Rat>(n, t - n, n1);
    } else {
      auto nb = neighbors_of<Rat>(lm.two, v.n);
      w.nprime[c] = dual_two_pants_unchecked<Rat>(n, t, nb, Strategy::ArcCount);
      w.ndprime[c] = dual_two_pants_unchecked<Rat>(n, t - n, nb, Strategy::ArcCount);
    }
  }
  return w;
}

Outcome<DTVector> invert(const CoordinateDatum& datum, const IntersectionVector& w) {
  const int nc = datum.curve_count();
  if (static_cast<int>(w.n.size()) != nc || static_cast<int>(w.nprime.size()) != nc ||
      static_cast<int>(w.ndprime.size()) != nc) {
    return make_err(Err::BadInput, "intersection vector length mismatch");
  }
  for (CurveId c = 0; c < nc; ++c) {
    if (w.n[c] < 0 || w.nprime[c] < 0 || w.ndprime[c] < 0 || !in_range(w.n[c]) ||
        !in_range(w.nprime[c]) || !in_range(w.ndprime[c])) {
      return make_err(Err::NotInImage, "coordinates must be non-negative integers in range");
    }
  }
  for (int p = 0; p < datum.pants_count(); ++p) {
    Int s = 0;
    for (int pos = 0; pos < 3; ++pos) s += w.n[datum.pants[p][pos]];
    if (s % 2 != 0) {
      return make_err(Err::NotInImage, "pants " + std::to_string(p) + " parity fails on n-block");
    }
  }

  DTVector v;
  v.n = w.n;
  v.t.resize(nc);
  for (CurveId c = 0; c < nc; ++c) {
    auto lm = local_model(datum, c);
    Int n = w.n[c], np = w.nprime[c], npp = w.ndprime[c];
    Int t;
    if (lm.folded) {
      Int n1 = w.n[lm.one.a1.curve];
      Int cterm = std::max<Int>(halve_exact(n1) - n, 0);
      t = (np >= npp) ? (np - cterm) : (n - (npp - cterm));
    } else {
      auto nb = neighbors_of<Int>(lm.two, w.n);
      auto r = reduce_arc_count<Int>(n, nb);
      Int aterm = n - r.nt1 - r.nt3;
      Int cterm = reduction_additive_part(r);
      Int numer = (np >= npp) ? (np - aterm - cterm) : (2 * n - npp - aterm + cterm);
      if (numer % 2 != 0) {
        return make_err(Err::NonIntegralTwist,
                        "curve " + std::to_string(c) + ": twist equation is not even");
      }
      t = numer / 2;
    }
    if (n == 0 && t < 0) t = -t;  // standard-convention representative
    v.t[c] = t;
  }

  auto issues = validate_dt(datum, v);
  if (!issues.empty()) {
    return make_err(Err::NotInImage, "reconstructed vector is not a valid DT vector");
  }
  auto back = embed(datum, v, Strategy::ArcCount);
  if (!back.ok()) return make_err(Err::NotInImage, "re-embedding failed: " + back.error().detail);
  if (!(back.value() == w)) {
    return make_err(Err::NotInImage, "re-embedding disagrees with the input vector");
  }
  return v;
}

bool membership(const CoordinateDatum& datum, const IntersectionVector& w) {
  return invert(datum, w).ok();
}

Outcome<Int> degree(const CoordinateDatum& datum, const DTVector& v) {
  auto w = embed(datum, v);
  if (!w.ok()) return w.error();
  return w.value().sum();
}

std::string ivec_to_json(const IntersectionVector& w) {
  nlohmann::json j;
  j["schema"] = "dtc.ivec.v1";
  j["n"] = w.n;
  j["nprime"] = w.nprime;
  j["ndprime"] = w.ndprime;
  return j.dump();
}

Outcome<IntersectionVector> ivec_from_json(const std::string& text, int expect_dim) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return make_err(Err::BadInput, "intersection file is not valid JSON");
  if (j.contains("schema") && j["schema"] != "dtc.ivec.v1") {
    return make_err(Err::BadInput, "unknown intersection schema (want dtc.ivec.v1)");
  }
  for (const char* k : {"n", "nprime", "ndprime"}) {
    if (!j.contains(k) || !j[k].is_array()) {
      return make_err(Err::BadInput, std::string("intersection vector needs array '") + k + "'");
    }
  }
  IntersectionVector w;
  for (const auto& x : j["n"]) w.n.push_back(x.get<Int>());
  for (const auto& x : j["nprime"]) w.nprime.push_back(x.get<Int>());
  for (const auto& x : j["ndprime"]) w.ndprime.push_back(x.get<Int>());
  if (expect_dim >= 0 && static_cast<int>(w.n.size()) != expect_dim) {
    return make_err(Err::BadInput, "intersection vector has wrong dimension for this datum");
  }
  return w;
}

}  // namespace dtc
