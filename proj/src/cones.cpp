#include "dtc/cones.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dtc::cones {

using lin::Mat;
using lin::Vec;

namespace {

struct FormBuilder {
  const CoordinateDatum& datum;
  int N;   // number of pants curves
  int dim; // 2N

  explicit FormBuilder(const CoordinateDatum& d)
      : datum(d), N(d.curve_count()), dim(2 * d.curve_count()) {}

  Vec zero() const { return Vec(dim, Rat(0)); }
  Vec nvar(CurveId c) const {
    Vec v = zero();
    v[c] = Rat(1);
    return v;
  }
  Vec tvar(CurveId c) const {
    Vec v = zero();
    v[N + c] = Rat(1);
    return v;
  }
  Vec count(int pants, int pos) const { return nvar(datum.pants[pants][pos]); }

  // Arcs joining slots i and j of a pants, as a linear form on the region.
  Vec beta(int p, int si, int sj, PantsRegion reg) const {
    int sk = 3 - si - sj;
    auto c = [&](int s) { return count(p, s); };
    switch (reg) {
      case PantsRegion::Triangle:
        return lin::scale(lin::sub(lin::add(c(si), c(sj)), c(sk)), Rat(1, 2));
      default: {
        int dominant = static_cast<int>(reg) - 1;
        if (dominant == si) return c(sj);
        if (dominant == sj) return c(si);
        return zero();
      }
    }
  }

  // Arcs from slot i back to itself.
  Vec uarc(int p, int si, PantsRegion reg) const {
    if (reg == PantsRegion::Triangle || static_cast<int>(reg) - 1 != si) return zero();
    int sj = (si + 1) % 3, sk = (si + 2) % 3;
    return lin::scale(lin::sub(count(p, si), lin::add(count(p, sj), count(p, sk))),
                      Rat(1, 2));
  }

  std::vector<Vec> region_rows(int p, PantsRegion reg) const {
    std::vector<Vec> rows;
    auto c = [&](int s) { return count(p, s); };
    if (reg == PantsRegion::Triangle) {
      for (int i = 0; i < 3; ++i) {
        rows.push_back(lin::sub(lin::add(c((i + 1) % 3), c((i + 2) % 3)), c(i)));
      }
    } else {
      int i = static_cast<int>(reg) - 1;
      rows.push_back(lin::sub(c(i), lin::add(c((i + 1) % 3), c((i + 2) % 3))));
    }
    return rows;
  }
};

struct CurveForms {
  Vec x, y;           // 2t + n - nt1 - nt3 and its shift by -2n (folded: t, t - n)
  Vec m13, m24;       // flat levels (two-pants only)
  Vec cterm;          // additive excess-arc contribution
  bool folded = false;
};

CurveForms curve_forms(const FormBuilder& fb, CurveId c,
                       const std::vector<PantsRegion>& regions) {
  CurveForms f;
  auto lm = local_model(fb.datum, c);
  if (lm.folded) {
    f.folded = true;
    f.x = fb.tvar(c);
    f.y = lin::sub(f.x, fb.nvar(c));
    f.cterm = fb.uarc(lm.one.pants, lm.one.a1.position, regions[lm.one.pants]);
    return f;
  }
  const auto& tw = lm.two;
  PantsRegion rp = regions[tw.f_plus], rm = regions[tw.f_minus];
  int sp = tw.self[0].position, sm = tw.self[1].position;
  Vec nt1 = fb.beta(tw.f_plus, tw.nbr[0].position, sp, rp);
  Vec nt4 = fb.beta(tw.f_plus, tw.nbr[3].position, sp, rp);
  Vec nt2 = fb.beta(tw.f_minus, tw.nbr[1].position, sm, rm);
  Vec nt3 = fb.beta(tw.f_minus, tw.nbr[2].position, sm, rm);
  Vec d14 = fb.beta(tw.f_plus, tw.nbr[0].position, tw.nbr[3].position, rp);
  Vec d23 = fb.beta(tw.f_minus, tw.nbr[1].position, tw.nbr[2].position, rm);
  Vec usum = fb.zero();
  usum = lin::add(usum, fb.uarc(tw.f_plus, tw.nbr[0].position, rp));
  usum = lin::add(usum, fb.uarc(tw.f_plus, tw.nbr[3].position, rp));
  usum = lin::add(usum, fb.uarc(tw.f_minus, tw.nbr[1].position, rm));
  usum = lin::add(usum, fb.uarc(tw.f_minus, tw.nbr[2].position, rm));
  f.x = lin::add(lin::scale(fb.tvar(c), Rat(2)), lin::sub(fb.nvar(c), lin::add(nt1, nt3)));
  f.y = lin::sub(f.x, lin::scale(fb.nvar(c), Rat(2)));
  f.m13 = lin::sub(lin::add(nt1, nt3), fb.nvar(c));
  f.m24 = lin::sub(lin::add(nt2, nt4), fb.nvar(c));
  f.cterm = lin::add(lin::add(d14, d23), lin::scale(usum, Rat(2)));
  return f;
}

// Value form and branch constraints for one max{|X|, m13, m24} selector.
struct BranchPick {
  Vec value;
  std::vector<Vec> rows;
};

std::optional<BranchPick> pick_branch(const CurveForms& f, const Vec& xform, Branch br) {
  BranchPick out;
  Vec neg = lin::scale(xform, Rat(-1));
  if (f.folded) {
    if (br == Branch::Flat13 || br == Branch::Flat24) return std::nullopt;
    out.value = br == Branch::AbsPos ? xform : neg;
    out.rows.push_back(br == Branch::AbsPos ? xform : neg);  // |X| branch sign
    return out;
  }
  switch (br) {
    case Branch::AbsPos:
      out.value = xform;
      out.rows = {xform, lin::sub(xform, f.m13), lin::sub(xform, f.m24)};
      break;
    case Branch::AbsNeg:
      out.value = neg;
      out.rows = {neg, lin::sub(neg, f.m13), lin::sub(neg, f.m24)};
      break;
    case Branch::Flat13:
      out.value = f.m13;
      out.rows = {lin::sub(f.m13, xform), lin::sub(f.m13, neg), lin::sub(f.m13, f.m24)};
      break;
    case Branch::Flat24:
      out.value = f.m24;
      out.rows = {lin::sub(f.m24, xform), lin::sub(f.m24, neg), lin::sub(f.m24, f.m13)};
      break;
  }
  return out;
}

std::string row_key(const Vec& v) {
  std::string s;
  for (const auto& r : v) {
    s += r.str();
    s += ',';
  }
  return s;
}

Mat tidy_rows(const Mat& rows) {
  std::set<std::string> seen;
  Mat out;
  for (const auto& r : rows) {
    Vec p = lin::primitive(r);
    bool zero = true;
    for (const auto& v : p) zero &= v.is_zero();
    if (zero) continue;
    if (seen.insert(row_key(p)).second) out.push_back(std::move(p));
  }
  return out;
}

// Is g >= 0 implied by the homogeneous system rows >= 0?
bool hcone_implies(const Mat& rows, const Vec& g) {
  Mat sys = rows;
  Vec b(rows.size(), Rat(0));
  sys.push_back(lin::scale(g, Rat(-1)));
  b.push_back(Rat(1));  // g.x <= -1
  return !lin::feasible_point(sys, b).has_value();
}

Mat irredundant(const Mat& rows) {
  Mat cur = rows;
  for (size_t i = 0; i < cur.size();) {
    Mat others;
    for (size_t j = 0; j < cur.size(); ++j) {
      if (j != i) others.push_back(cur[j]);
    }
    if (hcone_implies(others, cur[i])) {
      cur.erase(cur.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  std::sort(cur.begin(), cur.end(),
            [](const Vec& a, const Vec& b) { return row_key(a) < row_key(b); });
  return cur;
}

}  // namespace

std::vector<TwistSign> Cone::twist_signs() const {
  std::vector<TwistSign> s;
  s.reserve(signs.curves.size());
  for (const auto& c : signs.curves) {
    s.push_back(c.prime_ge ? TwistSign::PrimeGE : TwistSign::DoublePrimeGE);
  }
  return s;
}

ConeSet enumerate_cones(const CoordinateDatum& datum) {
  require_valid(datum);
  FormBuilder fb(datum);
  const int N = fb.N;
  const int P = datum.pants_count();

  ConeSet cs;
  cs.datum = datum;

  Mat base;
  for (CurveId c = 0; c < N; ++c) base.push_back(fb.nvar(c));  // weights >= 0

  std::vector<PantsRegion> regions(P);
  std::vector<CurveStrata> strata(N);

  std::function<void(int, Mat&, const lin::Vec&)> rec_curve;
  std::function<void(int, Mat&, const lin::Vec&)> rec_pants;

  auto finalize = [&](const Mat& rows) {
    Cone cone;
    cone.signs = SignVector{regions, strata};
    cone.domain_rows = tidy_rows(rows);
    // Build the linear map.
    cone.map.assign(3 * N, fb.zero());
    for (CurveId c = 0; c < N; ++c) {
      CurveForms f = curve_forms(fb, c, regions);
      auto bp = pick_branch(f, f.x, strata[c].bp);
      auto bpp = pick_branch(f, f.y, strata[c].bpp);
      cone.map[c] = fb.nvar(c);
      cone.map[N + c] = lin::add(bp->value, f.cterm);
      cone.map[2 * N + c] = lin::add(bpp->value, f.cterm);
    }
    cone.id = static_cast<int>(cs.cones.size());
    cs.cones.push_back(std::move(cone));
  };

  rec_curve = [&](int c, Mat& rows, const lin::Vec& hint) {
    if (c == N) {
      finalize(rows);
      return;
    }
    CurveForms f = curve_forms(fb, c, regions);
    for (Branch bp : {Branch::AbsNeg, Branch::AbsPos, Branch::Flat13, Branch::Flat24}) {
      auto p1 = pick_branch(f, f.x, bp);
      if (!p1) continue;
      for (Branch bpp : {Branch::AbsNeg, Branch::AbsPos, Branch::Flat13, Branch::Flat24}) {
        auto p2 = pick_branch(f, f.y, bpp);
        if (!p2) continue;
        for (bool prime_ge : {true, false}) {
          size_t mark = rows.size();
          for (auto& r : p1->rows) rows.push_back(r);
          for (auto& r : p2->rows) rows.push_back(r);
          Vec diff = lin::sub(p1->value, p2->value);
          rows.push_back(prime_ge ? diff : lin::scale(diff, Rat(-1)));
          if (auto w = lin::cone_interior_point(rows, &hint)) {
            strata[c] = CurveStrata{bp, bpp, prime_ge};
            rec_curve(c + 1, rows, *w);
          }
          rows.resize(mark);
        }
      }
    }
  };

  rec_pants = [&](int p, Mat& rows, const lin::Vec& hint) {
    if (p == P) {
      rec_curve(0, rows, hint);
      return;
    }
    for (PantsRegion reg :
         {PantsRegion::Triangle, PantsRegion::Dom0, PantsRegion::Dom1, PantsRegion::Dom2}) {
      size_t mark = rows.size();
      for (auto& r : fb.region_rows(p, reg)) rows.push_back(r);
      if (auto w = lin::cone_interior_point(rows, &hint)) {
        regions[p] = reg;
        rec_pants(p + 1, rows, *w);
      }
      rows.resize(mark);
    }
  };

  Mat rows = base;
  rec_pants(0, rows, lin::Vec{});

  // Deduplicate by region. Equal full-dimensional regions force equal maps,
  // so grouping by the map matrix first makes the quadratic part tiny.
  {
    std::map<std::string, std::vector<int>> groups;
    for (const auto& cone : cs.cones) {
      std::string key;
      for (const auto& r : cone.map) key += row_key(r) + ";";
      groups[key].push_back(cone.id);
    }
    auto region_leq = [&](const Cone& a, const Cone& b) {
      for (const auto& g : b.domain_rows) {
        if (!hcone_implies(a.domain_rows, g)) return false;
      }
      return true;
    };
    std::vector<char> drop(cs.cones.size(), 0);
    for (auto& [key, ids] : groups) {
      for (size_t i = 0; i < ids.size(); ++i) {
        if (drop[ids[i]]) continue;
        for (size_t j = i + 1; j < ids.size(); ++j) {
          if (drop[ids[j]]) continue;
          if (region_leq(cs.cones[ids[i]], cs.cones[ids[j]]) &&
              region_leq(cs.cones[ids[j]], cs.cones[ids[i]])) {
            drop[ids[j]] = 1;
          }
        }
      }
    }
    std::vector<Cone> kept;
    for (auto& cone : cs.cones) {
      if (drop[cone.id]) continue;
      cone.id = static_cast<int>(kept.size());
      cone.domain_rows = irredundant(cone.domain_rows);
      kept.push_back(std::move(cone));
    }
    cs.cones = std::move(kept);
  }

  // Image description: left inverse of the injective map gives the span
  // equations, the domain rows pull back through it.
  for (auto& cone : cs.cones) {
    const Mat& L = cone.map;
    Mat lt = L;  // find 2N independent rows
    std::vector<int> piv;
    Mat tmp = L;
    // Row-reduce a copy of L^T to find independent rows of L.
    Mat ltrans(fb.dim, Vec(3 * N, Rat(0)));
    for (int r = 0; r < 3 * N; ++r) {
      for (int c2 = 0; c2 < fb.dim; ++c2) ltrans[c2][r] = L[r][c2];
    }
    std::vector<int> pivot_rows;
    lin::rref(ltrans, &pivot_rows);
    DTC_CHECK(static_cast<int>(pivot_rows.size()) == fb.dim, "embedding map must be injective");
    Mat square;
    for (int r : pivot_rows) square.push_back(L[r]);
    // Invert the square submatrix.
    Mat aug = square;
    for (int i = 0; i < fb.dim; ++i) {
      for (int j = 0; j < fb.dim; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
    }
    int rank = lin::rref(aug);
    DTC_CHECK(rank == fb.dim, "square submatrix must be invertible");
    Mat minv(fb.dim, Vec(3 * N, Rat(0)));
    for (int i = 0; i < fb.dim; ++i) {
      for (int j = 0; j < fb.dim; ++j) minv[i][pivot_rows[j]] = aug[i][fb.dim + j];
    }
    // Image equations: (I - L Minv) y = 0.
    Mat eqs;
    for (int r = 0; r < 3 * N; ++r) {
      Vec row(3 * N, Rat(0));
      row[r] = Rat(1);
      for (int j = 0; j < 3 * N; ++j) {
        Rat acc;
        for (int k = 0; k < fb.dim; ++k) acc += L[r][k] * minv[k][j];
        row[j] -= acc;
      }
      eqs.push_back(row);
    }
    cone.image_eqs = tidy_rows(eqs);
    Mat img;
    for (const auto& g : cone.domain_rows) {
      Vec row(3 * N, Rat(0));
      for (int j = 0; j < 3 * N; ++j) {
        Rat acc;
        for (int k = 0; k < fb.dim; ++k) acc += g[k] * minv[k][j];
        row[j] = acc;
      }
      img.push_back(row);
    }
    cone.image_rows = tidy_rows(img);
  }
  return cs;
}

std::vector<Rat> to_image_point(const IntersectionVector& w) {
  std::vector<Rat> y;
  for (Int v : w.n) y.push_back(Rat(v));
  for (Int v : w.nprime) y.push_back(Rat(v));
  for (Int v : w.ndprime) y.push_back(Rat(v));
  return y;
}

std::vector<Rat> domain_point(const RealDTVector& v) {
  std::vector<Rat> x = v.n;
  x.insert(x.end(), v.t.begin(), v.t.end());
  return x;
}

namespace {

bool in_rows(const Mat& rows, const Vec& x) {
  for (const auto& r : rows) {
    if (lin::dot(r, x).sign() < 0) return false;
  }
  return true;
}

}  // namespace

std::vector<int> locate(const ConeSet& cs, const RealDTVector& v) {
  const int N = cs.datum.curve_count();
  std::vector<int> zeros;
  for (int c = 0; c < N; ++c) {
    if (v.n[c].is_zero() && !v.t[c].is_zero()) zeros.push_back(c);
  }
  DTC_CHECK(zeros.size() <= 20, "too many sign flips to enumerate");
  std::set<int> found;
  for (size_t mask = 0; mask < (size_t{1} << zeros.size()); ++mask) {
    RealDTVector f = v;
    for (size_t i = 0; i < zeros.size(); ++i) {
      if (mask & (size_t{1} << i)) f.t[zeros[i]] = -f.t[zeros[i]];
    }
    Vec x = domain_point(f);
    for (const auto& cone : cs.cones) {
      if (in_rows(cone.domain_rows, x)) found.insert(cone.id);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<int> locate(const ConeSet& cs, const DTVector& v) {
  RealDTVector r;
  for (Int x : v.n) r.n.push_back(Rat(x));
  for (Int x : v.t) r.t.push_back(Rat(x));
  return locate(cs, r);
}

std::vector<int> locate_image(const ConeSet& cs, const std::vector<Rat>& w) {
  std::vector<int> out;
  for (const auto& cone : cs.cones) {
    bool ok = in_rows(cone.image_rows, w);
    for (const auto& e : cone.image_eqs) {
      if (!ok) break;
      ok &= lin::dot(e, w).is_zero();
    }
    if (ok) out.push_back(cone.id);
  }
  return out;
}

Outcome<std::vector<int>> locate_image(const ConeSet& cs, const IntersectionVector& w) {
  auto ids = locate_image(cs, to_image_point(w));
  if (ids.empty()) {
    return make_err(Err::NotInAnyCone, "intersection vector lies in no enumerated cone");
  }
  return ids;
}

bool real_membership(const ConeSet& cs, const std::vector<Rat>& w) {
  return !locate_image(cs, w).empty();
}

lin::Mat domain_slice_vertices(const Cone& cone) {
  // Slice functional: the sum of all image coordinates, positive on the
  // region away from the origin.
  Vec fun(cone.map[0].size(), Rat(0));
  for (const auto& row : cone.map) fun = lin::add(fun, row);
  Mat E{fun};
  Vec e{Rat(1)};
  auto p = lin::enumerate_vertices(cone.domain_rows, Vec(cone.domain_rows.size(), Rat(0)), E, e);
  return p.vertices;
}

namespace {

std::string point_key(const Vec& p) {
  std::string s;
  for (const auto& r : p) {
    s += r.str();
    s += ',';
  }
  return s;
}

}  // namespace

Outcome<PolyComplex> build_complex(const ConeSet& cs, bool allow_large) {
  if (cs.datum.genus > 2 && !allow_large) {
    return make_err(Err::ResourceLimit,
                    "face-lattice construction beyond genus 2 requires the explicit flag");
  }
  PolyComplex pc;
  const int n9 = 3 * cs.datum.curve_count();
  Vec ones(n9, Rat(1));

  std::map<std::string, int> vid;
  auto vertex_id = [&](const Vec& p) {
    auto key = point_key(p);
    auto it = vid.find(key);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(pc.vertices.size());
    pc.vertices.push_back(p);
    vid[key] = id;
    return id;
  };

  struct RawCell {
    std::vector<std::string> keys;
    int dim;
    std::set<int> tops;
  };
  std::map<std::vector<std::string>, RawCell> cells;
  std::vector<std::vector<std::string>> top_key_of_cone(cs.cones.size());
  std::vector<std::vector<std::vector<std::string>>> faces_of_cone(cs.cones.size());

  for (const auto& cone : cs.cones) {
    Mat E = cone.image_eqs;
    E.push_back(ones);
    Vec e(E.size(), Rat(0));
    e.back() = Rat(1);
    auto fl = lin::face_lattice(cone.image_rows, Vec(cone.image_rows.size(), Rat(0)), E, e);
    DTC_CHECK(!fl.vertices.empty(), "full-dimensional cone with empty slice");
    for (const auto& v : fl.vertices) vertex_id(v);
    int top_dim = -1;
    for (size_t f = 0; f < fl.faces.size(); ++f) top_dim = std::max(top_dim, fl.face_dim[f]);
    for (size_t f = 0; f < fl.faces.size(); ++f) {
      std::vector<std::string> keys;
      for (int v : fl.faces[f]) keys.push_back(point_key(fl.vertices[v]));
      std::sort(keys.begin(), keys.end());
      auto& cell = cells[keys];
      cell.keys = keys;
      cell.dim = fl.face_dim[f];
      if (fl.face_dim[f] == top_dim && fl.faces[f].size() == fl.vertices.size()) {
        cell.tops.insert(cone.id);
        top_key_of_cone[cone.id] = keys;
      }
      faces_of_cone[cone.id].push_back(keys);
    }
  }

  // Deterministic ids: by (dim, keys).
  std::vector<const RawCell*> ordered;
  for (auto& [k, c] : cells) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(), [](const RawCell* a, const RawCell* b) {
    return std::tie(a->dim, a->keys) < std::tie(b->dim, b->keys);
  });
  std::map<std::vector<std::string>, int> cell_id;
  for (size_t i = 0; i < ordered.size(); ++i) cell_id[ordered[i]->keys] = static_cast<int>(i);

  for (size_t i = 0; i < ordered.size(); ++i) {
    Cell c;
    c.id = static_cast<int>(i);
    c.dim = ordered[i]->dim;
    c.vertex_keys = ordered[i]->keys;
    c.top_ids.assign(ordered[i]->tops.begin(), ordered[i]->tops.end());
    for (size_t j = 0; j < ordered.size(); ++j) {
      if (i == j || ordered[j]->dim >= ordered[i]->dim) continue;
      if (std::includes(ordered[i]->keys.begin(), ordered[i]->keys.end(),
                        ordered[j]->keys.begin(), ordered[j]->keys.end())) {
        c.faces.push_back(static_cast<int>(j));
      }
    }
    pc.cells.push_back(std::move(c));
  }
  pc.top_cells.assign(cs.cones.size(), -1);
  for (size_t k = 0; k < cs.cones.size(); ++k) {
    pc.top_cells[k] = cell_id.at(top_key_of_cone[k]);
  }

  // Euler characteristic of the whole complex.
  Int chi = 0;
  for (const auto& c : pc.cells) chi += (c.dim % 2 == 0) ? 1 : -1;
  pc.euler_characteristic = chi;

  // Pairwise intersections must be common faces.
  for (size_t i = 0; i < cs.cones.size() && pc.intersections_are_faces; ++i) {
    for (size_t j = i + 1; j < cs.cones.size(); ++j) {
      Mat A = cs.cones[i].image_rows;
      Vec b(A.size(), Rat(0));
      for (const auto& r : cs.cones[j].image_rows) {
        A.push_back(r);
        b.push_back(Rat(0));
      }
      Mat E = cs.cones[i].image_eqs;
      for (const auto& r : cs.cones[j].image_eqs) E.push_back(r);
      E.push_back(ones);
      Vec e(E.size(), Rat(0));
      e.back() = Rat(1);
      auto inter = lin::enumerate_vertices(A, b, E, e);
      if (inter.vertices.empty()) continue;
      std::vector<std::string> keys;
      for (const auto& v : inter.vertices) keys.push_back(point_key(v));
      std::sort(keys.begin(), keys.end());
      auto in_faces = [&](int cone_id) {
        for (auto& fk : faces_of_cone[cone_id]) {
          if (fk == keys) return true;
        }
        return false;
      };
      if (!in_faces(static_cast<int>(i)) || !in_faces(static_cast<int>(j))) {
        pc.intersections_are_faces = false;
        break;
      }
    }
  }

  // Dual graph and nerve of the top cells.
  const int K = static_cast<int>(cs.cones.size());
  auto pair_meets = [&](const std::vector<int>& group) {
    Mat A;
    Vec b;
    Mat E;
    for (int g : group) {
      for (const auto& r : cs.cones[g].image_rows) {
        A.push_back(r);
        b.push_back(Rat(0));
      }
      for (const auto& r : cs.cones[g].image_eqs) E.push_back(r);
    }
    E.push_back(ones);
    Vec e(E.size(), Rat(0));
    e.back() = Rat(1);
    Mat all = A;
    Vec allb = b;
    for (size_t i = 0; i < E.size(); ++i) {
      all.push_back(E[i]);
      allb.push_back(e[i]);
      all.push_back(lin::scale(E[i], Rat(-1)));
      allb.push_back(-e[i]);
    }
    return lin::feasible_point(all, allb).has_value();
  };

  std::vector<std::vector<int>> adj(K);
  for (int i = 0; i < K; ++i) {
    for (int j = i + 1; j < K; ++j) {
      if (pair_meets({i, j})) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::vector<char> reach(K, 0);
  std::vector<int> stack{0};
  reach[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int i = 0; i < K; ++i) pc.dual_graph_connected &= reach[i] == 1;

  // Nerve: grow simplices vertex by vertex.
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < K; ++i) {
    pc.dual_simplices.push_back({i});
    frontier.push_back({i});
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& s : frontier) {
      for (int j = s.back() + 1; j < K; ++j) {
        std::vector<int> s2 = s;
        s2.push_back(j);
        bool edges_ok = true;
        for (int v : s) {
          edges_ok &= std::find(adj[v].begin(), adj[v].end(), j) != adj[v].end();
        }
        if (!edges_ok) continue;
        if (!pair_meets(s2)) continue;
        pc.dual_simplices.push_back(s2);
        next.push_back(s2);
        if (pc.dual_simplices.size() > 200000) {
          return make_err(Err::ResourceLimit, "nerve is too large");
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(pc.dual_simplices.begin(), pc.dual_simplices.end());
  return pc;
}

std::string complex_to_json(const ConeSet& cs, const PolyComplex& pc) {
  nlohmann::json j;
  j["schema"] = "dtc.complex.v1";
  auto rows_json = [](const Mat& rows) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      auto row = nlohmann::json::array();
      for (const auto& v : r) row.push_back(v.str());
      arr.push_back(row);
    }
    return arr;
  };
  auto vertices = nlohmann::json::array();
  for (const auto& v : pc.vertices) {
    auto row = nlohmann::json::array();
    for (const auto& r : v) row.push_back(r.str());
    vertices.push_back(row);
  }
  j["vertices"] = vertices;

  std::map<std::string, int> vid;
  for (size_t i = 0; i < pc.vertices.size(); ++i) vid[point_key(pc.vertices[i])] = static_cast<int>(i);

  auto cells = nlohmann::json::array();
  for (const auto& c : pc.cells) {
    nlohmann::json cj;
    cj["id"] = c.id;
    cj["dim"] = c.dim;
    auto vs = nlohmann::json::array();
    for (const auto& k : c.vertex_keys) vs.push_back(vid.at(k));
    cj["vertices"] = vs;
    cj["faces"] = c.faces;
    // H-representation through the smallest top cone containing the cell.
    int top = c.top_ids.empty() ? -1 : c.top_ids.front();
    if (top < 0) {
      for (size_t k = 0; k < pc.top_cells.size(); ++k) {
        const auto& tk = pc.cells[pc.top_cells[k]].vertex_keys;
        if (std::includes(tk.begin(), tk.end(), c.vertex_keys.begin(), c.vertex_keys.end())) {
          top = static_cast<int>(k);
          break;
        }
      }
    }
    if (top >= 0) {
      const auto& cone = cs.cones[top];
      cj["ineqs"] = rows_json(cone.image_rows);
      Mat eqs = cone.image_eqs;
      for (const auto& r : cone.image_rows) {
        bool tight = true;
        for (const auto& key : c.vertex_keys) {
          // Vertex lookup by key.
          const Vec& v = pc.vertices[static_cast<size_t>(vid.at(key))];
          tight &= lin::dot(r, v).is_zero();
        }
        if (tight) eqs.push_back(r);
      }
      cj["eqs"] = rows_json(eqs);
      cj["cone"] = top;
    }
    cells.push_back(cj);
  }
  j["cells"] = cells;
  j["top_cells"] = pc.top_cells;
  j["euler"] = pc.euler_characteristic;
  auto nerve = nlohmann::json::array();
  for (const auto& s : pc.dual_simplices) nerve.push_back(s);
  j["dual_complex"] = nerve;
  j["dual_graph_connected"] = pc.dual_graph_connected;
  return j.dump();
}

std::string complex_to_poset_csv(const PolyComplex& pc) {
  std::ostringstream os;
  os << "face_id,face_dim,cell_id,cell_dim\n";
  for (const auto& c : pc.cells) {
    for (int f : c.faces) {
      if (pc.cells[f].dim == c.dim - 1) {
        os << f << "," << pc.cells[f].dim << "," << c.id << "," << c.dim << "\n";
      }
    }
  }
  return os.str();
}

PosetSkeleton poset_of(const PolyComplex& pc) {
  PosetSkeleton ps;
  for (const auto& c : pc.cells) {
    ps.dims.push_back(c.dim);
    auto f = c.faces;
    std::sort(f.begin(), f.end());
    ps.faces.push_back(f);
  }
  return ps;
}

Outcome<PosetSkeleton> poset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return make_err(Err::BadInput, "complex file is not valid JSON");
  if (!j.contains("schema") || j["schema"] != "dtc.complex.v1") {
    return make_err(Err::BadInput, "unknown complex schema (want dtc.complex.v1)");
  }
  PosetSkeleton ps;
  for (const auto& c : j["cells"]) {
    ps.dims.push_back(c["dim"].get<int>());
    std::vector<int> f;
    for (const auto& x : c["faces"]) f.push_back(x.get<int>());
    std::sort(f.begin(), f.end());
    ps.faces.push_back(f);
  }
  return ps;
}

}  // namespace dtc::cones
