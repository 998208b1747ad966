#include "dtc/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace dtc::oracle {

namespace {

Int fdiv(Int a, Int b) {  // floor division, b > 0
  Int q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}

// Multiples of p strictly inside the open interval spanned by lo and hi;
// callers guarantee the endpoints are never multiples.
Int multiples_inside(Int lo, Int hi, Int p) {
  if (lo > hi) std::swap(lo, hi);
  return fdiv(hi, p) - fdiv(lo, p);
}

}  // namespace

// All positions quadrupled so everything is an integer: marked points at
// 4k+2, dual-curve arc feet at 4L-1, period 4n.
Int chord_crossings(const ChordModel& m) {
  DTC_CHECK(m.n > 0, "chord model needs n > 0");
  const Int p = 4 * m.n;
  const Int f0 = 4 * m.lminus - 1;
  const Int f1 = 4 * m.lplus - 1 + 4 * m.front_winding * m.n;
  Int total = 0;
  for (Int k = 0; k < m.n; ++k) {
    const Int x0 = 4 * k + 2;
    const Int x1 = x0 + 4 * m.T;
    total = checked_add(total, multiples_inside(x0, x1, p));  // back arc lifts
    // Front arc vs lifts of chord k: the horizontal gap changes sign.
    Int span = std::max(std::max(x0, x1), std::max(f0, f1)) -
               std::min(std::min(x0, x1), std::min(f0, f1));
    Int jmax = span / p + 2;
    for (Int j = -jmax; j <= jmax; ++j) {
      Int d0 = x0 + j * p - f0;
      Int d1 = x1 + j * p - f1;
      DTC_CHECK(d0 != 0 && d1 != 0, "degenerate incidence in chord model");
      if ((d0 < 0) != (d1 < 0)) ++total;
    }
  }
  return total;
}

Int chord_crossings_direct(const ChordModel& m) {
  DTC_CHECK(m.n > 0, "chord model needs n > 0");
  const Int p = 4 * m.n;
  const Int f0 = 4 * m.lminus - 1;
  const Int f1 = 4 * m.lplus - 1 + 4 * m.front_winding * m.n;
  // Back arc: the chord family drifts T marked points per pass, sweeping the
  // seam exactly |T| times in total.
  Int total = m.T >= 0 ? m.T : -m.T;
  // Front arc: lift j of chord k crosses it iff j*p lies strictly between
  // f0 - x0 and f1 - x1.
  for (Int k = 0; k < m.n; ++k) {
    const Int a = f0 - (4 * k + 2);
    const Int b = f1 - (4 * k + 2) - 4 * m.T;
    total = checked_add(total, multiples_inside(a, b, p));
  }
  return total;
}

Int presentation_count(Int n, const DualNeighbors& b) {
  return (1 + (n - b.n1 - b.n4) / 2) * (1 + (n - b.n2 - b.n3) / 2);
}

namespace {

Outcome<std::monostate> check_reduced_inputs(Int n, const DualNeighbors& b) {
  for (Int v : {n, b.n1, b.n2, b.n3, b.n4}) {
    if (v < 0) return make_err(Err::PreconditionViolated, "negative count");
  }
  if ((n + b.n1 + b.n4) % 2 != 0 || (n + b.n2 + b.n3) % 2 != 0) {
    return make_err(Err::PreconditionViolated, "pants parity fails");
  }
  if (n < b.n1 + b.n4 || n < b.n2 + b.n3) {
    return make_err(Err::PreconditionViolated, "reduced regime needs n >= n1+n4 and n >= n2+n3");
  }
  return std::monostate{};
}

}  // namespace

Outcome<Int> two_pants_reduced_winding(Int n, Int t, const DualNeighbors& b, Int winding) {
  auto pre = check_reduced_inputs(n, b);
  if (!pre.ok()) return pre.error();
  if (n == 0) {
    // t parallel copies of the pants curve, each meeting the dual curve twice.
    return 2 * (t >= 0 ? t : -t);
  }
  const Int x1max = (n - b.n1 - b.n4) / 2;
  const Int x3max = (n - b.n2 - b.n3) / 2;
  std::optional<Int> best;
  Int visited = 0;
  for (Int x1 = 0; x1 <= x1max; ++x1) {
    for (Int x3 = 0; x3 <= x3max; ++x3) {
      Int x2 = x3max - x3;
      ChordModel cm;
      cm.n = n;
      cm.T = t + x1 + x3;
      cm.lplus = b.n1 + 2 * x1;
      cm.lminus = b.n2 + 2 * x2;
      cm.front_winding = winding;
      Int c = chord_crossings(cm);
      if (!best || c < *best) best = c;
      ++visited;
    }
  }
  DTC_CHECK(visited == presentation_count(n, b), "presentation enumeration miscount");
  return *best;
}

Outcome<Int> two_pants_reduced(Int n, Int t, const DualNeighbors& b) {
  return two_pants_reduced_winding(n, t, b, 0);
}

Outcome<ReducedCertificate> two_pants_reduced_certified(Int n, Int t, const DualNeighbors& b) {
  auto pre = check_reduced_inputs(n, b);
  if (!pre.ok()) return pre.error();
  ReducedCertificate cert;
  if (n == 0) {
    cert.minimum = 2 * (t >= 0 ? t : -t);
    cert.bigon_free_exists = true;
    return cert;
  }
  const Int x1max = (n - b.n1 - b.n4) / 2;
  const Int x3max = (n - b.n2 - b.n3) / 2;
  std::optional<Int> best;
  std::vector<std::pair<Int, bool>> runs;  // (count, bigon-free)
  for (Int x1 = 0; x1 <= x1max; ++x1) {
    for (Int x3 = 0; x3 <= x3max; ++x3) {
      Int x2 = x3max - x3;
      Int x4 = x1max - x1;
      Int T = t + x1 + x3;
      Int delta = (b.n1 + 2 * x1) - (b.n2 + 2 * x2);
      bool bigon = false;
      if (T > 0 && delta > T) bigon = x1 > 0 || x3 > 0;
      if (T < 0 && delta < T) bigon = x4 > 0 || x2 > 0;
      ChordModel cm{n, T, b.n1 + 2 * x1, b.n2 + 2 * x2, 0};
      Int c = chord_crossings(cm);
      if (!best || c < *best) best = c;
      runs.push_back({c, !bigon});
    }
  }
  cert.minimum = *best;
  for (auto& [c, free] : runs) {
    if (!free) continue;
    cert.bigon_free_exists = true;
    if (c != cert.minimum) cert.bigon_free_all_minimal = false;
  }
  return cert;
}

namespace {

// Arcs joining boundaries i and j of a pants with counts (ci, cj, ck).
Int pants_beta(Int ci, Int cj, Int ck) {
  Int v = std::min((ci + cj - ck) / 2, std::min(ci, cj));
  return std::max<Int>(v, 0);
}

}  // namespace

Outcome<Int> two_pants_general(Int n, Int t, const DualNeighbors& b) {
  for (Int v : {n, b.n1, b.n2, b.n3, b.n4}) {
    if (v < 0) return make_err(Err::PreconditionViolated, "negative count");
  }
  if ((n + b.n1 + b.n4) % 2 != 0 || (n + b.n2 + b.n3) % 2 != 0) {
    return make_err(Err::PreconditionViolated, "pants parity fails");
  }
  // Arcs that dodge the annulus entirely: one crossing per neighbor-to-
  // neighbor arc, two per arc wrapping the curve from a neighbor slot.
  Int d14 = pants_beta(b.n1, b.n4, n);
  Int d23 = pants_beta(b.n2, b.n3, n);
  Int u1 = std::max<Int>((b.n1 - b.n4 - n) / 2, 0);
  Int u4 = std::max<Int>((b.n4 - b.n1 - n) / 2, 0);
  Int u2 = std::max<Int>((b.n2 - b.n3 - n) / 2, 0);
  Int u3 = std::max<Int>((b.n3 - b.n2 - n) / 2, 0);
  DualNeighbors res{pants_beta(b.n1, n, b.n4), pants_beta(b.n2, n, b.n3),
                    pants_beta(b.n3, n, b.n2), pants_beta(b.n4, n, b.n1)};
  auto core = two_pants_reduced(n, t, res);
  if (!core.ok()) return core.error();
  return core.value() + d14 + d23 + 2 * (u1 + u2 + u3 + u4);
}

// ---------------------------------------------------------------------------
// Folded-curve referee. The one-holed torus is the flat torus
// (R/nZ) x (R/Z) minus the square D = [3/16,5/16] x [11/16,13/16]; the pants
// curve runs along y = 1/4, its dual curve is the vertical circle x = 0. The
// multiarc with data (n, t, n1) is drawn explicitly: chords of drift t in the
// band y in [0,1/2], vertical through arcs, arcs from D to the two gluing
// circles, and wrapping arcs just above D. Crossings with x = 0 are counted
// after exhaustive bigon elimination, which makes the count independent of
// the drawing choices within the isotopy class.
// ---------------------------------------------------------------------------

namespace {

struct Pt {
  Rat x, y;
};

using Poly = std::vector<Pt>;

Rat mod_period(const Rat& v, Int period) {
  Rat p(period);
  BigInt q = (v / p).floor();
  Rat r = v - p * Rat(q);
  DTC_CHECK(r >= Rat(0) && r < p, "mod_period out of range");
  return r;
}

// Exact winding number of a closed polygon (implicit closure) around c.
int winding_number(const Poly& poly, const Pt& c) {
  int w = 0;
  auto side = [](const Pt& a, const Pt& b, const Pt& p) {
    return ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)).sign();
  };
  for (size_t i = 0; i < poly.size(); ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % poly.size()];
    if (a.y <= c.y) {
      if (b.y > c.y && side(a, b, c) > 0) ++w;
    } else {
      if (b.y <= c.y && side(a, b, c) < 0) --w;
    }
  }
  return w;
}

struct Crossing {
  Rat ystar_mod;  // position along the dual curve, in [0,1)
  Pt raw;         // point in the component's lifted frame
  int comp = -1;
  int order = -1;  // index among the component's crossings, walk order
  int sign = 0;
  bool alive = true;
};

struct Component {
  Poly pts;  // lifted polyline; closed components do not repeat the start
  bool closed = false;
  Rat period_x{0}, period_y{0};  // lift displacement of one loop (closed only)
  std::vector<int> crossing_ids;     // walk order
  std::vector<int> crossing_vertex;  // segment index per crossing, walk order
};

struct FlatModel {
  Int n = 0;
  Int n1 = 0;
  std::vector<Poly> pieces;
  std::vector<Component> comps;
  std::vector<Crossing> crossings;

  static Rat dx() { return Rat(1, 4); }
  static Rat dy() { return Rat(3, 4); }
  static Rat dleft() { return Rat(3, 16); }
  static Rat dright() { return Rat(5, 16); }
  static Rat dbot() { return Rat(11, 16); }
  static Rat dtop() { return Rat(13, 16); }

  void build(Int t);
  void assemble();
  void extract_crossings();
  Int eliminate_and_count(Int* removed, bool* same_sign);
  bool check_embedded() const;
  Int segment_count() const;
};

void FlatModel::build(Int t) {
  const Int beta = std::min<Int>(n1 / 2, n);
  const Int u = std::max<Int>(n1 / 2 - n, 0);

  // Annulus chords, bottom circle y=0 to top circle y=1/2, drift t.
  for (Int k = 0; k < n; ++k) {
    pieces.push_back({{Rat(2 * k + 1, 2), Rat(0)}, {Rat(2 * (k + t) + 1, 2), Rat(1, 2)}});
  }
  // Vertical through arcs on the columns not attached to D.
  for (Int k = beta; k < n; ++k) {
    pieces.push_back({{Rat(2 * k + 1, 2), Rat(1, 2)}, {Rat(2 * k + 1, 2), Rat(1)}});
  }
  // Arcs from D down to the top circle: lanes rise with i, targets march
  // right with i, which keeps the fan embedded.
  for (Int i = 0; i < beta; ++i) {
    Rat sx = dleft() + Rat(2 * (i + 1), 16 * (beta + 1));
    Rat lane = Rat(1, 2) + Rat(3 * (i + 1), 16 * (beta + 1));
    Rat tx = Rat(2 * i + 1, 2);
    pieces.push_back({{sx, dbot()}, {sx, lane}, {tx, lane}, {tx, Rat(1, 2)}});
  }
  // Arcs from D up through y=1 to the bottom circle: mirrored fan.
  for (Int i = 0; i < beta; ++i) {
    Rat sx = dleft() + Rat(2 * (i + 1), 16 * (beta + 1));
    Rat lane = Rat(1) - Rat(3 * (i + 1), 32 * (beta + 1));
    Rat tx = Rat(2 * i + 1, 2);
    pieces.push_back({{sx, dtop()}, {sx, lane}, {tx, lane}, {tx, Rat(1)}});
  }
  // Wrapping arcs in the band (13/16, 29/32) just above D; they clear the
  // vertical fans because their runs avoid D's column.
  for (Int i = 0; i < u; ++i) {
    Rat ys = dy() + Rat(i + 1, 16 * (u + 1));
    Rat wl = Rat(13, 16) + Rat(3 * (i + 1), 32 * (u + 1));
    Rat xa = dright() + Rat(u + 1 - i, 32 * (u + 1));
    Rat xb = Rat(n) + dleft() - (xa - dright());
    pieces.push_back(
        {{dright(), ys}, {xa, ys}, {xa, wl}, {xb, wl}, {xb, ys}, {Rat(n) + dleft(), ys}});
  }
}

void FlatModel::assemble() {
  struct End {
    int piece;
    bool front;
  };
  auto canon = [&](const Pt& p) {
    return std::pair<std::string, std::string>(mod_period(p.x, n).str(),
                                               mod_period(p.y, 1).str());
  };
  auto on_square = [&](const Pt& p) {
    Rat mx = mod_period(p.x, n), my = mod_period(p.y, 1);
    if (my == dbot() || my == dtop()) return mx >= dleft() && mx <= dright();
    if (mx == dleft() || mx == dright()) return my >= dbot() && my <= dtop();
    return false;
  };

  std::map<std::pair<std::string, std::string>, std::vector<End>> at;
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    if (!on_square(pieces[i].front())) at[canon(pieces[i].front())].push_back({i, true});
    if (!on_square(pieces[i].back())) at[canon(pieces[i].back())].push_back({i, false});
  }
  for (auto& [k, v] : at) DTC_CHECK(v.size() == 2, "marked point with degree != 2");

  std::vector<char> used(pieces.size(), 0);
  auto extend = [&](Component& comp, int piece, bool reversed) {
    Poly pts = pieces[piece];
    if (reversed) std::reverse(pts.begin(), pts.end());
    if (comp.pts.empty()) {
      comp.pts = pts;
      return;
    }
    Pt cur = comp.pts.back();
    Rat offx = cur.x - pts.front().x;
    Rat offy = cur.y - pts.front().y;
    for (size_t i = 1; i < pts.size(); ++i) {
      comp.pts.push_back({pts[i].x + offx, pts[i].y + offy});
    }
  };
  auto walk = [&](int start_piece, bool reversed0) {
    Component comp;
    int piece = start_piece;
    bool reversed = reversed0;
    while (true) {
      used[piece] = 1;
      extend(comp, piece, reversed);
      const bool tail_is_front = reversed;
      Pt tail_raw = tail_is_front ? pieces[piece].front() : pieces[piece].back();
      if (on_square(tail_raw)) break;
      auto& ends = at[canon(tail_raw)];
      DTC_CHECK(ends.size() == 2, "junction degree");
      End next =
          (ends[0].piece == piece && ends[0].front == tail_is_front) ? ends[1] : ends[0];
      if (used[next.piece]) {
        comp.closed = true;
        comp.period_x = comp.pts.back().x - comp.pts.front().x;
        comp.period_y = comp.pts.back().y - comp.pts.front().y;
        comp.pts.pop_back();
        break;
      }
      piece = next.piece;
      reversed = !next.front;
    }
    comps.push_back(std::move(comp));
  };

  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    if (used[i]) continue;
    bool fs = on_square(pieces[i].front());
    bool bs = on_square(pieces[i].back());
    if (fs || bs) walk(i, !fs);
  }
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    if (!used[i]) walk(i, false);
  }
}

void FlatModel::extract_crossings() {
  for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
    Component& comp = comps[ci];
    size_t nseg = comp.closed ? comp.pts.size() : comp.pts.size() - 1;
    for (size_t s = 0; s < nseg; ++s) {
      Pt a = comp.pts[s];
      Pt b = (s + 1 < comp.pts.size())
                 ? comp.pts[s + 1]
                 : Pt{comp.pts[0].x + comp.period_x, comp.pts[0].y + comp.period_y};
      if (a.x == b.x) continue;
      Rat lo = dtc::min(a.x, b.x), hi = dtc::max(a.x, b.x);
      std::vector<Crossing> here;
      for (BigInt j = (lo / Rat(n)).floor() + 1; Rat(j) * Rat(n) < hi; ++j) {
        Rat xc = Rat(j) * Rat(n);
        if (xc <= lo) continue;
        DTC_CHECK(xc != a.x && xc != b.x, "crossing at a vertex");
        Rat yc = a.y + (b.y - a.y) * (xc - a.x) / (b.x - a.x);
        Crossing cr;
        cr.ystar_mod = mod_period(yc, 1);
        cr.raw = {xc, yc};
        cr.comp = ci;
        cr.sign = b.x > a.x ? 1 : -1;
        here.push_back(cr);
      }
      // Order along the walk direction of the segment.
      std::sort(here.begin(), here.end(), [&](const Crossing& p, const Crossing& q) {
        return (b.x > a.x) ? p.raw.x < q.raw.x : p.raw.x > q.raw.x;
      });
      for (auto& cr : here) {
        crossings.push_back(cr);
        comp.crossing_vertex.push_back(static_cast<int>(s));
      }
    }
  }
  std::vector<int> counts(comps.size(), 0);
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    crossings[i].order = counts[crossings[i].comp]++;
    comps[crossings[i].comp].crossing_ids.push_back(i);
  }
  for (size_t i = 0; i < crossings.size(); ++i) {
    for (size_t j = i + 1; j < crossings.size(); ++j) {
      DTC_CHECK(crossings[i].ystar_mod != crossings[j].ystar_mod,
                "degenerate incidence on the dual curve");
    }
  }
}

Int FlatModel::segment_count() const {
  Int s = 0;
  for (const auto& p : pieces) s += static_cast<Int>(p.size()) - 1;
  return s;
}

bool FlatModel::check_embedded() const {
  struct Seg {
    Pt a, b;
  };
  std::vector<Seg> segs;
  for (const auto& piece : pieces) {
    for (size_t s = 0; s + 1 < piece.size(); ++s) segs.push_back({piece[s], piece[s + 1]});
  }
  auto side = [](const Pt& a, const Pt& b, const Pt& p) {
    return ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)).sign();
  };
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i; j < segs.size(); ++j) {
      for (Int sx = -2; sx <= 2; ++sx) {
        for (Int sy = -2; sy <= 2; ++sy) {
          if (i == j && sx == 0 && sy == 0) continue;
          Pt a2{segs[j].a.x + Rat(sx) * Rat(n), segs[j].a.y + Rat(sy)};
          Pt b2{segs[j].b.x + Rat(sx) * Rat(n), segs[j].b.y + Rat(sy)};
          int d1 = side(segs[i].a, segs[i].b, a2);
          int d2 = side(segs[i].a, segs[i].b, b2);
          int d3 = side(a2, b2, segs[i].a);
          int d4 = side(a2, b2, segs[i].b);
          if (d1 * d2 < 0 && d3 * d4 < 0) return false;  // proper interior crossing
        }
      }
    }
  }
  return true;
}

Int FlatModel::eliminate_and_count(Int* removed, bool* same_sign) {
  *removed = 0;
  *same_sign = true;
  for (size_t i = 1; i < crossings.size(); ++i) {
    if (crossings[i].sign != crossings[0].sign) *same_sign = false;
  }
  if (crossings.empty()) return 0;
  if (*same_sign) return static_cast<Int>(crossings.size());

  // Lifted path along the component from crossing a to crossing b, forward in
  // walk order, wrapping through the period for closed components.
  auto m_path = [&](int ca, int cb) {
    const Crossing& A = crossings[ca];
    const Crossing& B = crossings[cb];
    const Component& comp = comps[A.comp];
    const int nv = static_cast<int>(comp.pts.size());
    const bool wrapped =
        (B.order < A.order) || (B.order == A.order && comp.closed);  // full loop for a==b
    Poly path;
    path.push_back(A.raw);
    int va = comp.crossing_vertex[A.order];
    int vb = comp.crossing_vertex[B.order];
    if (!wrapped && va == vb) {
      path.push_back(B.raw);
      return path;
    }
    Rat offx(0), offy(0);
    int v = va;
    while (true) {
      int nxt = v + 1;
      if (nxt >= nv) {
        DTC_CHECK(comp.closed, "walked off an open component");
        nxt = 0;
        offx += comp.period_x;
        offy += comp.period_y;
      }
      path.push_back({comp.pts[nxt].x + offx, comp.pts[nxt].y + offy});
      v = nxt;
      bool reached = wrapped ? (offx == comp.period_x && offy == comp.period_y && v == vb)
                             : (v == vb);
      if (reached) break;
    }
    path.push_back({B.raw.x + offx, B.raw.y + offy});
    return path;
  };

  auto try_remove = [&]() -> bool {
    std::vector<int> vorder;
    for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
      if (crossings[i].alive) vorder.push_back(i);
    }
    if (vorder.size() < 2) return false;
    std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
      return crossings[a].ystar_mod < crossings[b].ystar_mod;
    });
    const int nv = static_cast<int>(vorder.size());
    for (int vi = 0; vi < nv; ++vi) {
      int q = vorder[vi];
      int p = vorder[(vi + 1) % nv];  // upward successor of q along the dual curve
      if (p == q || crossings[p].comp != crossings[q].comp) continue;
      const Component& comp = comps[crossings[p].comp];
      std::vector<int> alive_in_comp;
      for (int id : comp.crossing_ids) {
        if (crossings[id].alive) alive_in_comp.push_back(id);
      }
      const int m = static_cast<int>(alive_in_comp.size());
      auto pos = [&](int id) {
        return static_cast<int>(std::find(alive_in_comp.begin(), alive_in_comp.end(), id) -
                                alive_in_comp.begin());
      };
      const int ip = pos(p), iq = pos(q);
      bool p_then_q = comp.closed ? (ip + 1) % m == iq : ip + 1 == iq;
      bool q_then_p = comp.closed ? (iq + 1) % m == ip : iq + 1 == ip;
      if (!p_then_q && !q_then_p) continue;
      // The free side of the multicurve runs forward from a to b.
      int a = p_then_q ? p : q;
      int b = p_then_q ? q : p;
      Poly path = m_path(a, b);
      // Close along the dual curve: the free arc there runs q -> p upward.
      Rat dy = crossings[p].ystar_mod - crossings[q].ystar_mod;
      if (dy <= Rat(0)) dy += Rat(1);
      Rat vy = (b == p) ? dy : -dy;  // traversed from b back to a
      Rat total_dx = path.back().x - path.front().x;
      Rat total_dy = path.back().y + vy - path.front().y;
      if (total_dx != Rat(0) || total_dy != Rat(0)) continue;  // essential loop
      // Null-homologous: check winding about every lift of D's center.
      Rat lox = path[0].x, hix = path[0].x, loy = path[0].y, hiy = path[0].y;
      for (auto& pt : path) {
        lox = dtc::min(lox, pt.x);
        hix = dtc::max(hix, pt.x);
        loy = dtc::min(loy, pt.y);
        hiy = dtc::max(hiy, pt.y);
      }
      loy = dtc::min(loy, path.back().y + vy);
      hiy = dtc::max(hiy, path.back().y + vy);
      bool null = true;
      for (BigInt jx = ((lox - FlatModel::dx()) / Rat(n)).floor();
           null && Rat(jx) * Rat(n) + FlatModel::dx() <= hix; ++jx) {
        Rat cx = FlatModel::dx() + Rat(jx) * Rat(n);
        if (cx < lox) continue;
        for (BigInt jy = (loy - FlatModel::dy()).floor(); Rat(jy) + FlatModel::dy() <= hiy;
             ++jy) {
          Pt c{cx, FlatModel::dy() + Rat(jy)};
          if (c.y < loy) continue;
          if (winding_number(path, c) != 0) {
            null = false;
            break;
          }
        }
      }
      if (!null) continue;
      crossings[p].alive = false;
      crossings[q].alive = false;
      return true;
    }
    return false;
  };

  while (try_remove()) ++(*removed);

  Int c = 0;
  for (auto& cr : crossings) c += cr.alive ? 1 : 0;
  return c;
}

}  // namespace

Outcome<FlatModelStats> one_pants_stats(Int n, Int t, Int n1, bool check_embedded) {
  if (n < 0 || n1 < 0) return make_err(Err::PreconditionViolated, "negative count");
  if (n1 % 2 != 0) return make_err(Err::PreconditionViolated, "n1 must be even");
  FlatModelStats st;
  if (n == 0) {
    // |t| parallel copies of the curve plus n1/2 wrapping arcs; all crossings
    // with the dual curve share one orientation, so the count is minimal.
    st.raw_crossings = (t >= 0 ? t : -t) + n1 / 2;
    st.final_crossings = st.raw_crossings;
    st.same_sign_certificate = true;
    return st;
  }
  FlatModel fm;
  fm.n = n;
  fm.n1 = n1;
  fm.build(t);
  fm.assemble();
  fm.extract_crossings();
  st.segment_count = fm.segment_count();
  if (check_embedded) st.embedded = fm.check_embedded();
  st.raw_crossings = static_cast<Int>(fm.crossings.size());
  Int removed = 0;
  bool same_sign = false;
  st.final_crossings = fm.eliminate_and_count(&removed, &same_sign);
  st.removed_bigons = removed;
  st.same_sign_certificate = same_sign;
  return st;
}

Outcome<Int> one_pants(Int n, Int t, Int n1) {
  auto st = one_pants_stats(n, t, n1, false);
  if (!st.ok()) return st.error();
  return st.value().final_crossings;
}

}  // namespace dtc::oracle
