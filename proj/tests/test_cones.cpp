#include <doctest.h>

#include "dtc/cones.hpp"
#include "dtc/rng.hpp"
#include "dtc/surface.hpp"

using namespace dtc;

namespace {

const cones::ConeSet& chain2_cones() {
  static cones::ConeSet cs = [] {
    auto d = generate_standard_datum(2, DatumStyle::Chain);
    REQUIRE(d.ok());
    return cones::enumerate_cones(d.value());
  }();
  return cs;
}

RealDTVector random_real_vector(Rng& rng, int nc, bool allow_zero_n) {
  RealDTVector v;
  for (int c = 0; c < nc; ++c) {
    Int num = static_cast<Int>(rng.below(41));
    if (!allow_zero_n && num == 0) num = 7;
    Int den = 1 + static_cast<Int>(rng.below(4));
    v.n.push_back(Rat(num, den));
    Int tnum = static_cast<Int>(rng.below(81)) - 40;
    if (v.n.back().is_zero() && tnum < 0) tnum = -tnum;
    v.t.push_back(Rat(tnum, 1 + static_cast<Int>(rng.below(4))));
  }
  return v;
}

}  // namespace

TEST_CASE("genus-2 chain cone census is stable") {
  const auto& cs = chain2_cones();
  // Regression constant, computed once by the exhaustive enumeration.
  CHECK(cs.cones.size() == 208);
  for (const auto& cone : cs.cones) {
    CHECK(lin::cone_full_dim(cone.domain_rows));
    CHECK(cone.map.size() == 9);
    CHECK(cone.image_eqs.size() >= 3);
  }
}

TEST_CASE("every sampled vector lies in some cone, and the maps agree there") {
  const auto& cs = chain2_cones();
  Rng rng(0x5eed0001);
  for (int trial = 0; trial < 300; ++trial) {
    RealDTVector v = random_real_vector(rng, 3, true);
    auto ids = cones::locate(cs, v);
    REQUIRE_MESSAGE(!ids.empty(), "uncovered vector in trial ", trial);
    auto w = embed_real(cs.datum, v);
    std::vector<Rat> wy;
    for (auto& r : w.n) wy.push_back(r);
    for (auto& r : w.nprime) wy.push_back(r);
    for (auto& r : w.ndprime) wy.push_back(r);
    // The point must satisfy each containing cone's image description.
    auto img = cones::locate_image(cs, wy);
    CHECK_FALSE(img.empty());
  }
}

TEST_CASE("cone regions map linearly onto the embedding") {
  const auto& cs = chain2_cones();
  Rng rng(0x5eed0002);
  int cones_checked = 0;
  for (const auto& cone : cs.cones) {
    if (cone.id % 10 != 0) continue;  // sample of cones; the acceptance run does all
    auto verts = cones::domain_slice_vertices(cone);
    REQUIRE_FALSE(verts.empty());
    ++cones_checked;
    for (int s = 0; s < 20; ++s) {
      // Random rational convex combination of the slice vertices.
      std::vector<Rat> lambda;
      Rat total(0);
      for (size_t i = 0; i < verts.size(); ++i) {
        Rat l(static_cast<Int>(rng.below(5)), 1);
        lambda.push_back(l);
        total += l;
      }
      if (total.is_zero()) continue;
      lin::Vec x(verts[0].size(), Rat(0));
      for (size_t i = 0; i < verts.size(); ++i) {
        x = lin::add(x, lin::scale(verts[i], lambda[i] / total));
      }
      RealDTVector v;
      for (int c = 0; c < 3; ++c) v.n.push_back(x[c]);
      for (int c = 0; c < 3; ++c) v.t.push_back(x[3 + c]);
      auto w = embed_real(cs.datum, v);
      auto lw = lin::matvec(cone.map, x);
      for (int c = 0; c < 3; ++c) {
        CHECK(w.n[c] == lw[c]);
        CHECK(w.nprime[c] == lw[3 + c]);
        CHECK(w.ndprime[c] == lw[6 + c]);
      }
    }
  }
  CHECK(cones_checked > 0);
}

TEST_CASE("zero vector sits in every cone, generic points in exactly one") {
  const auto& cs = chain2_cones();
  RealDTVector zero{{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
  CHECK(cones::locate(cs, zero).size() == cs.cones.size());

  // Strict triangle inequalities everywhere and twists in general position.
  RealDTVector gen{{Rat(4), Rat(5), Rat(6)}, {Rat(1, 3), Rat(17, 5), Rat(-23, 7)}};
  CHECK(cones::locate(cs, gen).size() == 1);
}

TEST_CASE("twist-sign neighbors meet along the tie locus") {
  const auto& cs = chain2_cones();
  int pairs = 0;
  for (const auto& a : cs.cones) {
    for (const auto& b : cs.cones) {
      if (a.id >= b.id) continue;
      if (a.signs.pants != b.signs.pants) continue;
      int diff = -1;
      bool only_twist = true;
      for (size_t c = 0; c < a.signs.curves.size(); ++c) {
        const auto& x = a.signs.curves[c];
        const auto& y = b.signs.curves[c];
        bool same_branch = x.bp == y.bp && x.bpp == y.bpp;
        if (same_branch && x.prime_ge == y.prime_ge) continue;
        if (same_branch && diff < 0) {
          diff = static_cast<int>(c);
        } else {
          only_twist = false;
          break;
        }
      }
      if (!only_twist || diff < 0) continue;
      ++pairs;
      // On the common region the two dual counts of the flipped curve tie.
      lin::Mat rows = a.domain_rows;
      for (const auto& r : b.domain_rows) rows.push_back(r);
      lin::Vec tie = lin::sub(a.map[3 + diff], a.map[6 + diff]);
      lin::Mat sys = rows;
      lin::Vec rhs(sys.size(), Rat(0));
      sys.push_back(tie);
      rhs.push_back(Rat(1));
      CHECK_FALSE(lin::feasible_point(sys, rhs).has_value());
      sys.back() = lin::scale(tie, Rat(-1));
      CHECK_FALSE(lin::feasible_point(sys, rhs).has_value());
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("image membership matches the exact inversion test") {
  const auto& cs = chain2_cones();
  Rng rng(0x5eed0003);
  for (int trial = 0; trial < 200; ++trial) {
    DTVector v;
    Int parity = 0;
    for (int c = 0; c < 3; ++c) {
      v.n.push_back(static_cast<Int>(rng.below(5)));
      parity += v.n.back();
    }
    if (parity % 2 != 0) v.n[0] += 1;
    for (int c = 0; c < 3; ++c) {
      Int t = static_cast<Int>(rng.below(9)) - 4;
      if (v.n[c] == 0 && t < 0) t = -t;
      v.t.push_back(t);
    }
    auto w = embed(cs.datum, v);
    REQUIRE(w.ok());
    CHECK(membership(cs.datum, w.value()));
    CHECK(cones::real_membership(cs, cones::to_image_point(w.value())));
  }
}
