#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtc/dt_vector.hpp"
#include "dtc/error.hpp"
#include "dtc/intersection.hpp"
#include "dtc/linalg.hpp"
#include "dtc/surface.hpp"

// Linearity regions of the intersection-number embedding and the polyhedral
// complex they cone over.
namespace dtc::cones {

enum class PantsRegion { Triangle, Dom0, Dom1, Dom2 };

// Active linear piece of max{|X|, m13, m24}: the two branches of the
// absolute value or one of the flat levels.
enum class Branch { AbsNeg, AbsPos, Flat13, Flat24 };

struct CurveStrata {
  Branch bp = Branch::AbsPos;   // branch of the dual count
  Branch bpp = Branch::AbsPos;  // branch of the twisted dual count
  bool prime_ge = true;         // n' >= n'' on this cone
};

struct SignVector {
  std::vector<PantsRegion> pants;
  std::vector<CurveStrata> curves;
};

struct Cone {
  int id = -1;
  SignVector signs;
  lin::Mat domain_rows;  // region { x : g.x >= 0 } in (n | t) coordinates
  lin::Mat map;          // (9g-9) x (6g-6), the embedding on this region
  lin::Mat image_rows;   // inequalities of the image cone
  lin::Mat image_eqs;    // equations cutting out the image's linear span
  std::vector<TwistSign> twist_signs() const;
};

struct ConeSet {
  CoordinateDatum datum;
  std::vector<Cone> cones;
};

ConeSet enumerate_cones(const CoordinateDatum& datum);

// All cones whose closed region contains the vector; the twist representative
// at n_i = 0 entries is matched up to the sign identification.
std::vector<int> locate(const ConeSet& cs, const RealDTVector& v);
std::vector<int> locate(const ConeSet& cs, const DTVector& v);

// All cones whose image contains the given 9g-9 point.
std::vector<int> locate_image(const ConeSet& cs, const std::vector<Rat>& w);
Outcome<std::vector<int>> locate_image(const ConeSet& cs, const IntersectionVector& w);

bool real_membership(const ConeSet& cs, const std::vector<Rat>& w);

std::vector<Rat> to_image_point(const IntersectionVector& w);
std::vector<Rat> domain_point(const RealDTVector& v);

// Extreme points of the projectivized region (slice by a functional positive
// on the cone), used to sample points of the region exactly.
lin::Mat domain_slice_vertices(const Cone& cone);

struct Cell {
  int id = -1;
  int dim = 0;
  std::vector<std::string> vertex_keys;  // sorted canonical vertex coordinates
  std::vector<int> faces;                // ids of proper subfaces
  std::vector<int> top_ids;              // cone ids whose cell this is (top cells)
};

struct PolyComplex {
  lin::Mat vertices;  // all vertices of the projectivized complex
  std::vector<Cell> cells;
  std::vector<int> top_cells;  // ids into cells, one per cone
  bool intersections_are_faces = true;
  Int euler_characteristic = 0;
  bool dual_graph_connected = true;
  std::vector<std::vector<int>> dual_simplices;  // nerve of the top cells
};

Outcome<PolyComplex> build_complex(const ConeSet& cs, bool allow_large);

std::string complex_to_json(const ConeSet& cs, const PolyComplex& pc);
std::string complex_to_poset_csv(const PolyComplex& pc);

// Parses the JSON export back into (dim, faces) skeleton for round-trips.
struct PosetSkeleton {
  std::vector<int> dims;
  std::vector<std::vector<int>> faces;
  friend bool operator==(const PosetSkeleton&, const PosetSkeleton&) = default;
};
Outcome<PosetSkeleton> poset_from_json(const std::string& text);
PosetSkeleton poset_of(const PolyComplex& pc);

}  // namespace dtc::cones
