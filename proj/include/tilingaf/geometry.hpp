#pragma once

#include <optional>
#include <vector>

#include "tilingaf/certify.hpp"
#include "tilingaf/cyclotomic.hpp"

namespace tilingaf {

// A planar point is a field element under the embedding C ~ R^2.
using Point = FieldElement;

// conj(u) * v; its real part is the dot product u.v, its imaginary part the
// cross product u x v.
Point herm(const Point& u, const Point& v);
int sign_dot(const Point& u, const Point& v);
int sign_cross(const Point& u, const Point& v);
// |u|^2 as an exact real field element.
FieldElement norm2(const Point& u);
// (x + conj x)/2, the real part as a field element.
FieldElement re_elt(const FieldElement& x);

// Orientation of c against the directed line a->b: +1 left, -1 right, 0 on.
int orient(const Point& a, const Point& b, const Point& c);
bool on_segment_closed(const Point& p, const Point& a, const Point& b);

// Exact squared distance machinery.
FieldElement dist2_point_segment(const Point& p, const Point& a, const Point& b);
// compare |p-(segment)|^2 against rational r2: -1 below, 0 equal, +1 above
int cmp_dist2_segment(const Point& p, const Point& a, const Point& b, const Rational& r2);

// Isometries x -> zeta^rot * (refl ? conj(x) : x) + trans.
struct RigidMotion {
  int rot = 0;
  bool refl = false;
  Point trans;

  static RigidMotion identity(const CyclotomicField& F);
  static RigidMotion rotation(const CyclotomicField& F, int k);
  static RigidMotion reflection(const CyclotomicField& F, int axis_times_two);
  static RigidMotion translation(const Point& t);

  Point apply(const Point& x) const;
  RigidMotion then_after(const RigidMotion& inner) const;  // this o inner
  RigidMotion inverse() const;
  bool is_identity() const;
};

class Polygon {
 public:
  // Validates: >= 3 vertices, consecutive distinct, simple, positive area.
  // Reversed (clockwise) input is reoriented.
  static Polygon make(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return v_; }
  int size() const { return static_cast<int>(v_.size()); }
  const Point& vertex(int i) const { return v_[(i % size() + size()) % size()]; }

  // Exact shoelace area as a field element.  When 4 | n this is the area
  // itself; otherwise the area divided by sin(2*pi/n) (the true area is not
  // a field element then).  Every consumer is scale-invariant.
  FieldElement area_elt() const;

  // Max squared vertex distance (exact, real).
  FieldElement diameter2() const;

  Polygon translated(const Point& t) const;
  Polygon transformed(const RigidMotion& m) const;
  Polygon scaled(const FieldElement& s) const;  // s real, positive

  // Equality as an oriented cycle (cyclic rotation invariant).
  bool same_cycle(const Polygon& o) const;

  enum class Location { Outside, Boundary, Inside };
  Location locate(const Point& p) const;

  // A point strictly inside (exact construction).
  Point interior_point() const;

  bool convex() const;

  // Cached double enclosure of the vertex set (sort/filter accelerator).
  const DBox& box_re() const { return box_re_; }
  const DBox& box_im() const { return box_im_; }

 private:
  Polygon() = default;
  std::vector<Point> v_;
  DBox box_re_{0, 0}, box_im_{0, 0};
};

// Exact contact classification of two posed polygons (polygon + offset).
enum class Adjacency { Disjoint, PointTouch, EdgeAdjacent, InteriorOverlap };

struct SharedSegment {
  Point a, b;        // endpoints of a positive-length shared boundary piece
  int edge_a, edge_b;  // edge indices in the first / second polygon
};

struct Contact {
  Adjacency kind = Adjacency::Disjoint;
  std::vector<SharedSegment> segments;  // nonempty iff EdgeAdjacent
  std::vector<Point> touch_points;      // isolated contact points
};

Contact classify_contact(const Polygon& A, const Point& offA, const Polygon& B, const Point& offB);
Adjacency adjacency_kind(const Polygon& A, const Point& offA, const Polygon& B, const Point& offB);

// Is the posed polygon inner entirely inside the posed polygon outer?
bool polygon_inside(const Polygon& inner, const Point& off_inner, const Polygon& outer,
                    const Point& off_outer);

// Does the posed polygon touch the boundary of `outer` (assuming inner is
// inside outer)?  Exact segment tests against outer's edges.
bool touches_boundary(const Polygon& inner, const Point& off_inner, const Polygon& outer,
                      const Point& off_outer);

// ---- exact angular sectors ------------------------------------------------

// Nonzero field vector treated as a direction (positive scaling ignored).
struct Direction {
  Point d;
};

bool direction_equal(const Direction& a, const Direction& b);
// Strict total order by angle in [0, 2*pi).
bool angle_less(const Direction& a, const Direction& b);

// Open circular arc from `from` counterclockwise to `to` (proper: the two
// bounding directions are distinct).
struct Arc {
  Direction from, to;
};

bool in_open_arc(const Direction& d, const Arc& arc);
// Some direction strictly inside the arc.
Direction arc_interior_dir(const Arc& arc);
bool arcs_intersect(const Arc& a, const Arc& b);

// The interior cone of a posed polygon at a boundary point y.
Arc sector_at_boundary_point(const Polygon& P, const Point& off, const Point& y);

}  // namespace tilingaf
