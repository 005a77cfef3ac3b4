#include "tilingaf/geometry.hpp"

#include <algorithm>

#include "tilingaf/errors.hpp"

namespace tilingaf {

Point herm(const Point& u, const Point& v) { return u.conj() * v; }

int sign_dot(const Point& u, const Point& v) { return sign_re(herm(u, v)); }
int sign_cross(const Point& u, const Point& v) { return sign_im(herm(u, v)); }

FieldElement norm2(const Point& u) { return u.conj() * u; }

FieldElement re_elt(const FieldElement& x) { return (x + x.conj()) / Rational(2); }

int orient(const Point& a, const Point& b, const Point& c) {
  return sign_cross(b - a, c - a);
}

bool on_segment_closed(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  if (p == a || p == b) return true;
  return sign_dot(p - a, b - a) > 0 && sign_dot(p - b, a - b) > 0;
}

FieldElement dist2_point_segment(const Point& p, const Point& a, const Point& b) {
  Point u = b - a, w = p - a;
  FieldElement duw = re_elt(herm(u, w));
  if (sign_real(duw) <= 0) return norm2(w);
  FieldElement l2 = norm2(u);
  if (sign_real(duw - l2) >= 0) return norm2(p - b);
  return norm2(w) - duw * duw / l2;
}

int cmp_dist2_segment(const Point& p, const Point& a, const Point& b, const Rational& r2) {
  FieldElement d2 = dist2_point_segment(p, a, b);
  return sign_real(d2 - d2.field().from_rational(r2));
}

// ---- rigid motions ---------------------------------------------------------

RigidMotion RigidMotion::identity(const CyclotomicField& F) {
  return RigidMotion{0, false, F.zero()};
}

RigidMotion RigidMotion::rotation(const CyclotomicField& F, int k) {
  int n = F.order();
  return RigidMotion{(k % n + n) % n, false, F.zero()};
}

RigidMotion RigidMotion::reflection(const CyclotomicField& F, int axis_times_two) {
  // Mirror line at angle axis_times_two * pi / n:  z -> zeta^k conj(z).
  int n = F.order();
  return RigidMotion{(axis_times_two % n + n) % n, true, F.zero()};
}

RigidMotion RigidMotion::translation(const Point& t) { return RigidMotion{0, false, t}; }

Point RigidMotion::apply(const Point& x) const {
  const CyclotomicField& F = trans.field();
  Point y = refl ? x.conj() : x;
  if (rot != 0) y = F.zeta_power(rot) * y;
  return y + trans;
}

RigidMotion RigidMotion::then_after(const RigidMotion& inner) const {
  const CyclotomicField& F = trans.field();
  int n = F.order();
  RigidMotion out;
  if (!refl) {
    out.rot = (rot + inner.rot) % n;
    out.refl = inner.refl;
    out.trans = F.zeta_power(rot) * inner.trans + trans;
  } else {
    out.rot = ((rot - inner.rot) % n + n) % n;
    out.refl = !inner.refl;
    out.trans = F.zeta_power(rot) * inner.trans.conj() + trans;
  }
  return out;
}

RigidMotion RigidMotion::inverse() const {
  const CyclotomicField& F = trans.field();
  int n = F.order();
  if (!refl) return RigidMotion{(n - rot) % n, false, -(F.zeta_power(-rot) * trans)};
  return RigidMotion{rot, true, -(F.zeta_power(rot) * trans.conj())};
}

bool RigidMotion::is_identity() const { return rot == 0 && !refl && trans.is_zero(); }

// ---- polygons --------------------------------------------------------------

namespace {

bool box_disjoint(const DBox& a, const DBox& b) { return a.hi < b.lo || b.hi < a.lo; }

DBox shift(const DBox& a, const DBox& off) { return DBox{a.lo + off.lo, a.hi + off.hi}; }

struct PosedSeg {
  Point a, b;
  DBox re, im;  // certified enclosure of the segment's bounding box
};

bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

bool segments_touch(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (proper_cross(a, b, c, d)) return true;
  return on_segment_closed(c, a, b) || on_segment_closed(d, a, b) ||
         on_segment_closed(a, c, d) || on_segment_closed(b, c, d);
}

}  // namespace

Polygon Polygon::make(std::vector<Point> vertices) {
  const int k = static_cast<int>(vertices.size());
  if (k < 3) throw InputError("polygon needs at least 3 vertices");
  for (int i = 0; i < k; ++i)
    if (vertices[i] == vertices[(i + 1) % k])
      throw InputError("polygon has repeated consecutive vertices");

  Polygon p;
  p.v_ = std::move(vertices);
  FieldElement a = p.area_elt();
  int s = sign_real(a);
  if (s == 0) throw InputError("polygon is degenerate (zero area)");
  if (s < 0) std::reverse(p.v_.begin(), p.v_.end());

  // simplicity: adjacent edges share exactly one point, others are disjoint
  auto edge = [&](int i) {
    return std::pair<Point, Point>(p.v_[i], p.v_[(i + 1) % k]);
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto [a1, b1] = edge(i);
      auto [a2, b2] = edge(j);
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      if (adjacent) {
        const Point& shared = (j == i + 1) ? b1 : a1;
        const Point& far1 = (j == i + 1) ? a1 : b1;
        const Point& far2 = (j == i + 1) ? b2 : a2;
        if (on_segment_closed(far2, a1, b1) && far2 != shared)
          throw InputError("polygon has a collinear spike");
        if (on_segment_closed(far1, a2, b2) && far1 != shared)
          throw InputError("polygon has a collinear spike");
      } else if (segments_touch(a1, b1, a2, b2)) {
        throw InputError("polygon is not simple");
      }
    }
  }

  double rlo = 0, rhi = 0, ilo = 0, ihi = 0;
  bool first = true;
  for (const auto& v : p.v_) {
    auto [br, bi] = embed_box(v);
    if (first) {
      rlo = br.lo; rhi = br.hi; ilo = bi.lo; ihi = bi.hi;
      first = false;
    } else {
      rlo = std::min(rlo, br.lo); rhi = std::max(rhi, br.hi);
      ilo = std::min(ilo, bi.lo); ihi = std::max(ihi, bi.hi);
    }
  }
  p.box_re_ = DBox{rlo, rhi};
  p.box_im_ = DBox{ilo, ihi};
  return p;
}

FieldElement Polygon::area_elt() const {
  const CyclotomicField& F = v_[0].field();
  FieldElement s = F.zero();
  const int k = size();
  for (int i = 0; i < k; ++i) s += v_[i].conj() * v_[(i + 1) % k];
  FieldElement w = s - s.conj();  // 4*i*area
  int n = F.order();
  if (n % 4 == 0) return w / (F.zeta_power(n / 4) * Rational(4));
  // area / sin(2*pi/n); the unique real-valued normalization available here
  FieldElement u = F.zeta_power(1) - F.zeta_power(n - 1);  // 2*i*sin(2*pi/n)
  return w / (u * Rational(2));
}

FieldElement Polygon::diameter2() const {
  FieldElement best = v_[0].field().zero();
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      FieldElement d2 = norm2(v_[i] - v_[j]);
      if (sign_real(d2 - best) > 0) best = d2;
    }
  return best;
}

Polygon Polygon::translated(const Point& t) const {
  std::vector<Point> v;
  v.reserve(v_.size());
  for (const auto& p : v_) v.push_back(p + t);
  return Polygon::make(std::move(v));
}

Polygon Polygon::transformed(const RigidMotion& m) const {
  std::vector<Point> v;
  v.reserve(v_.size());
  for (const auto& p : v_) v.push_back(m.apply(p));
  return Polygon::make(std::move(v));  // make() restores CCW after reflections
}

Polygon Polygon::scaled(const FieldElement& s) const {
  std::vector<Point> v;
  v.reserve(v_.size());
  for (const auto& p : v_) v.push_back(p * s);
  return Polygon::make(std::move(v));
}

bool Polygon::same_cycle(const Polygon& o) const {
  if (size() != o.size()) return false;
  const int k = size();
  for (int shift = 0; shift < k; ++shift) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      if (!(v_[i] == o.v_[(i + shift) % k])) ok = false;
    if (ok) return true;
  }
  return false;
}

Polygon::Location Polygon::locate(const Point& p) const {
  const int k = size();
  for (int i = 0; i < k; ++i)
    if (on_segment_closed(p, v_[i], v_[(i + 1) % k])) return Location::Boundary;
  int crossings = 0;
  for (int i = 0; i < k; ++i) {
    const Point& a = v_[i];
    const Point& b = v_[(i + 1) % k];
    int sa = sign_im(a - p), sb = sign_im(b - p);
    if (sa <= 0 && sb > 0) {
      if (orient(a, b, p) > 0) ++crossings;
    } else if (sb <= 0 && sa > 0) {
      if (orient(a, b, p) < 0) ++crossings;
    }
  }
  return crossings % 2 == 1 ? Location::Inside : Location::Outside;
}

bool Polygon::convex() const {
  const int k = size();
  for (int i = 0; i < k; ++i)
    if (orient(v_[i], v_[(i + 1) % k], v_[(i + 2) % k]) < 0) return false;
  return true;
}

Point Polygon::interior_point() const {
  const CyclotomicField& F = v_[0].field();
  const int k = size();
  if (convex()) {
    FieldElement s = F.zero();
    for (const auto& v : v_) s += v;
    return s / Rational(k);
  }
  // lowest (then leftmost) vertex is strictly convex; use the ear trick
  int vi = 0;
  for (int i = 1; i < k; ++i) {
    int c = sign_im(v_[i] - v_[vi]);
    if (c < 0 || (c == 0 && sign_re(v_[i] - v_[vi]) < 0)) vi = i;
  }
  const Point& a = v_[(vi + k - 1) % k];
  const Point& v = v_[vi];
  const Point& b = v_[(vi + 1) % k];
  int best = -1;
  FieldElement best_d = F.zero();
  for (int i = 0; i < k; ++i) {
    if (i == vi || i == (vi + k - 1) % k || i == (vi + 1) % k) continue;
    const Point& q = v_[i];
    // inside the closed ear triangle (a, v, b)?
    if (orient(a, v, q) < 0 || orient(v, b, q) < 0 || orient(b, a, q) < 0) continue;
    // farthest from the chord line, compared via (2*cross)^2 = -(w - conj w)^2
    FieldElement w = herm(b - a, q - a);
    FieldElement cr = w - w.conj();
    FieldElement mag = -(cr * cr);
    if (best < 0 || sign_real(mag - best_d) > 0) {
      best = i;
      best_d = mag;
    }
  }
  if (best < 0) return (a + v + b) / Rational(3);
  return (v + v_[best]) / Rational(2);
}

// ---- contact classification ------------------------------------------------

namespace {

// one maximal collinear overlap between collinear segments, if any
struct Overlap {
  bool positive = false;  // positive length
  Point p, q;             // endpoints when positive, p == q when a point
  bool point = false;
  bool same_direction = false;
};

Overlap collinear_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
  Overlap out;
  Point u = b - a;
  // order the four endpoints along u via the projection parameter
  auto param_less = [&](const Point& p, const Point& q) {
    return sign_dot(u, q - p) > 0;
  };
  Point lo1 = a, hi1 = b;
  Point lo2 = param_less(c, d) ? c : d;
  Point hi2 = param_less(c, d) ? d : c;
  Point lo = param_less(lo1, lo2) ? lo2 : lo1;  // max of the lower ends
  Point hi = param_less(hi1, hi2) ? hi1 : hi2;  // min of the upper ends
  if (param_less(lo, hi)) {
    out.positive = true;
    out.p = lo;
    out.q = hi;
    out.same_direction = sign_dot(b - a, d - c) > 0;
  } else if (lo == hi) {
    out.point = true;
    out.p = lo;
    out.q = lo;
  }
  return out;
}

}  // namespace

Arc sector_at_boundary_point(const Polygon& P, const Point& off, const Point& y) {
  const int k = P.size();
  for (int i = 0; i < k; ++i) {
    Point v = P.vertices()[i] + off;
    if (y == v) {
      Point prev = P.vertices()[(i + k - 1) % k] + off;
      Point next = P.vertices()[(i + 1) % k] + off;
      return Arc{Direction{next - v}, Direction{prev - v}};
    }
  }
  for (int i = 0; i < k; ++i) {
    Point a = P.vertices()[i] + off;
    Point b = P.vertices()[(i + 1) % k] + off;
    if (on_segment_closed(y, a, b)) return Arc{Direction{b - y}, Direction{a - y}};
  }
  throw Error("sector requested at a non-boundary point");
}

bool direction_equal(const Direction& a, const Direction& b) {
  return sign_cross(a.d, b.d) == 0 && sign_dot(a.d, b.d) > 0;
}

namespace {

int quadrant(const Direction& dir) {
  int sr = sign_re(dir.d), si = sign_im(dir.d);
  if (sr > 0 && si == 0) return 0;
  if (sr > 0 && si > 0) return 1;
  if (sr == 0 && si > 0) return 2;
  if (sr < 0 && si > 0) return 3;
  if (sr < 0 && si == 0) return 4;
  if (sr < 0 && si < 0) return 5;
  if (sr == 0 && si < 0) return 6;
  if (sr > 0 && si < 0) return 7;
  throw Error("zero vector used as a direction");
}

}  // namespace

bool angle_less(const Direction& a, const Direction& b) {
  int qa = quadrant(a), qb = quadrant(b);
  if (qa != qb) return qa < qb;
  return sign_cross(a.d, b.d) > 0;
}

bool in_open_arc(const Direction& d, const Arc& arc) {
  if (direction_equal(d, arc.from) || direction_equal(d, arc.to)) return false;
  if (direction_equal(arc.from, arc.to)) throw Error("improper (empty) arc");
  if (angle_less(arc.from, arc.to)) return angle_less(arc.from, d) && angle_less(d, arc.to);
  return angle_less(arc.from, d) || angle_less(d, arc.to);
}

Direction arc_interior_dir(const Arc& arc) {
  int s = sign_cross(arc.from.d, arc.to.d);
  if (s > 0) return Direction{arc.from.d + arc.to.d};
  if (s < 0) return Direction{-(arc.from.d + arc.to.d)};
  // opposite directions: arc is a half turn; any rotation by 2*pi/n lands inside
  const CyclotomicField& F = arc.from.d.field();
  return Direction{arc.from.d * F.zeta_power(1)};
}

bool arcs_intersect(const Arc& a, const Arc& b) {
  if (direction_equal(a.from, b.from) && direction_equal(a.to, b.to)) return true;
  return in_open_arc(b.from, a) || in_open_arc(b.to, a) || in_open_arc(a.from, b) ||
         in_open_arc(a.to, b);
}

Contact classify_contact(const Polygon& A, const Point& offA, const Polygon& B, const Point& offB) {
  Contact out;
  auto [oa_re, oa_im] = embed_box(offA);
  auto [ob_re, ob_im] = embed_box(offB);
  if (box_disjoint(shift(A.box_re(), oa_re), shift(B.box_re(), ob_re)) ||
      box_disjoint(shift(A.box_im(), oa_im), shift(B.box_im(), ob_im)))
    return out;

  const int ka = A.size(), kb = B.size();
  std::vector<Point> va(ka), vb(kb);
  for (int i = 0; i < ka; ++i) va[i] = A.vertices()[i] + offA;
  for (int i = 0; i < kb; ++i) vb[i] = B.vertices()[i] + offB;

  std::vector<Point> contacts;
  auto add_contact = [&](const Point& p) {
    for (const auto& q : contacts)
      if (q == p) return;
    contacts.push_back(p);
  };

  for (int i = 0; i < ka; ++i) {
    const Point& a = va[i];
    const Point& b = va[(i + 1) % ka];
    for (int j = 0; j < kb; ++j) {
      const Point& c = vb[j];
      const Point& d = vb[(j + 1) % kb];
      if (proper_cross(a, b, c, d)) {
        out.kind = Adjacency::InteriorOverlap;
        return out;
      }
      if (orient(a, b, c) == 0 && orient(a, b, d) == 0) {
        Overlap ov = collinear_overlap(a, b, c, d);
        if (ov.positive) {
          if (ov.same_direction) {
            out.kind = Adjacency::InteriorOverlap;  // interiors on the same side
            return out;
          }
          out.segments.push_back(SharedSegment{ov.p, ov.q, i, j});
          add_contact(ov.p);
          add_contact(ov.q);
        } else if (ov.point) {
          add_contact(ov.p);
        }
      } else {
        if (on_segment_closed(c, a, b)) add_contact(c);
        if (on_segment_closed(d, a, b)) add_contact(d);
        if (on_segment_closed(a, c, d)) add_contact(a);
        if (on_segment_closed(b, c, d)) add_contact(b);
      }
    }
  }

  // local interior overlap at any contact point?
  for (const auto& y : contacts) {
    Arc sa = sector_at_boundary_point(A, offA, y);
    Arc sb = sector_at_boundary_point(B, offB, y);
    if (arcs_intersect(sa, sb)) {
      out.kind = Adjacency::InteriorOverlap;
      return out;
    }
  }

  if (contacts.empty()) {
    // nested or far apart
    if (B.locate(A.interior_point() + offA - offB) == Polygon::Location::Inside ||
        A.locate(B.interior_point() + offB - offA) == Polygon::Location::Inside) {
      out.kind = Adjacency::InteriorOverlap;
      return out;
    }
    out.kind = Adjacency::Disjoint;
    return out;
  }

  if (!out.segments.empty()) {
    out.kind = Adjacency::EdgeAdjacent;
    // isolated touch points are the contacts on no shared segment
    for (const auto& y : contacts) {
      bool on_seg = false;
      for (const auto& s : out.segments)
        if (on_segment_closed(y, s.a, s.b)) on_seg = true;
      if (!on_seg) out.touch_points.push_back(y);
    }
  } else {
    out.kind = Adjacency::PointTouch;
    out.touch_points = contacts;
  }
  return out;
}

Adjacency adjacency_kind(const Polygon& A, const Point& offA, const Polygon& B, const Point& offB) {
  return classify_contact(A, offA, B, offB).kind;
}

bool polygon_inside(const Polygon& inner, const Point& off_inner, const Polygon& outer,
                    const Point& off_outer) {
  const int ki = inner.size(), ko = outer.size();
  std::vector<Point> vi(ki), vo(ko);
  for (int i = 0; i < ki; ++i) vi[i] = inner.vertices()[i] + off_inner;
  for (int i = 0; i < ko; ++i) vo[i] = outer.vertices()[i] + off_outer;

  std::vector<Point> boundary_contacts;
  for (int i = 0; i < ki; ++i) {
    Point rel = vi[i] - off_outer;
    auto loc = outer.locate(rel);
    if (loc == Polygon::Location::Outside) return false;
    if (loc == Polygon::Location::Boundary) boundary_contacts.push_back(vi[i]);
  }
  for (int j = 0; j < ko; ++j) {
    Point rel = vo[j] - off_inner;
    if (inner.locate(rel) == Polygon::Location::Boundary) boundary_contacts.push_back(vo[j]);
  }

  for (int i = 0; i < ki; ++i) {
    const Point& a = vi[i];
    const Point& b = vi[(i + 1) % ki];
    for (int j = 0; j < ko; ++j) {
      const Point& c = vo[j];
      const Point& d = vo[(j + 1) % ko];
      if (proper_cross(a, b, c, d)) return false;
      if (orient(a, b, c) == 0 && orient(a, b, d) == 0) {
        Overlap ov = collinear_overlap(a, b, c, d);
        if (ov.positive && !ov.same_direction) return false;  // hugging from outside
      }
    }
  }

  for (const auto& y : boundary_contacts) {
    Arc si = sector_at_boundary_point(inner, off_inner, y);
    Arc so = sector_at_boundary_point(outer, off_outer, y);
    Arc so_complement{so.to, so.from};
    if (arcs_intersect(si, so_complement)) return false;
  }

  return outer.locate(inner.interior_point() + off_inner - off_outer) ==
         Polygon::Location::Inside;
}

bool touches_boundary(const Polygon& inner, const Point& off_inner, const Polygon& outer,
                      const Point& off_outer) {
  const int ki = inner.size(), ko = outer.size();
  for (int i = 0; i < ki; ++i) {
    Point a = inner.vertices()[i] + off_inner;
    Point b = inner.vertices()[(i + 1) % ki] + off_inner;
    for (int j = 0; j < ko; ++j) {
      Point c = outer.vertices()[j] + off_outer;
      Point d = outer.vertices()[(j + 1) % ko] + off_outer;
      if (segments_touch(a, b, c, d)) return true;
    }
  }
  return false;
}

}  // namespace tilingaf
