#include "eqfig/figures.hpp"

#include <stdexcept>

namespace eqfig::figures {

using plane::between;
using plane::collinear;
using plane::foot_of_perpendicular;
using plane::length;
using plane::line_intersection;
using plane::points_equal;
using plane::squared_distance;

QuadClass classify_quadrilateral(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point pts[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (points_equal(pts[i], pts[j])) return QuadClass{};

  // Convex: the diagonals meet, i.e. each diagonal's endpoints strictly
  // straddle the other's line.
  int o1 = plane::cross(a, c, b).sign();
  int o2 = plane::cross(a, c, d).sign();
  int o3 = plane::cross(b, d, a).sign();
  int o4 = plane::cross(b, d, c).sign();
  if (o1 != 0 && o2 != 0 && o1 != o2 && o3 != 0 && o4 != 0 && o3 != o4) {
    QuadClass q;
    q.kind = QuadKind::Convex;
    q.diagonal_point = line_intersection(a, c, b, d);
    return q;
  }

  int straight = -1, hits = 0;
  for (int i = 0; i < 4; ++i) {
    const Point& prev = pts[(i + 3) % 4];
    const Point& next = pts[(i + 1) % 4];
    if (between(prev, pts[i], next)) {
      straight = i;
      ++hits;
    }
  }
  if (hits == 1) {
    const Point& x = pts[(straight + 1) % 4];
    const Point& y = pts[(straight + 2) % 4];
    const Point& z = pts[(straight + 3) % 4];
    if (!collinear(x, y, z)) {
      QuadClass q;
      q.kind = QuadKind::ReallyTriangle;
      q.straight_vertex = straight;
      return q;
    }
  }
  return QuadClass{};
}

Quadrilateral::Quadrilateral(Point a, Point b, Point c, Point d, QuadClass cls)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), cls_(std::move(cls)) {}

Quadrilateral Quadrilateral::make(const Point& a, const Point& b, const Point& c, const Point& d) {
  QuadClass cls = classify_quadrilateral(a, b, c, d);
  if (cls.kind == QuadKind::Invalid)
    throw std::domain_error("quadrilateral: neither convex nor really a triangle");
  return Quadrilateral(a, b, c, d, cls);
}

bool equal_rectangles(const RectWH& r, const RectWH& s) {
  // Place copies corner to corner at B = (0,0): R as BEFG in the first
  // quadrant, S as BMLA in the third.  H and K are the outer corners.
  ExactNumber zero(0);
  Point b{zero, zero};
  Point h{-s.width, r.height};
  Point k{r.width, -s.height};
  return between(h, b, k);
}

RectWH rect_of_points(const Point& p, const Point& q, const Point& r, const Point& s) {
  if (!plane::right_angle(s, p, q) || !plane::right_angle(p, q, r) ||
      !plane::right_angle(q, r, s) || !plane::right_angle(r, s, p))
    throw std::domain_error("rect_of_points: not a rectangle");
  return RectWH{length(p, q), length(q, r)};
}

CircumscribedRect first_circumscribed_rectangle(const Triangle& t) {
  if (collinear(t.a, t.b, t.c))
    throw std::domain_error("first_circumscribed_rectangle: collinear triple");
  // L is the parallel to AB through C; D and K are the feet of the
  // perpendiculars from B and A to L.
  Point l2{t.c.x + (t.b.x - t.a.x), t.c.y + (t.b.y - t.a.y)};
  Point d = foot_of_perpendicular(t.b, t.c, l2);
  Point k = foot_of_perpendicular(t.a, t.c, l2);
  CircumscribedRect out;
  out.corners = {t.a, t.b, d, k};
  ExactNumber w = length(t.a, t.b);
  ExactNumber h = length(t.b, d);
  out.dims = RectWH{w, h};
  return out;
}

bool equal_triangles(const Triangle& t1, const Triangle& t2) {
  CircumscribedRect r1 = first_circumscribed_rectangle(t1);
  CircumscribedRect r2 = first_circumscribed_rectangle(t2);
  return equal_rectangles(r1.dims, r2.dims);
}

bool equal_triangles(const Point& a, const Point& b, const Point& c,
                     const Point& a2, const Point& b2, const Point& c2) {
  return equal_triangles(Triangle{a, b, c}, Triangle{a2, b2, c2});
}

namespace {

Point add_vec(const Point& p, const Point& from, const Point& to) {
  return Point{p.x + (to.x - from.x), p.y + (to.y - from.y)};
}

Point add_perp(const Point& p, const Point& from, const Point& to) {
  return Point{p.x - (to.y - from.y), p.y + (to.x - from.x)};
}

// Rectangle with two sides parallel to the diagonal (d1, d2), passing
// through the off-diagonal vertices o1 and o2, and two sides through d1
// and d2 perpendicular to it.
CircumscribedRect rect_about_diagonal(const Point& d1, const Point& d2, const Point& o1,
                                      const Point& o2) {
  Point par1 = add_vec(o1, d1, d2);
  Point par2 = add_vec(o2, d1, d2);
  Point q1 = add_perp(d1, d1, d2);
  Point q2 = add_perp(d2, d1, d2);
  Point ca = line_intersection(o1, par1, d1, q1);
  Point cb = line_intersection(o1, par1, d2, q2);
  Point cc = line_intersection(o2, par2, d2, q2);
  Point cd = line_intersection(o2, par2, d1, q1);
  CircumscribedRect out;
  out.corners = {ca, cb, cc, cd};
  out.dims = RectWH{length(ca, cb), length(cb, cc)};
  return out;
}

Triangle underlying_triangle(const Quadrilateral& q) {
  auto pts = q.points();
  int s = q.cls().straight_vertex;
  return Triangle{pts[(s + 1) % 4], pts[(s + 2) % 4], pts[(s + 3) % 4]};
}

}  // namespace

std::vector<CircumscribedRect> circumscribed_rectangles(const Quadrilateral& q) {
  std::vector<CircumscribedRect> out;
  if (q.cls().kind == QuadKind::Convex) {
    out.push_back(rect_about_diagonal(q.b(), q.d(), q.a(), q.c()));
    out.push_back(rect_about_diagonal(q.a(), q.c(), q.b(), q.d()));
  } else {
    Triangle t = underlying_triangle(q);
    out.push_back(first_circumscribed_rectangle(t));
    out.push_back(first_circumscribed_rectangle(Triangle{t.b, t.c, t.a}));
    out.push_back(first_circumscribed_rectangle(Triangle{t.c, t.a, t.b}));
  }
  return out;
}

bool equal_quadrilaterals(const Quadrilateral& q1, const Quadrilateral& q2) {
  auto r1 = circumscribed_rectangles(q1);
  auto r2 = circumscribed_rectangles(q2);
  for (const auto& x : r1)
    for (const auto& y : r2)
      if (equal_rectangles(x.dims, y.dims)) return true;
  return false;
}

namespace {

ExactNumber area_width(const RectWH& rect, const Segment& unit) {
  if (points_equal(unit.p, unit.q)) throw std::domain_error("area: degenerate unit segment");
  return rect.width * rect.height / length(unit.p, unit.q);
}

}  // namespace

AreaValue area(const Triangle& t, const Segment& unit) {
  RectWH r = first_circumscribed_rectangle(t).dims;
  return AreaValue{area_width(r, unit), length(unit.p, unit.q)};
}

AreaValue area(const Quadrilateral& q, const Segment& unit) {
  RectWH r = circumscribed_rectangles(q).front().dims;
  return AreaValue{area_width(r, unit), length(unit.p, unit.q)};
}

AreaValue area_sum(const AreaValue& x, const AreaValue& y) {
  if ((x.unit - y.unit).sign() != 0) throw std::domain_error("area_sum: unit mismatch");
  return AreaValue{x.width + y.width, x.unit};
}

ExactNumber oracle_area_points(const Point* pts, int n) {
  ExactNumber twice(0);
  for (int i = 0; i < n; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % n];
    twice = twice + (p.x * q.y - q.x * p.y);
  }
  if (twice.sign() < 0) twice = -twice;
  return twice / ExactNumber(2);
}

ExactNumber oracle_area(const Triangle& t) {
  const Point pts[3] = {t.a, t.b, t.c};
  return oracle_area_points(pts, 3);
}

ExactNumber oracle_area(const Quadrilateral& q) {
  auto pts = q.points();
  return oracle_area_points(pts.data(), 4);
}

}  // namespace eqfig::figures
