#include "eqfig/plane.hpp"

#include <stdexcept>

namespace eqfig::plane {

ExactNumber cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

ExactNumber dot(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y);
}

ExactNumber squared_distance(const Point& a, const Point& b) {
  return (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
}

ExactNumber length(const Point& a, const Point& b) { return sqrt(squared_distance(a, b)); }

bool points_equal(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

bool collinear(const Point& a, const Point& b, const Point& c) {
  return cross(a, b, c).sign() == 0;
}

bool between(const Point& a, const Point& b, const Point& c) {
  if (!collinear(a, b, c)) return false;
  // b strictly interior: both projections onto the segment are positive.
  return dot(a, b, c).sign() > 0 && dot(c, b, a).sign() > 0;
}

bool congruent(const Point& a, const Point& b, const Point& c, const Point& d) {
  return (squared_distance(a, b) - squared_distance(c, d)).sign() == 0;
}

Parallelism parallel_kind(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (points_equal(a, b) || points_equal(c, d))
    throw std::domain_error("parallel: degenerate line (equal endpoints)");
  ExactNumber dir = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
  if (dir.sign() != 0) return Parallelism::NotParallel;
  // Same direction; coincident when c lies on line ab.
  if (cross(a, b, c).sign() == 0) return Parallelism::Coincident;
  return Parallelism::StrictlyParallel;
}

bool parallel(const Point& a, const Point& b, const Point& c, const Point& d) {
  return parallel_kind(a, b, c, d) != Parallelism::NotParallel;
}

bool right_angle(const Point& a, const Point& b, const Point& c) {
  if (points_equal(a, b) || points_equal(c, b))
    throw std::domain_error("right_angle: degenerate ray");
  return dot(b, a, c).sign() == 0;
}

bool same_side(const Point& p, const Point& q, const Point& a, const Point& b) {
  if (points_equal(a, b)) throw std::domain_error("same_side: degenerate line");
  int sp = cross(a, b, p).sign();
  int sq = cross(a, b, q).sign();
  if (sp == 0 || sq == 0) throw std::domain_error("same_side: point on the line");
  return sp == sq;
}

bool opposite_side(const Point& p, const Point& q, const Point& a, const Point& b) {
  return !same_side(p, q, a, b);
}

bool angles_equal(const Point& a1, const Point& v1, const Point& b1,
                  const Point& a2, const Point& v2, const Point& b2) {
  if (points_equal(a1, v1) || points_equal(b1, v1) || points_equal(a2, v2) ||
      points_equal(b2, v2))
    throw std::domain_error("angles_equal: degenerate ray");
  // Unsigned angles in [0, pi] are equal iff their cosines are:
  // dot1 * |u2||w2| = dot2 * |u1||w1|.
  ExactNumber d1 = dot(v1, a1, b1);
  ExactNumber d2 = dot(v2, a2, b2);
  ExactNumber n1 = sqrt(squared_distance(v1, a1) * squared_distance(v1, b1));
  ExactNumber n2 = sqrt(squared_distance(v2, a2) * squared_distance(v2, b2));
  return (d1 * n2 - d2 * n1).sign() == 0;
}

bool triangle_congruent(const Point& a, const Point& b, const Point& c,
                        const Point& a2, const Point& b2, const Point& c2) {
  if (collinear(a, b, c) || collinear(a2, b2, c2))
    throw std::domain_error("triangle_congruent: collinear triple");
  return congruent(a, b, a2, b2) && congruent(b, c, b2, c2) && congruent(c, a, c2, a2);
}

Point foot_of_perpendicular(const Point& p, const Point& a, const Point& b) {
  if (points_equal(a, b)) throw std::domain_error("foot_of_perpendicular: degenerate line");
  ExactNumber t = dot(a, p, b) / squared_distance(a, b);
  return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (points_equal(a, b) || points_equal(c, d))
    throw std::domain_error("line_intersection: degenerate line");
  ExactNumber det = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
  if (det.sign() == 0) throw std::domain_error("line_intersection: parallel or coincident lines");
  ExactNumber t = ((c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x)) / det;
  return Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Point lay_off(const Point& origin, const Point& toward, const Segment& len) {
  if (points_equal(origin, toward)) throw std::domain_error("lay_off: degenerate ray");
  if (points_equal(len.p, len.q)) throw std::domain_error("lay_off: degenerate length segment");
  ExactNumber t = sqrt(squared_distance(len.p, len.q)) / sqrt(squared_distance(origin, toward));
  return Point{origin.x + t * (toward.x - origin.x), origin.y + t * (toward.y - origin.y)};
}

Point orthocenter(const Point& a, const Point& b, const Point& c) {
  if (collinear(a, b, c)) throw std::domain_error("orthocenter: collinear input");
  // Altitude from a: through a, direction perp(c - b); likewise from b.
  Point a2{a.x + (b.y - c.y), a.y + (c.x - b.x)};
  Point b2{b.x + (a.y - c.y), b.y + (c.x - a.x)};
  return line_intersection(a, a2, b, b2);
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
  if (collinear(a, b, c)) throw std::domain_error("circumcircle: collinear input");
  Point mab = midpoint(a, b);
  Point mac = midpoint(a, c);
  Point mab2{mab.x + (a.y - b.y), mab.y + (b.x - a.x)};
  Point mac2{mac.x + (a.y - c.y), mac.y + (c.x - a.x)};
  Point center = line_intersection(mab, mab2, mac, mac2);
  return Circle{center, squared_distance(center, a)};
}

bool concyclic(const Point& a, const Point& b, const Point& c, const Point& d) {
  Circle k = circumcircle(a, b, c);
  return (squared_distance(k.center, d) - k.squared_radius).sign() == 0;
}

Point midpoint(const Point& a, const Point& b) {
  ExactNumber half = ExactNumber::from_rational(1, 2);
  return Point{(a.x + b.x) * half, (a.y + b.y) * half};
}

}  // namespace eqfig::plane
