#pragma once

#include "eqfig/exact.hpp"

namespace eqfig::plane {

struct Point {
  ExactNumber x, y;
};

/// Ordered point pair; a "line" is always such a pair.
struct Segment {
  Point p, q;
};

ExactNumber cross(const Point& a, const Point& b, const Point& c);  // (b-a) x (c-a)
ExactNumber dot(const Point& a, const Point& b, const Point& c);    // (b-a) . (c-a)
ExactNumber squared_distance(const Point& a, const Point& b);
ExactNumber length(const Point& a, const Point& b);  // sqrt of squared distance

bool points_equal(const Point& a, const Point& b);

bool collinear(const Point& a, const Point& b, const Point& c);

/// Strict betweenness: a, b, c collinear, pairwise distinct, b interior
/// to segment ac.
bool between(const Point& a, const Point& b, const Point& c);

/// Segment congruence AB = CD (equal squared distances).
bool congruent(const Point& a, const Point& b, const Point& c, const Point& d);

enum class Parallelism { NotParallel, StrictlyParallel, Coincident };

/// Relation of lines AB and CD.  Throws std::domain_error when A = B or
/// C = D.  Coincident lines count as parallel for the proportion relation.
Parallelism parallel_kind(const Point& a, const Point& b, const Point& c, const Point& d);
bool parallel(const Point& a, const Point& b, const Point& c, const Point& d);

/// Right angle at b between rays ba and bc.  Throws on degenerate rays.
bool right_angle(const Point& a, const Point& b, const Point& c);

/// p and q strictly on the same side of line ab.  Throws std::domain_error
/// when a = b or either point lies on the line.
bool same_side(const Point& p, const Point& q, const Point& a, const Point& b);
bool opposite_side(const Point& p, const Point& q, const Point& a, const Point& b);

/// Unsigned angle at v1 between rays v1->a1 and v1->b1 equals the angle at
/// v2 between rays v2->a2 and v2->b2.  Throws on degenerate rays.
bool angles_equal(const Point& a1, const Point& v1, const Point& b1,
                  const Point& a2, const Point& v2, const Point& b2);

/// Three corresponding sides pairwise congruent (AB=ab, BC=bc, CA=ca).
/// Throws std::domain_error when either triple is collinear.
bool triangle_congruent(const Point& a, const Point& b, const Point& c,
                        const Point& a2, const Point& b2, const Point& c2);

/// The unique point on line ab closest to p; rational in the inputs.
Point foot_of_perpendicular(const Point& p, const Point& a, const Point& b);

/// The common point of lines ab and cd.  Throws when they are parallel
/// or coincident.
Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// The point on ray origin->toward at the distance |len.p len.q| from the
/// origin.  Introduces one sqrt per distinct squared length.
Point lay_off(const Point& origin, const Point& toward, const Segment& len);

/// Common point of the three altitudes.  Throws on collinear input.
Point orthocenter(const Point& a, const Point& b, const Point& c);

struct Circle {
  Point center;
  ExactNumber squared_radius;
};

/// Center equidistant from all three points.  Throws on collinear input.
Circle circumcircle(const Point& a, const Point& b, const Point& c);

/// d lies on the circumcircle of the (noncollinear) triple a, b, c.
bool concyclic(const Point& a, const Point& b, const Point& c, const Point& d);

Point midpoint(const Point& a, const Point& b);

}  // namespace eqfig::plane
