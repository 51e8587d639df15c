#pragma once

#include <array>
#include <optional>
#include <vector>

#include "eqfig/plane.hpp"

namespace eqfig::figures {

using plane::Point;
using plane::Segment;

/// Ordered triple; the base of triangle ABC is AB.
struct Triangle {
  Point a, b, c;
};

/// A rectangle up to congruence, reduced to its side lengths.
struct RectWH {
  ExactNumber width, height;
};

enum class QuadKind { Convex, ReallyTriangle, Invalid };

struct QuadClass {
  QuadKind kind = QuadKind::Invalid;
  /// Convex: the interior point where the diagonals meet.
  std::optional<Point> diagonal_point;
  /// ReallyTriangle: index (0..3) of the vertex lying between its neighbours.
  int straight_vertex = -1;
};

/// Exact classification of an ordered point quadruple.  Strictly non-convex,
/// self-intersecting and collinear-degenerate quadruples are Invalid.
QuadClass classify_quadrilateral(const Point& a, const Point& b, const Point& c, const Point& d);

/// Ordered quadruple in boundary order, convex or "really a triangle".
class Quadrilateral {
public:
  /// Throws std::domain_error when the quadruple classifies as Invalid.
  static Quadrilateral make(const Point& a, const Point& b, const Point& c, const Point& d);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }
  const Point& c() const { return c_; }
  const Point& d() const { return d_; }
  const QuadClass& cls() const { return cls_; }
  std::array<Point, 4> points() const { return {a_, b_, c_, d_}; }

private:
  Quadrilateral(Point a, Point b, Point c, Point d, QuadClass cls);
  Point a_, b_, c_, d_;
  QuadClass cls_;
};

/// The placement test of the equal-rectangles definition: copies of R and S
/// are placed corner to corner at a common vertex B, and the rectangles are
/// equal iff the two outer corners H, K are collinear with B, with B
/// between them.
bool equal_rectangles(const RectWH& r, const RectWH& s);

/// Canonicalize a point rectangle to side lengths (width |PQ|, height |QR|).
/// Throws std::domain_error unless PQRS has four right angles.
RectWH rect_of_points(const Point& p, const Point& q, const Point& r, const Point& s);

struct CircumscribedRect {
  RectWH dims;
  std::array<Point, 4> corners;  // boundary order; rational in the inputs
};

/// The rectangle on base AB whose opposite side's line passes through C.
/// Throws std::domain_error on a collinear triple.
CircumscribedRect first_circumscribed_rectangle(const Triangle& t);

/// ET: first circumscribed rectangles are equal.
bool equal_triangles(const Triangle& t1, const Triangle& t2);
bool equal_triangles(const Point& a, const Point& b, const Point& c,
                     const Point& a2, const Point& b2, const Point& c2);

/// Two rectangles for a convex quadrilateral (one per diagonal), three for
/// a really-a-triangle (one per base choice of the underlying triangle).
std::vector<CircumscribedRect> circumscribed_rectangles(const Quadrilateral& q);

/// EF: some circumscribed rectangle of one is equal to some circumscribed
/// rectangle of the other.
bool equal_quadrilaterals(const Quadrilateral& q1, const Quadrilateral& q2);

/// The figure's area relative to a fixed unit segment UV: the width of the
/// unique rectangle with height |UV| equal to the figure's (first)
/// circumscribed rectangle.
struct AreaValue {
  ExactNumber width;
  ExactNumber unit;  // |UV|; sums require matching units
};

AreaValue area(const Triangle& t, const Segment& unit);
AreaValue area(const Quadrilateral& q, const Segment& unit);

/// Widths add (rectangles placed end to end).  Throws std::domain_error on
/// a unit mismatch.
AreaValue area_sum(const AreaValue& x, const AreaValue& y);

/// Independent test oracle: absolute shoelace area from coordinates.
/// Never called by any of the defined relations above.
ExactNumber oracle_area(const Triangle& t);
ExactNumber oracle_area(const Quadrilateral& q);
ExactNumber oracle_area_points(const Point* pts, int n);

}  // namespace eqfig::figures
