#pragma once

#include "eqfig/plane.hpp"

namespace eqfig::proportion {

using plane::Point;
using plane::Segment;

/// The 8-argument proportion relation PQ:RS = pq:rs, all segments
/// nondegenerate.
struct ProportionQuery {
  Segment pq, rs, pq2, rs2;
};

/// Decided by the literal construction: a right angle at the origin, the
/// first and third lengths laid off on one ray, the second and fourth on
/// the perpendicular ray, then a parallel-or-coincident test on the two
/// hypotenuse lines.  Throws std::domain_error on a degenerate segment.
bool proportion_holds(const Segment& pq, const Segment& rs, const Segment& pq2,
                      const Segment& rs2);
bool proportion_holds(const ProportionQuery& q);

/// The length x with a:b = c:x, by the lay-off / parallel / intersect
/// construction.  Unique up to congruence.
ExactNumber fourth_proportional(const Segment& a, const Segment& b, const Segment& c);

/// Requires a:b = p:q; returns the truth of a:p = b:q.
bool check_interchange(const Segment& a, const Segment& b, const Segment& p, const Segment& q);

/// Requires B,b on one ray from A, C,c on the other, and BC parallel to bc;
/// returns the truth of AB:Ab = AC:Ac.
bool check_fundamental(const Point& a, const Point& b, const Point& c, const Point& b2,
                       const Point& c2);

/// Kupffer's right-angle case of Pascal's theorem.  A, B, C lie on one line
/// through O; Ap, Bp, Cp on the perpendicular line through O, all on one
/// side of O; requires A Bp || B Ap and B Cp || C Bp; returns the truth of
/// A Cp || C Ap.
bool pascal_kupffer_check(const Point& o, const Point& a, const Point& b, const Point& c,
                          const Point& ap, const Point& bp, const Point& cp);

/// Hypothesis: ABCD convex with diagonals meeting at O and the angles OAB,
/// ODC equal; returns whether the four vertices are concyclic.
bool cyclic_quad_check(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace eqfig::proportion
