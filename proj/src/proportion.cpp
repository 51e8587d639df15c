#include "eqfig/proportion.hpp"

#include <stdexcept>

#include "eqfig/figures.hpp"

namespace eqfig::proportion {

using plane::between;
using plane::collinear;
using plane::dot;
using plane::lay_off;
using plane::line_intersection;
using plane::parallel;
using plane::parallel_kind;
using plane::Parallelism;
using plane::points_equal;

namespace {

void require_nondegenerate(const Segment& s, const char* what) {
  if (points_equal(s.p, s.q)) throw std::domain_error(std::string(what) + ": degenerate segment");
}

const Point kOrigin{ExactNumber(0), ExactNumber(0)};
const Point kEx{ExactNumber(1), ExactNumber(0)};
const Point kEy{ExactNumber(0), ExactNumber(1)};

// b strictly on ray a->dir_point (b != a allowed to coincide with dir_point).
bool on_ray(const Point& a, const Point& dir_point, const Point& b) {
  if (points_equal(a, b)) return false;
  return collinear(a, dir_point, b) && dot(a, dir_point, b).sign() > 0;
}

}  // namespace

bool proportion_holds(const Segment& pq, const Segment& rs, const Segment& pq2,
                      const Segment& rs2) {
  require_nondegenerate(pq, "proportion");
  require_nondegenerate(rs, "proportion");
  require_nondegenerate(pq2, "proportion");
  require_nondegenerate(rs2, "proportion");
  Point b = lay_off(kOrigin, kEx, pq);
  Point c = lay_off(kOrigin, kEy, rs);
  Point b2 = lay_off(kOrigin, kEx, pq2);
  Point c2 = lay_off(kOrigin, kEy, rs2);
  return parallel_kind(b, c, b2, c2) != Parallelism::NotParallel;
}

bool proportion_holds(const ProportionQuery& q) {
  return proportion_holds(q.pq, q.rs, q.pq2, q.rs2);
}

ExactNumber fourth_proportional(const Segment& a, const Segment& b, const Segment& c) {
  require_nondegenerate(a, "fourth_proportional");
  require_nondegenerate(b, "fourth_proportional");
  require_nondegenerate(c, "fourth_proportional");
  // Lay |a| and |c| on one ray, |b| on the other; the parallel to the first
  // hypotenuse through the tip of |c| cuts the second ray at height x.
  Point pa = lay_off(kOrigin, kEx, a);
  Point pb = lay_off(kOrigin, kEy, b);
  Point pc = lay_off(kOrigin, kEx, c);
  Point through{pc.x + (pb.x - pa.x), pc.y + (pb.y - pa.y)};
  Point x = line_intersection(pc, through, kOrigin, kEy);
  return x.y;
}

bool check_interchange(const Segment& a, const Segment& b, const Segment& p, const Segment& q) {
  if (!proportion_holds(a, b, p, q))
    throw std::domain_error("check_interchange: a:b = p:q does not hold");
  return proportion_holds(a, p, b, q);
}

bool check_fundamental(const Point& a, const Point& b, const Point& c, const Point& b2,
                       const Point& c2) {
  if (!on_ray(a, b, b2)) throw std::domain_error("check_fundamental: b' not on ray AB");
  if (!on_ray(a, c, c2)) throw std::domain_error("check_fundamental: c' not on ray AC");
  if (collinear(a, b, c)) throw std::domain_error("check_fundamental: degenerate angle");
  if (!parallel(b, c, b2, c2)) throw std::domain_error("check_fundamental: BC not parallel to bc");
  return proportion_holds(Segment{a, b}, Segment{a, b2}, Segment{a, c}, Segment{a, c2});
}

bool pascal_kupffer_check(const Point& o, const Point& a, const Point& b, const Point& c,
                          const Point& ap, const Point& bp, const Point& cp) {
  const Point* first[3] = {&a, &b, &c};
  const Point* second[3] = {&ap, &bp, &cp};
  for (auto* p : first)
    if (points_equal(o, *p) || !collinear(o, a, *p))
      throw std::domain_error("pascal_kupffer: A, B, C must lie on one line through O");
  for (auto* p : second) {
    if (points_equal(o, *p) || !collinear(o, ap, *p))
      throw std::domain_error("pascal_kupffer: A', B', C' must lie on one line through O");
    if (dot(o, ap, *p).sign() <= 0)
      throw std::domain_error("pascal_kupffer: A', B', C' must lie on one side of O");
  }
  if (points_equal(a, b) || points_equal(b, c) || points_equal(a, c))
    throw std::domain_error("pascal_kupffer: A, B, C must be distinct");
  if (points_equal(ap, bp) || points_equal(bp, cp) || points_equal(ap, cp))
    throw std::domain_error("pascal_kupffer: A', B', C' must be distinct");
  if (!plane::right_angle(a, o, ap)) throw std::domain_error("pascal_kupffer: lines not perpendicular");
  if (!parallel(a, bp, b, ap)) throw std::domain_error("pascal_kupffer: AB' not parallel to BA'");
  if (!parallel(b, cp, c, bp)) throw std::domain_error("pascal_kupffer: BC' not parallel to CB'");
  return parallel(a, cp, c, ap);
}

bool cyclic_quad_check(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto cls = figures::classify_quadrilateral(a, b, c, d);
  if (cls.kind != figures::QuadKind::Convex)
    throw std::domain_error("cyclic_quad_check: quadrilateral not convex");
  const Point& o = *cls.diagonal_point;
  if (!plane::angles_equal(o, a, b, o, d, c))
    throw std::domain_error("cyclic_quad_check: angles OAB and ODC differ");
  return plane::concyclic(a, b, c, d);
}

}  // namespace eqfig::proportion
