#include "feuerbach/triangle.hpp"

#include <stdexcept>

namespace feuerbach {

char label(Side s) { return "abc"[index(s)]; }
char label(Vertex v) { return "ABC"[index(v)]; }

Triangle Triangle::make(Rational a, Rational b, Rational c) {
  for (const Rational* x : {&a, &b, &c}) {
    if (x->sign() <= 0) {
      throw Error(ErrorCode::NonPositiveSide, "side length " + x->str() + " is not positive");
    }
  }
  if (!(a < b + c) || !(b < a + c) || !(c < a + b)) {
    throw Error(ErrorCode::DegenerateTriangle,
                "degenerate triangle (" + a.str() + ", " + b.str() + ", " + c.str() +
                    "): strict triangle inequality fails");
  }
  return Triangle({std::move(a), std::move(b), std::move(c)});
}

Rational sixteen_area_sq_polynomial(const Rational& a, const Rational& b, const Rational& c) {
  const Rational a2 = square(a), b2 = square(b), c2 = square(c);
  return Rational(2) * a2 * b2 + Rational(2) * a2 * c2 + Rational(2) * b2 * c2 - square(a2) -
         square(b2) - square(c2);
}

DerivedScalars derive(const Triangle& t) {
  const Rational& a = t.a();
  const Rational& b = t.b();
  const Rational& c = t.c();

  DerivedScalars d;
  d.s = (a + b + c) / Rational(2);
  const std::array<Rational, 3> s_minus = {d.s - a, d.s - b, d.s - c};
  d.area_sq = d.s * s_minus[0] * s_minus[1] * s_minus[2];
  if (Rational(16) * d.area_sq != sixteen_area_sq_polynomial(a, b, c)) {
    throw std::logic_error("Heron forms disagree");
  }

  const Rational abc = a * b * c;
  d.circumradius_sq = square(abc) / (Rational(16) * d.area_sq);
  d.inradius_sq = d.area_sq / square(d.s);
  d.inradius_times_R = abc / (Rational(4) * d.s);
  for (Side x : kSides) {
    const Rational& sx = s_minus[index(x)];
    d.exradius_sq[index(x)] = d.area_sq / square(sx);
    d.exradius_times_R[index(x)] = abc / (Rational(4) * sx);
  }
  return d;
}

EulerInequality euler_inequality(const DerivedScalars& d) {
  const Rational four_r_sq = Rational(4) * d.inradius_sq;
  return {d.circumradius_sq >= four_r_sq, d.circumradius_sq == four_r_sq};
}

Triangle scaled(const Triangle& t, const Rational& k) {
  return Triangle::make(t.a() * k, t.b() * k, t.c() * k);
}

Triangle permuted(const Triangle& t, const std::array<Side, 3>& order) {
  return Triangle::make(t.side(order[0]), t.side(order[1]), t.side(order[2]));
}

}  // namespace feuerbach
