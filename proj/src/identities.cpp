#include "feuerbach/identities.hpp"

#include <string>

namespace feuerbach {

std::string_view name(Theorem th) {
  switch (th) {
    case Theorem::Euler: return "euler";
    case Theorem::FeuerbachIncircle: return "feuerbach_incircle";
    case Theorem::FeuerbachExcircleA: return "feuerbach_excircle_a";
    case Theorem::FeuerbachExcircleB: return "feuerbach_excircle_b";
    case Theorem::FeuerbachExcircleC: return "feuerbach_excircle_c";
    case Theorem::OrthocenterDistance: return "orthocenter_distance";
  }
  return "?";
}

Theorem feuerbach_excircle(Side x) {
  switch (x) {
    case Side::A: return Theorem::FeuerbachExcircleA;
    case Side::B: return Theorem::FeuerbachExcircleB;
    case Side::C: return Theorem::FeuerbachExcircleC;
  }
  return Theorem::FeuerbachExcircleC;
}

std::string_view name(Circle c) {
  switch (c) {
    case Circle::Incircle: return "incircle";
    case Circle::ExcircleA: return "excircle_a";
    case Circle::ExcircleB: return "excircle_b";
    case Circle::ExcircleC: return "excircle_c";
  }
  return "?";
}

Circle circle_from_name(std::string_view text) {
  for (Circle c : kCircles) {
    if (name(c) == text) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown circle '" + std::string(text) + "'");
}

Circle excircle(Side x) { return static_cast<Circle>(index(x) + 1); }

CenterId center_of(Circle c) {
  switch (c) {
    case Circle::Incircle: return CenterId::Incenter;
    case Circle::ExcircleA: return CenterId::ExcenterA;
    case Circle::ExcircleB: return CenterId::ExcenterB;
    case Circle::ExcircleC: return CenterId::ExcenterC;
  }
  return CenterId::Incenter;
}

std::string_view name(TangencyKind k) {
  switch (k) {
    case TangencyKind::Internal: return "internal";
    case TangencyKind::External: return "external";
    case TangencyKind::Coincident: return "coincident";
    case TangencyKind::None: return "none";
  }
  return "?";
}

namespace {

// a^2 beta gamma + b^2 alpha gamma + c^2 alpha beta
Rational cross_term(const CoeffTriple& x, const Triangle& t) {
  return square(t.a()) * x.beta * x.gamma + square(t.b()) * x.alpha * x.gamma +
         square(t.c()) * x.alpha * x.beta;
}

std::optional<Side> excircle_side(Circle c) {
  if (c == Circle::Incircle) return std::nullopt;
  return static_cast<Side>(static_cast<int>(c) - 1);
}

}  // namespace

CoeffTriple incenter_to_nine_point(const Triangle& t) {
  const Rational s = (t.a() + t.b() + t.c()) / Rational(2);
  const Rational two_s = Rational(2) * s;
  return {(s - t.a()) / two_s, (s - t.b()) / two_s, (s - t.c()) / two_s};
}

CoeffTriple excenter_to_nine_point(const Triangle& t, Side x) {
  const Rational s = (t.a() + t.b() + t.c()) / Rational(2);
  const Rational denom = Rational(2) * (s - t.side(x));
  const Vertex vx = opposite(x);
  CoeffTriple out;
  for (Vertex p : kVertices) {
    if (p == vx) {
      out[p] = s / denom;
    } else {
      const auto q = static_cast<Vertex>(3 - index(p) - index(vx));
      out[p] = -(s - t.side(opposite(q))) / denom;
    }
  }
  return out;
}

IdentityReport verify_euler(const Triangle& t) {
  const DerivedScalars d = derive(t);
  const CoeffTriple m = coeffs(CenterId::Incenter, t);
  const Rational two_rR = Rational(2) * d.inradius_times_R;

  IdentityReport rep;
  rep.theorem = Theorem::Euler;
  rep.lhs = squared_distance(CenterId::Circumcenter, CenterId::Incenter, d, t);
  rep.rhs = d.circumradius_sq - two_rR;
  rep.pass = rep.lhs == rep.rhs;
  rep.steps_hold = m.sum() == Rational(1) && cross_term(m, t) == two_rR;
  return rep;
}

IdentityReport verify_feuerbach_incircle(const Triangle& t) {
  const DerivedScalars d = derive(t);
  const CoeffTriple diff = coeffs(CenterId::NinePointCenter, t) - coeffs(CenterId::Incenter, t);

  IdentityReport rep;
  rep.theorem = Theorem::FeuerbachIncircle;
  rep.lhs = squared_distance(CenterId::Incenter, CenterId::NinePointCenter, d, t);
  rep.rhs = d.circumradius_sq / Rational(4) + d.inradius_sq - d.inradius_times_R;
  rep.pass = rep.lhs == rep.rhs;
  rep.steps_hold = diff == incenter_to_nine_point(t) && diff.sum() == Rational(1, 2) &&
                   cross_term(diff, t) == d.inradius_times_R - d.inradius_sq;
  rep.sign_condition = euler_inequality(d).holds;
  return rep;
}

IdentityReport verify_feuerbach_excircle(const Triangle& t, Side x) {
  const DerivedScalars d = derive(t);
  const CenterId ex = excenter_opposite(x);
  const CoeffTriple diff = coeffs(CenterId::NinePointCenter, t) - coeffs(ex, t);
  const Rational& rx_sq = d.exradius_sq_for(x);
  const Rational& rx_R = d.exradius_times_R_for(x);

  IdentityReport rep;
  rep.theorem = feuerbach_excircle(x);
  rep.lhs = squared_distance(ex, CenterId::NinePointCenter, d, t);
  rep.rhs = d.circumradius_sq / Rational(4) + rx_sq + rx_R;
  rep.pass = rep.lhs == rep.rhs;
  rep.steps_hold = diff == excenter_to_nine_point(t, x) && diff.sum() == Rational(1, 2) &&
                   cross_term(diff, t) == -rx_sq - rx_R;
  return rep;
}

IdentityReport verify_orthocenter(const Triangle& t) {
  const DerivedScalars d = derive(t);
  IdentityReport rep;
  rep.theorem = Theorem::OrthocenterDistance;
  rep.lhs = squared_distance(CenterId::Circumcenter, CenterId::Orthocenter, d, t);
  rep.rhs = Rational(9) * d.circumradius_sq - (square(t.a()) + square(t.b()) + square(t.c()));
  rep.pass = rep.lhs == rep.rhs;
  rep.steps_hold = coeffs(CenterId::Orthocenter, t) == CoeffTriple{1, 1, 1};
  return rep;
}

TangencyKind classify_circle_pair(const Rational& distance_sq, const Rational& r1_sq,
                                  const Rational& r2_sq, const Rational& r1_times_r2) {
  const Rational sum_sq = r1_sq + r2_sq;
  const Rational twice_product = Rational(2) * r1_times_r2;
  if (distance_sq == sum_sq - twice_product) {
    return distance_sq.is_zero() ? TangencyKind::Coincident : TangencyKind::Internal;
  }
  if (distance_sq == sum_sq + twice_product) return TangencyKind::External;
  return TangencyKind::None;
}

TangencyPoint tangency_point(const Triangle& t, Circle circle) {
  const DerivedScalars d = derive(t);
  const auto side = excircle_side(circle);
  const Rational& radius_sq = side ? d.exradius_sq_for(*side) : d.inradius_sq;
  const Rational& radius_times_R = side ? d.exradius_times_R_for(*side) : d.inradius_times_R;

  // R^2 -+ 2 R rho; zero only for the incircle of an equilateral triangle.
  const Rational denom = side ? d.circumradius_sq + Rational(2) * radius_times_R
                              : d.circumradius_sq - Rational(2) * radius_times_R;
  if (denom.is_zero()) {
    throw Error(ErrorCode::CoincidentCircles,
                "nine-point circle and incircle coincide; no unique tangency point");
  }

  const CoeffTriple n = coeffs(CenterId::NinePointCenter, t);
  const CoeffTriple x = coeffs(center_of(circle), t);

  TangencyPoint tp;
  tp.scale = d.circumradius_sq / denom;
  tp.coeffs = n + tp.scale * (x - n);
  tp.to_nine_point_center_sq = squared_norm(tp.coeffs - n, d, t);
  tp.to_circle_center_sq = squared_norm(tp.coeffs - x, d, t);
  tp.consequences_hold = tp.to_nine_point_center_sq == d.circumradius_sq / Rational(4) &&
                         tp.to_circle_center_sq == radius_sq;
  return tp;
}

TangencyResult classify_tangency(const Triangle& t, Circle circle) {
  const DerivedScalars d = derive(t);
  const auto side = excircle_side(circle);
  const Rational& radius_sq = side ? d.exradius_sq_for(*side) : d.inradius_sq;
  const Rational& radius_times_R = side ? d.exradius_times_R_for(*side) : d.inradius_times_R;

  TangencyResult res;
  res.circle = circle;
  res.center_distance_sq = squared_distance(CenterId::NinePointCenter, center_of(circle), d, t);
  // Nine-point radius R/2: its square is R^2/4, its product with rho is R rho / 2.
  res.kind = classify_circle_pair(res.center_distance_sq, d.circumradius_sq / Rational(4),
                                  radius_sq, radius_times_R / Rational(2));
  if (res.kind == TangencyKind::Internal || res.kind == TangencyKind::External) {
    res.point = tangency_point(t, circle);
  }
  return res;
}

Verification verify_all(const Triangle& t) {
  Verification v;
  v.reports.push_back(verify_euler(t));
  v.reports.push_back(verify_feuerbach_incircle(t));
  for (Side x : kSides) v.reports.push_back(verify_feuerbach_excircle(t, x));
  v.reports.push_back(verify_orthocenter(t));

  v.all_pass = true;
  for (const auto& r : v.reports) v.all_pass = v.all_pass && r.ok();

  const bool equilateral = t.is_equilateral();
  for (std::size_t i = 0; i < kCircles.size(); ++i) {
    const Circle c = kCircles[i];
    v.tangency[i] = classify_tangency(t, c);
    const TangencyKind expected = c != Circle::Incircle ? TangencyKind::External
                                  : equilateral         ? TangencyKind::Coincident
                                                        : TangencyKind::Internal;
    const auto& res = v.tangency[i];
    const bool point_ok = !res.point || res.point->consequences_hold;
    v.all_pass = v.all_pass && res.kind == expected && point_ok;
  }
  return v;
}

}  // namespace feuerbach
