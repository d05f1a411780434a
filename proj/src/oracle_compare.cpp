#include "feuerbach/oracle_compare.hpp"

#include <algorithm>
#include <cmath>

#include "feuerbach/norm_lemma.hpp"

namespace feuerbach {

Point2 realize(const CoeffTriple& x, const Embedding& e) {
  return x.alpha.to_double() * e.A + x.beta.to_double() * e.B + x.gamma.to_double() * e.C;
}

Comparison compare(const Triangle& t, const Tolerance& tol, const CoeffSource& source) {
  const CoeffSource coeff_of = source ? source : CoeffSource(&coeffs);
  const DerivedScalars d = derive(t);

  Comparison cmp;
  cmp.conditioning = (d.area_sq / square(square(d.s))).to_double();
  if (cmp.conditioning < kConditioningFloor) {
    cmp.flagged = true;
    cmp.flag_reason = "near-degenerate: area^2/s^4 below conditioning floor";
  }

  Embedding e;
  OracleCenters oc;
  try {
    e = embed(t);
    oc = construct_centers(e);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::IllConditioned) throw;
    cmp.flagged = true;
    cmp.flag_reason = err.what();
    return cmp;
  }

  const double R_sq = d.circumradius_sq.to_double();
  const double R = std::sqrt(R_sq);
  bool all = true;

  cmp.basis_agrees = true;
  for (Vertex v : kVertices) {
    const Point2 p = e.vertex(v);
    cmp.basis_agrees = cmp.basis_agrees && tol.close(dot(p, p), R_sq);
  }
  all = all && cmp.basis_agrees;

  std::array<CoeffTriple, 8> triples;
  for (CenterId id : kAllCenters) {
    triples[index(id)] = coeff_of(id, t);
    CenterAgreement ca;
    ca.center = id;
    ca.exact = realize(triples[index(id)], e);
    ca.oracle = oc[id];
    ca.error = distance(ca.exact, ca.oracle);
    ca.agree = tol.close(0.0, ca.error, std::max({norm(ca.exact), norm(ca.oracle), R}));
    all = all && ca.agree;
    cmp.centers.push_back(ca);
  }

  for (std::size_t i = 0; i < kAllCenters.size(); ++i) {
    for (std::size_t j = i + 1; j < kAllCenters.size(); ++j) {
      DistanceAgreement da;
      da.p = kAllCenters[i];
      da.q = kAllCenters[j];
      da.exact_sq = squared_norm(triples[j] - triples[i], d, t).to_double();
      const double od = distance(oc.points[i], oc.points[j]);
      da.oracle_sq = od * od;
      da.agree = tol.close(da.exact_sq, da.oracle_sq, R_sq);
      all = all && da.agree;
      cmp.distances.push_back(da);
    }
  }

  for (Circle c : kCircles) {
    const CenterId x = center_of(c);
    const double radius =
        c == Circle::Incircle ? oc.inradius : oc.exradius[index(excenter_side(x))];
    TangencyPoint tp;
    try {
      tp = tangency_point(t, c);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CoincidentCircles) throw;
      continue;
    }
    TangencyAgreement ta;
    ta.circle = c;
    const CoeffTriple n = triples[index(CenterId::NinePointCenter)];
    ta.exact = realize(n + tp.scale * (triples[index(x)] - n), e);
    ta.oracle = oracle_tangency_point(oc, x, radius);
    ta.agree = tol.close(0.0, distance(ta.exact, ta.oracle), R);
    ta.on_nine_point_circle = tol.close(distance(ta.oracle, oc[CenterId::NinePointCenter]), 0.5 * R);
    ta.on_circle = tol.close(distance(ta.oracle, oc[x]), radius, R);
    all = all && ta.agree && ta.on_nine_point_circle && ta.on_circle;
    cmp.tangency.push_back(ta);
  }

  cmp.agree = all;
  return cmp;
}

}  // namespace feuerbach
