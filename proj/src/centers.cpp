#include "feuerbach/centers.hpp"

#include <string>
#include <utility>

namespace feuerbach {

std::string_view symbol(CenterId id) {
  switch (id) {
    case CenterId::Circumcenter: return "O";
    case CenterId::Centroid: return "G";
    case CenterId::NinePointCenter: return "N";
    case CenterId::Orthocenter: return "H";
    case CenterId::Incenter: return "I";
    case CenterId::ExcenterA: return "I_a";
    case CenterId::ExcenterB: return "I_b";
    case CenterId::ExcenterC: return "I_c";
  }
  return "?";
}

CenterId center_from_symbol(std::string_view name) {
  for (CenterId id : kAllCenters) {
    if (symbol(id) == name) return id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown center '" + std::string(name) + "'");
}

bool is_excenter(CenterId id) {
  return id == CenterId::ExcenterA || id == CenterId::ExcenterB || id == CenterId::ExcenterC;
}

CenterId excenter_opposite(Side x) {
  switch (x) {
    case Side::A: return CenterId::ExcenterA;
    case Side::B: return CenterId::ExcenterB;
    case Side::C: return CenterId::ExcenterC;
  }
  return CenterId::ExcenterC;
}

Side excenter_side(CenterId id) {
  switch (id) {
    case CenterId::ExcenterA: return Side::A;
    case CenterId::ExcenterB: return Side::B;
    case CenterId::ExcenterC: return Side::C;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, std::string(symbol(id)) + " is not an excenter");
}

const Rational& CoeffTriple::operator[](Vertex v) const {
  switch (v) {
    case Vertex::A: return alpha;
    case Vertex::B: return beta;
    case Vertex::C: return gamma;
  }
  return gamma;
}

Rational& CoeffTriple::operator[](Vertex v) {
  return const_cast<Rational&>(std::as_const(*this)[v]);
}

CoeffTriple& CoeffTriple::operator+=(const CoeffTriple& o) {
  alpha += o.alpha;
  beta += o.beta;
  gamma += o.gamma;
  return *this;
}

CoeffTriple& CoeffTriple::operator-=(const CoeffTriple& o) {
  alpha -= o.alpha;
  beta -= o.beta;
  gamma -= o.gamma;
  return *this;
}

CoeffTriple vertex_coeffs(Vertex v) {
  CoeffTriple e{0, 0, 0};
  e[v] = 1;
  return e;
}

namespace {

// (x_a, x_b, x_c) / (2 * denom), the negative sign sitting on `negated`.
CoeffTriple side_weighted(const Triangle& t, const Rational& denom, const Vertex* negated) {
  const Rational scale = (Rational(2) * denom).inverse();
  CoeffTriple out;
  for (Vertex v : kVertices) {
    Rational x = t.side(opposite(v)) * scale;
    out[v] = (negated != nullptr && *negated == v) ? -x : x;
  }
  return out;
}

Vertex third_vertex(Vertex p, Vertex q) {
  return static_cast<Vertex>(3 - index(p) - index(q));
}

const Rational& length(const Triangle& t, Vertex p, Vertex q) {
  return t.side(opposite(third_vertex(p, q)));
}

// Point on the bisector through p toward q, with sign applied to the
// direction toward r, at parameter `param`.
CoeffTriple on_bisector(const Triangle& t, Vertex p, Vertex q, int sign, const Rational& param) {
  const Vertex r = third_vertex(p, q);
  const Rational to_q = param / length(t, p, q);
  const Rational to_r = Rational(sign) * param / length(t, p, r);
  CoeffTriple out = vertex_coeffs(p);
  out += to_q * (vertex_coeffs(q) - vertex_coeffs(p));
  out += to_r * (vertex_coeffs(r) - vertex_coeffs(p));
  return out;
}

}  // namespace

CoeffTriple coeffs(CenterId center, const Triangle& t) {
  const Rational half(1, 2);
  switch (center) {
    case CenterId::Circumcenter: return {0, 0, 0};
    case CenterId::Centroid: return {Rational(1, 3), Rational(1, 3), Rational(1, 3)};
    case CenterId::NinePointCenter: return {half, half, half};
    case CenterId::Orthocenter: return {1, 1, 1};
    case CenterId::Incenter: {
      const Rational s = (t.a() + t.b() + t.c()) / Rational(2);
      return side_weighted(t, s, nullptr);
    }
    case CenterId::ExcenterA:
    case CenterId::ExcenterB:
    case CenterId::ExcenterC: {
      const Side x = excenter_side(center);
      const Vertex v = opposite(x);
      const Rational s = (t.a() + t.b() + t.c()) / Rational(2);
      return side_weighted(t, s - t.side(x), &v);
    }
  }
  return {0, 0, 0};
}

BisectorCheck bisector_membership(CenterId center, const Triangle& t) {
  const Rational s = (t.a() + t.b() + t.c()) / Rational(2);
  BisectorCheck check;
  Rational denom;
  int sign = 1;
  if (center == CenterId::Incenter) {
    check.lambda_vertex = Vertex::A;
    check.mu_vertex = Vertex::B;
    denom = s;
  } else if (is_excenter(center)) {
    const Vertex x = opposite(excenter_side(center));
    // The two vertices other than x, in label order.
    check.lambda_vertex = x == Vertex::A ? Vertex::B : Vertex::A;
    check.mu_vertex = x == Vertex::C ? Vertex::B : Vertex::C;
    denom = s - t.side(excenter_side(center));
    sign = -1;
  } else {
    throw Error(ErrorCode::InvalidArgument,
                std::string(symbol(center)) + " is not an incenter or excenter");
  }

  const Vertex p = check.lambda_vertex;
  const Vertex q = check.mu_vertex;
  const Vertex r = third_vertex(p, q);
  const Rational two_denom = Rational(2) * denom;
  check.lambda = length(t, p, q) * length(t, p, r) / two_denom;
  check.mu = length(t, q, p) * length(t, q, r) / two_denom;

  const CoeffTriple expected = coeffs(center, t);
  check.pass = on_bisector(t, p, q, sign, check.lambda) == expected &&
               on_bisector(t, q, p, sign, check.mu) == expected;
  return check;
}

}  // namespace feuerbach
