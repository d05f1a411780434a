#pragma once

#include "feuerbach/center_id.hpp"
#include "feuerbach/triangle.hpp"

namespace feuerbach {

/// A point written as alpha*u + beta*v + gamma*w, u, v, w being the vectors
/// from the circumcenter to A, B, C. Coefficients are unnormalized.
struct CoeffTriple {
  Rational alpha;
  Rational beta;
  Rational gamma;

  const Rational& operator[](Vertex v) const;
  Rational& operator[](Vertex v);

  Rational sum() const { return alpha + beta + gamma; }

  CoeffTriple& operator+=(const CoeffTriple& o);
  CoeffTriple& operator-=(const CoeffTriple& o);
  friend CoeffTriple operator+(CoeffTriple l, const CoeffTriple& r) { return l += r; }
  friend CoeffTriple operator-(CoeffTriple l, const CoeffTriple& r) { return l -= r; }
  friend CoeffTriple operator*(const Rational& k, const CoeffTriple& x) {
    return {k * x.alpha, k * x.beta, k * x.gamma};
  }
  friend bool operator==(const CoeffTriple&, const CoeffTriple&) = default;
};

/// Basis vector of a single vertex, e.g. (1, 0, 0) for A.
CoeffTriple vertex_coeffs(Vertex v);

CoeffTriple coeffs(CenterId center, const Triangle& t);

/// Result of checking that an in/excenter lies on two angle bisectors.
///
/// The line through vertex P is P + lambda * (e_PQ / |PQ| +- e_PR / |PR|),
/// internal (+) for the incenter and external (-) for excenters, where R is
/// the vertex the excenter is opposite to.
struct BisectorCheck {
  Vertex lambda_vertex = Vertex::A;
  Vertex mu_vertex = Vertex::B;
  Rational lambda;
  Rational mu;
  bool pass = false;
};

/// Lines through A and B for the incenter, and through the two vertices other
/// than X for the excenter opposite X. Throws InvalidArgument for any other
/// center.
BisectorCheck bisector_membership(CenterId center, const Triangle& t);

}  // namespace feuerbach
