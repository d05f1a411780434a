#include "feuerbach/norm_lemma.hpp"

namespace feuerbach {

Rational squared_norm(const CoeffTriple& x, const DerivedScalars& d, const Triangle& t) {
  const Rational cross = square(t.a()) * x.beta * x.gamma + square(t.b()) * x.alpha * x.gamma +
                         square(t.c()) * x.alpha * x.beta;
  return d.circumradius_sq * square(x.sum()) - cross;
}

Rational squared_norm(const CoeffTriple& x, const Triangle& t) {
  return squared_norm(x, derive(t), t);
}

Rational squared_distance(CenterId p, CenterId q, const DerivedScalars& d, const Triangle& t) {
  return squared_norm(coeffs(q, t) - coeffs(p, t), d, t);
}

Rational squared_distance(CenterId p, CenterId q, const Triangle& t) {
  return squared_distance(p, q, derive(t), t);
}

Rational gram_entry(Vertex i, Vertex j, const DerivedScalars& d, const Triangle& t) {
  if (i == j) return d.circumradius_sq;
  // Vertices i and j are joined by the side opposite the remaining vertex.
  const auto third = static_cast<Side>(3 - index(i) - index(j));
  return d.circumradius_sq - square(t.side(third)) / Rational(2);
}

Rational gram_entry(Vertex i, Vertex j, const Triangle& t) { return gram_entry(i, j, derive(t), t); }

Rational gram_quadratic_form(const CoeffTriple& x, const DerivedScalars& d, const Triangle& t) {
  Rational total;
  for (Vertex i : kVertices) {
    for (Vertex j : kVertices) {
      total += x[i] * x[j] * gram_entry(i, j, d, t);
    }
  }
  return total;
}

}  // namespace feuerbach
