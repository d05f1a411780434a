#include <doctest.h>

#include "feuerbach/norm_lemma.hpp"
#include "support/generators.hpp"
#include "support/plane_oracle.hpp"

using namespace feuerbach;

namespace {

Triangle tri(long a, long b, long c) { return Triangle::make(a, b, c); }

}  // namespace

TEST_CASE("squared_norm examples") {
  const Triangle t = tri(3, 4, 5);
  const Rational R_sq = derive(t).circumradius_sq;
  // |OH|^2 = 9R^2 - (a^2 + b^2 + c^2) = 225/4 - 50.
  CHECK(squared_norm({1, 1, 1}, t) == Rational(25, 4));
  CHECK(squared_norm({0, 0, 0}, t) == 0);
  for (const Triangle& any : {t, tri(1, 1, 1), tri(5, 5, 6)}) {
    const Rational r2 = derive(any).circumradius_sq;
    CHECK(squared_norm({1, 0, 0}, any) == r2);
    CHECK(squared_norm({0, 1, 0}, any) == r2);
    CHECK(squared_norm({0, 0, 1}, any) == r2);
    // Midpoint of AB minus N is -w/2.
    CHECK(squared_norm({0, 0, Rational(-1, 2)}, any) == r2 / Rational(4));
  }
  CHECK(R_sq == Rational(25, 4));
}

TEST_CASE("squared_distance examples, checked against the Cartesian oracle") {
  const Triangle t = tri(3, 4, 5);
  const auto f = plane_oracle::build(3, 4, 5);
  // Oracle first.
  CHECK(std::abs(plane_oracle::sq(plane_oracle::dist(f.O, f.I)) - 1.25L) < 1e-12L);
  CHECK(std::abs(plane_oracle::sq(plane_oracle::dist(f.I, f.N)) - 0.0625L) < 1e-12L);

  CHECK(squared_distance(CenterId::Circumcenter, CenterId::Incenter, t) == Rational(5, 4));
  CHECK(squared_distance(CenterId::Incenter, CenterId::NinePointCenter, t) == Rational(1, 16));
  for (CenterId id : kAllCenters) CHECK(squared_distance(id, id, t) == 0);
}

TEST_CASE("gram entries") {
  CHECK(gram_entry(Vertex::A, Vertex::B, tri(3, 4, 5)) == Rational(-25, 4));
  CHECK(gram_entry(Vertex::A, Vertex::A, tri(3, 4, 5)) == Rational(25, 4));
  CHECK(gram_entry(Vertex::B, Vertex::C, tri(1, 1, 1)) == Rational(-1, 6));
  // <u,w> uses b, <v,w> uses a.
  CHECK(gram_entry(Vertex::A, Vertex::C, tri(3, 4, 5)) == Rational(25, 4) - Rational(16, 2));
  CHECK(gram_entry(Vertex::C, Vertex::B, tri(3, 4, 5)) == Rational(25, 4) - Rational(9, 2));
}

TEST_CASE("gram entries match embedded inner products") {
  const auto f = plane_oracle::build(5, 5, 6);
  const std::array<plane_oracle::P, 3> basis = {f.A - f.O, f.B - f.O, f.C - f.O};
  const Triangle t = tri(5, 5, 6);
  for (Vertex i : kVertices) {
    for (Vertex j : kVertices) {
      const auto p = basis[index(i)], q = basis[index(j)];
      const long double ip = p.x * q.x + p.y * q.y;
      CHECK(std::abs(ip - gram_entry(i, j, t).to_double()) < 1e-12L);
    }
  }
}

TEST_CASE("closed form equals the Gram expansion on random coefficients") {
  std::mt19937_64 rng(31);
  for (const auto& t : testing_support::corpus(40, 29)) {
    const DerivedScalars d = derive(t);
    for (int i = 0; i < 50; ++i) {
      const CoeffTriple x = testing_support::random_coeffs(rng);
      CHECK(squared_norm(x, d, t) == gram_quadratic_form(x, d, t));
    }
  }
}

TEST_CASE("distance symmetry, nine-point radius, positivity") {
  const Rational half(1, 2);
  const std::array<CoeffTriple, 3> midpoints = {
      CoeffTriple{0, half, half}, CoeffTriple{half, 0, half}, CoeffTriple{half, half, 0}};
  for (const auto& t : testing_support::corpus(100, 37)) {
    const DerivedScalars d = derive(t);
    for (CenterId p : kAllCenters) {
      for (CenterId q : kAllCenters) {
        const Rational pq = squared_distance(p, q, d, t);
        CHECK(pq == squared_distance(q, p, d, t));
        CHECK(pq.sign() >= 0);
      }
    }
    const CoeffTriple n = coeffs(CenterId::NinePointCenter, t);
    for (const auto& m : midpoints) {
      CHECK(squared_norm(n - m, d, t) == d.circumradius_sq / Rational(4));
    }
  }
}
