#include <doctest.h>

#include "feuerbach/triangle.hpp"
#include "support/generators.hpp"
#include "support/plane_oracle.hpp"

using namespace feuerbach;

namespace {

Triangle tri(long a, long b, long c) { return Triangle::make(a, b, c); }

ErrorCode make_error(Rational a, Rational b, Rational c) {
  try {
    Triangle::make(a, b, c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected construction to fail");
  return ErrorCode::InvalidArgument;
}

// Frozen values confirmed against the Cartesian oracle before the exact
// comparison below trusts them.
struct Frozen {
  long a, b, c;
  Rational s, area_sq, R_sq, r_sq, rR;
};

const Frozen kFrozen[] = {
    {3, 4, 5, 6, 36, Rational(25, 4), 1, Rational(5, 2)},
    {1, 1, 1, Rational(3, 2), Rational(3, 16), Rational(1, 3), Rational(1, 12), Rational(1, 6)},
    {5, 5, 6, 8, 144, Rational(625, 64), Rational(9, 4), Rational(75, 16)},
};

}  // namespace

TEST_CASE("make validates sides") {
  CHECK_NOTHROW(tri(3, 4, 5));
  CHECK(make_error(1, 2, 3) == ErrorCode::DegenerateTriangle);
  CHECK(make_error(1, 1, 5) == ErrorCode::DegenerateTriangle);
  CHECK(make_error(0, 4, 5) == ErrorCode::NonPositiveSide);
  CHECK(make_error(3, Rational(-4), 5) == ErrorCode::NonPositiveSide);
  CHECK(make_error(Rational(1, 2), Rational(1, 3), Rational(5, 6)) == ErrorCode::DegenerateTriangle);
}

TEST_CASE("frozen derived values agree with the Cartesian oracle") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.a);
    CAPTURE(f.b);
    CAPTURE(f.c);
    const auto fig = plane_oracle::build(f.a, f.b, f.c);
    const long double eps = 1e-12L;
    CHECK(std::abs(fig.s - f.s.to_double()) < eps);
    CHECK(std::abs(fig.area * fig.area - f.area_sq.to_double()) < eps);
    CHECK(std::abs(fig.R * fig.R - f.R_sq.to_double()) < eps);
    CHECK(std::abs(fig.r * fig.r - f.r_sq.to_double()) < eps);
    CHECK(std::abs(fig.R * fig.r - f.rR.to_double()) < eps);
  }
}

TEST_CASE("derive reproduces the frozen values exactly") {
  for (const auto& f : kFrozen) {
    const DerivedScalars d = derive(tri(f.a, f.b, f.c));
    CHECK(d.s == f.s);
    CHECK(d.area_sq == f.area_sq);
    CHECK(d.circumradius_sq == f.R_sq);
    CHECK(d.inradius_sq == f.r_sq);
    CHECK(d.inradius_times_R == f.rR);
  }
}

TEST_CASE("3-4-5 exradii") {
  const DerivedScalars d = derive(tri(3, 4, 5));
  const auto fig = plane_oracle::build(3, 4, 5);
  // Oracle first: r_a, r_b, r_c = 2, 3, 6.
  CHECK(std::abs(fig.rx[0] - 2.0L) < 1e-12L);
  CHECK(std::abs(fig.rx[1] - 3.0L) < 1e-12L);
  CHECK(std::abs(fig.rx[2] - 6.0L) < 1e-12L);
  CHECK(d.exradius_sq_for(Side::A) == 4);
  CHECK(d.exradius_sq_for(Side::B) == 9);
  CHECK(d.exradius_sq_for(Side::C) == 36);
  CHECK(d.exradius_times_R_for(Side::A) == 5);
  CHECK(d.exradius_times_R_for(Side::B) == Rational(15, 2));
  CHECK(d.exradius_times_R_for(Side::C) == 15);
}

TEST_CASE("euler inequality and its equality case") {
  const auto right = euler_inequality(derive(tri(3, 4, 5)));
  CHECK(right.holds);
  CHECK_FALSE(right.equality);
  const auto eq = euler_inequality(derive(tri(1, 1, 1)));
  CHECK(eq.holds);
  CHECK(eq.equality);
  const auto iso = euler_inequality(derive(tri(5, 5, 6)));
  CHECK(iso.holds);
  CHECK_FALSE(iso.equality);
}

TEST_CASE("both Heron forms and the radius definitions agree on random triangles") {
  for (const auto& t : testing_support::corpus(300)) {
    const DerivedScalars d = derive(t);
    CHECK(Rational(16) * d.area_sq == sixteen_area_sq_polynomial(t.a(), t.b(), t.c()));
    CHECK(d.inradius_sq * square(d.s) == d.area_sq);
    CHECK(square(d.inradius_times_R) == d.inradius_sq * d.circumradius_sq);
    for (Side x : kSides) {
      CHECK(square(d.exradius_times_R_for(x)) == d.exradius_sq_for(x) * d.circumradius_sq);
    }
    const auto e = euler_inequality(d);
    CHECK(e.holds);
    CHECK(e.equality == t.is_equilateral());
  }
}

TEST_CASE("scaling multiplies lengths, areas and radii by the right powers") {
  std::mt19937_64 rng(5);
  for (const auto& t : testing_support::corpus(100, 11)) {
    Rational k = testing_support::random_rational(rng, 40, 17).abs();
    if (k.is_zero()) k = Rational(3, 7);
    const DerivedScalars d = derive(t);
    const DerivedScalars ds = derive(scaled(t, k));
    const Rational k2 = square(k);
    CHECK(ds.s == k * d.s);
    CHECK(ds.area_sq == square(k2) * d.area_sq);
    CHECK(ds.circumradius_sq == k2 * d.circumradius_sq);
    CHECK(ds.inradius_sq == k2 * d.inradius_sq);
    CHECK(ds.inradius_times_R == k2 * d.inradius_times_R);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(ds.exradius_sq[i] == k2 * d.exradius_sq[i]);
      CHECK(ds.exradius_times_R[i] == k2 * d.exradius_times_R[i]);
    }
  }
}

TEST_CASE("permuting sides permutes exradii and fixes everything else") {
  const std::array<Side, 3> order = {Side::C, Side::A, Side::B};
  for (const auto& t : testing_support::corpus(100, 13)) {
    const DerivedScalars d = derive(t);
    const DerivedScalars dp = derive(permuted(t, order));
    CHECK(dp.s == d.s);
    CHECK(dp.area_sq == d.area_sq);
    CHECK(dp.circumradius_sq == d.circumradius_sq);
    CHECK(dp.inradius_sq == d.inradius_sq);
    CHECK(dp.inradius_times_R == d.inradius_times_R);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(dp.exradius_sq[i] == d.exradius_sq[index(order[i])]);
      CHECK(dp.exradius_times_R[i] == d.exradius_times_R[index(order[i])]);
    }
  }
}
