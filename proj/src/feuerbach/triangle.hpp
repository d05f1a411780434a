#pragma once

#include <array>

#include "feuerbach/rational.hpp"

namespace feuerbach {

// Side labels follow the vertex opposite each side: a = |BC|, b = |CA|,
// c = |AB|. With u, v, w the circumcenter-to-vertex vectors of A, B, C this is
// a = |v - w|, b = |u - w|, c = |u - v|.
enum class Side { A = 0, B = 1, C = 2 };

inline constexpr std::array<Side, 3> kSides = {Side::A, Side::B, Side::C};

inline constexpr std::size_t index(Side s) { return static_cast<std::size_t>(s); }
char label(Side s);

// Vertices A, B, C; the basis vectors u, v, w point from the circumcenter to them.
enum class Vertex { A = 0, B = 1, C = 2 };

inline constexpr std::array<Vertex, 3> kVertices = {Vertex::A, Vertex::B, Vertex::C};

inline constexpr std::size_t index(Vertex v) { return static_cast<std::size_t>(v); }
inline constexpr Side opposite(Vertex v) { return static_cast<Side>(index(v)); }
inline constexpr Vertex opposite(Side s) { return static_cast<Vertex>(index(s)); }
char label(Vertex v);

/// A non-degenerate triangle given by exact side lengths.
class Triangle {
 public:
  /// Throws NonPositiveSide or DegenerateTriangle.
  static Triangle make(Rational a, Rational b, Rational c);

  const Rational& a() const { return sides_[0]; }
  const Rational& b() const { return sides_[1]; }
  const Rational& c() const { return sides_[2]; }
  const Rational& side(Side s) const { return sides_[index(s)]; }
  const std::array<Rational, 3>& sides() const { return sides_; }

  bool is_equilateral() const { return sides_[0] == sides_[1] && sides_[1] == sides_[2]; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  explicit Triangle(std::array<Rational, 3> sides) : sides_(std::move(sides)) {}
  std::array<Rational, 3> sides_;
};

/// Exact scalars derived from the side lengths.
///
/// Only squares and products of radii are stored; each is rational for
/// rational sides even though R, r and the exradii themselves usually are not.
struct DerivedScalars {
  Rational s;                 // semiperimeter
  Rational area_sq;           // Heron, s(s-a)(s-b)(s-c)
  Rational circumradius_sq;   // R^2 = a^2 b^2 c^2 / (16 area^2)
  Rational inradius_sq;       // r^2 = area^2 / s^2
  Rational inradius_times_R;  // R r = abc / (4s)
  std::array<Rational, 3> exradius_sq;       // indexed by opposite side
  std::array<Rational, 3> exradius_times_R;  // abc / (4(s - x))

  const Rational& exradius_sq_for(Side x) const { return exradius_sq[index(x)]; }
  const Rational& exradius_times_R_for(Side x) const { return exradius_times_R[index(x)]; }
};

/// 16 * area^2 by the polynomial form 2a^2b^2 + 2a^2c^2 + 2b^2c^2 - a^4 - b^4 - c^4.
Rational sixteen_area_sq_polynomial(const Rational& a, const Rational& b, const Rational& c);

/// Computes every derived scalar and checks that both forms of Heron's formula
/// agree (a mismatch is an internal error and throws std::logic_error).
DerivedScalars derive(const Triangle& t);

struct EulerInequality {
  bool holds = false;     // R^2 >= 4 r^2, i.e. R/2 >= r
  bool equality = false;  // R^2 == 4 r^2
};

EulerInequality euler_inequality(const DerivedScalars& d);

/// Multiplies all three sides by k > 0.
Triangle scaled(const Triangle& t, const Rational& k);

/// Triangle with sides (side(order[0]), side(order[1]), side(order[2])).
Triangle permuted(const Triangle& t, const std::array<Side, 3>& order);

}  // namespace feuerbach
