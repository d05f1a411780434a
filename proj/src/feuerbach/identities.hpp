#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "feuerbach/norm_lemma.hpp"

namespace feuerbach {

enum class Theorem {
  Euler,               // |OI|^2 = R^2 - 2Rr
  FeuerbachIncircle,   // |IN|^2 = (R/2 - r)^2, with R/2 >= r
  FeuerbachExcircleA,  // |I_x N|^2 = (R/2 + r_x)^2
  FeuerbachExcircleB,
  FeuerbachExcircleC,
  OrthocenterDistance,  // |OH|^2 = 9R^2 - (a^2 + b^2 + c^2)
};

std::string_view name(Theorem th);
Theorem feuerbach_excircle(Side x);

/// Outcome of one exact identity check.
struct IdentityReport {
  Theorem theorem = Theorem::Euler;
  Rational lhs;  // squared distance through the norm formula
  Rational rhs;  // closed form in the derived scalars
  bool pass = false;  // lhs == rhs
  // Intermediate coefficient identities: the difference triple, its sum and
  // the cross term a^2 beta gamma + b^2 alpha gamma + c^2 alpha beta.
  bool steps_hold = true;
  // Incircle only: R^2 >= 4r^2, which selects |IN| = R/2 - r over r - R/2.
  bool sign_condition = true;

  bool ok() const { return pass && steps_hold && sign_condition; }
};

IdentityReport verify_euler(const Triangle& t);
IdentityReport verify_feuerbach_incircle(const Triangle& t);
IdentityReport verify_feuerbach_excircle(const Triangle& t, Side x);
IdentityReport verify_orthocenter(const Triangle& t);

/// N - I written out: ((s-a)/2s, (s-b)/2s, (s-c)/2s).
CoeffTriple incenter_to_nine_point(const Triangle& t);
/// N - I_x written out; for x = c this is (-(s-b), -(s-a), s) / (2(s-c)).
CoeffTriple excenter_to_nine_point(const Triangle& t, Side x);

enum class Circle { Incircle, ExcircleA, ExcircleB, ExcircleC };

inline constexpr std::array<Circle, 4> kCircles = {Circle::Incircle, Circle::ExcircleA,
                                                   Circle::ExcircleB, Circle::ExcircleC};

std::string_view name(Circle c);
/// Accepts "incircle", "excircle_a" and so on; throws InvalidArgument.
Circle circle_from_name(std::string_view text);
Circle excircle(Side x);
CenterId center_of(Circle c);

enum class TangencyKind { Internal, External, Coincident, None };

std::string_view name(TangencyKind k);

/// Classifies two circles from exact squared data: centre distance d^2,
/// radii squared and the radius product. Internal iff d^2 = (R1 - R2)^2 with
/// d^2 > 0, external iff d^2 = (R1 + R2)^2, coincident iff d^2 = 0 and R1 = R2.
TangencyKind classify_circle_pair(const Rational& distance_sq, const Rational& r1_sq,
                                  const Rational& r2_sq, const Rational& r1_times_r2);

/// Point where the nine-point circle touches a circle, F = N + k (X - N).
///
/// k = R / (R - 2r) for the incircle and R / (R + 2 r_x) for an excircle.
/// Multiplying through by R gives R^2 / (R^2 -+ 2 R r), so k is rational
/// whenever the sides are.
struct TangencyPoint {
  Rational scale;
  CoeffTriple coeffs;
  Rational to_nine_point_center_sq;  // |F - N|^2, expected R^2 / 4
  Rational to_circle_center_sq;      // |F - X|^2, expected radius^2
  bool consequences_hold = false;
};

struct TangencyResult {
  Circle circle = Circle::Incircle;
  TangencyKind kind = TangencyKind::None;
  Rational center_distance_sq;
  std::optional<TangencyPoint> point;  // absent exactly when kind is Coincident or None
};

TangencyResult classify_tangency(const Triangle& t, Circle circle);

/// Throws CoincidentCircles for the incircle of an equilateral triangle.
TangencyPoint tangency_point(const Triangle& t, Circle circle);

struct Verification {
  std::vector<IdentityReport> reports;  // Euler, incircle, excircles a b c, orthocenter
  std::array<TangencyResult, 4> tangency;
  bool all_pass = false;
};

Verification verify_all(const Triangle& t);

}  // namespace feuerbach
