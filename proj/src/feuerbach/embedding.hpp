#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "feuerbach/center_id.hpp"
#include "feuerbach/triangle.hpp"

namespace feuerbach {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
  friend bool operator==(Point2, Point2) = default;
};

inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 p, Point2 q) { return norm(p - q); }

/// Floating comparison: |x - y| <= absolute + relative * max(|x|, |y|).
struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-9;

  bool close(double x, double y) const;
  /// Same test with an extra reference magnitude folded into the max, for
  /// quantities whose natural scale is set by the figure rather than by x, y.
  bool close(double x, double y, double scale) const;
};

/// Triangle realised in floating point.
///
/// The canonical placement puts B at (0,0), C at (a,0) and A in the upper
/// half-plane; the vertices are then shifted so the circumcenter sits at the
/// origin, making A, B, C the basis vectors u, v, w.
struct Embedding {
  Point2 A;
  Point2 B;
  Point2 C;
  Point2 canonical_offset;  // circumcenter in the canonical placement
  bool circumcenter_origin = false;

  Point2 vertex(Vertex v) const;
  /// Maps a circumcenter-origin point back to the canonical placement.
  Point2 to_canonical(Point2 p) const { return p + canonical_offset; }
};

Embedding embed(const Triangle& t);

/// Lines whose direction vectors subtend an angle with |sin| below this are
/// treated as parallel and raise IllConditioned.
inline constexpr double kMinIntersectionSine = 1e-10;

/// Triangles with area^2 / s^4 below this are flagged by compare() instead of
/// being held to the tolerance. The equilateral maximum is 1/27.
inline constexpr double kConditioningFloor = 1e-8;

/// Centers found by classical ruler-style constructions on the embedding:
/// perpendicular bisectors (O), medians (G), altitudes (H), internal and
/// external angle bisectors (I, I_a, I_b, I_c), and the circumcenter of the
/// medial triangle (N). Positions share the embedding's frame.
struct OracleCenters {
  std::array<Point2, 8> points;
  double circumradius = 0.0;
  double inradius = 0.0;
  std::array<double, 3> exradius{};  // indexed by opposite side

  Point2 operator[](CenterId id) const { return points[index(id)]; }
};

/// Throws IllConditioned when an intersection is numerically parallel.
OracleCenters construct_centers(const Embedding& e);

/// Tangency point of the nine-point circle with the in- or excircle centred at
/// `center`: the point of the nine-point circle on the line through N and the
/// centre whose distance to that centre best matches `radius`.
Point2 oracle_tangency_point(const OracleCenters& oc, CenterId center, double radius);

}  // namespace feuerbach
