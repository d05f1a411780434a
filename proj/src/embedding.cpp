#include "feuerbach/embedding.hpp"

#include <algorithm>

namespace feuerbach {

bool Tolerance::close(double x, double y) const {
  return std::abs(x - y) <= absolute + relative * std::max(std::abs(x), std::abs(y));
}

bool Tolerance::close(double x, double y, double scale) const {
  const double ref = std::max({std::abs(x), std::abs(y), std::abs(scale)});
  return std::abs(x - y) <= absolute + relative * ref;
}

Point2 Embedding::vertex(Vertex v) const {
  switch (v) {
    case Vertex::A: return A;
    case Vertex::B: return B;
    case Vertex::C: return C;
  }
  return C;
}

namespace {

Point2 perp(Point2 d) { return {-d.y, d.x}; }
Point2 midpoint(Point2 p, Point2 q) { return 0.5 * (p + q); }
Point2 unit(Point2 d) { return (1.0 / norm(d)) * d; }

// Intersection of p1 + t d1 and p2 + s d2.
Point2 intersect(Point2 p1, Point2 d1, Point2 p2, Point2 d2, const char* what) {
  const double det = cross(d1, d2);
  if (std::abs(det) < kMinIntersectionSine * norm(d1) * norm(d2)) {
    throw Error(ErrorCode::IllConditioned,
                std::string("near-parallel lines while constructing ") + what);
  }
  const double t = cross(p2 - p1, d2) / det;
  return p1 + t * d1;
}

Point2 circumcenter_of(Point2 p, Point2 q, Point2 r, const char* what) {
  return intersect(midpoint(p, q), perp(q - p), midpoint(q, r), perp(r - q), what);
}

double distance_to_line(Point2 p, Point2 on_line, Point2 dir) {
  return std::abs(cross(p - on_line, dir)) / norm(dir);
}

}  // namespace

Embedding embed(const Triangle& t) {
  const double a = t.a().to_double();
  const double b = t.b().to_double();
  const double c = t.c().to_double();

  const double ax = (a * a + c * c - b * b) / (2.0 * a);
  const double ay = std::sqrt(std::max(0.0, c * c - ax * ax));
  const Point2 A{ax, ay};
  const Point2 B{0.0, 0.0};
  const Point2 C{a, 0.0};

  Embedding e;
  e.canonical_offset = circumcenter_of(A, B, C, "circumcenter");
  e.A = A - e.canonical_offset;
  e.B = B - e.canonical_offset;
  e.C = C - e.canonical_offset;
  e.circumcenter_origin = true;
  return e;
}

OracleCenters construct_centers(const Embedding& e) {
  const Point2 A = e.A, B = e.B, C = e.C;
  OracleCenters oc;
  auto& pts = oc.points;

  pts[index(CenterId::Circumcenter)] = circumcenter_of(A, B, C, "circumcenter");
  pts[index(CenterId::Centroid)] =
      intersect(A, midpoint(B, C) - A, B, midpoint(C, A) - B, "centroid");
  pts[index(CenterId::Orthocenter)] = intersect(A, perp(C - B), B, perp(A - C), "orthocenter");
  pts[index(CenterId::NinePointCenter)] =
      circumcenter_of(midpoint(B, C), midpoint(C, A), midpoint(A, B), "nine-point center");

  const Point2 ab = unit(B - A), ac = unit(C - A), bc = unit(C - B);
  pts[index(CenterId::Incenter)] = intersect(A, ab + ac, B, bc - ab, "incenter");
  // Each excenter sits on the external bisectors of the two other vertices.
  pts[index(CenterId::ExcenterA)] = intersect(B, bc + ab, C, bc - ac, "excenter I_a");
  pts[index(CenterId::ExcenterB)] = intersect(A, ab - ac, C, bc - ac, "excenter I_b");
  pts[index(CenterId::ExcenterC)] = intersect(A, ab - ac, B, (-1.0) * ab - bc, "excenter I_c");

  const Point2 O = pts[index(CenterId::Circumcenter)];
  oc.circumradius = (distance(A, O) + distance(B, O) + distance(C, O)) / 3.0;
  // Radii as distances from each centre to a side line it touches.
  oc.inradius = distance_to_line(pts[index(CenterId::Incenter)], B, C - B);
  oc.exradius[index(Side::A)] = distance_to_line(pts[index(CenterId::ExcenterA)], B, C - B);
  oc.exradius[index(Side::B)] = distance_to_line(pts[index(CenterId::ExcenterB)], C, A - C);
  oc.exradius[index(Side::C)] = distance_to_line(pts[index(CenterId::ExcenterC)], A, B - A);
  return oc;
}

Point2 oracle_tangency_point(const OracleCenters& oc, CenterId center, double radius) {
  const Point2 n = oc[CenterId::NinePointCenter];
  const Point2 x = oc[center];
  const double half_r = 0.5 * oc.circumradius;
  const Point2 dir = x - n;
  if (norm(dir) == 0.0) {
    throw Error(ErrorCode::CoincidentCircles, "circle centres coincide; no unique tangency point");
  }
  const Point2 d = unit(dir);
  const Point2 near = n + half_r * d;
  const Point2 far = n + (-half_r) * d;
  const double miss_near = std::abs(distance(near, x) - radius);
  const double miss_far = std::abs(distance(far, x) - radius);
  return miss_near <= miss_far ? near : far;
}

}  // namespace feuerbach
