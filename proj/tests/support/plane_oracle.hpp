#pragma once

// Test-only reference geometry in long double. Deliberately shares nothing
// with the library: vertices are placed by the law of cosines, centers come
// from textbook Cartesian formulas (weighted vertex averages, 2x2 solves), and
// radii from point-to-line distances. Used to confirm frozen expected values
// before they are asserted exactly.

#include <array>
#include <cmath>

namespace plane_oracle {

using real = long double;

struct P {
  real x, y;
};

inline P operator+(P p, P q) { return {p.x + q.x, p.y + q.y}; }
inline P operator-(P p, P q) { return {p.x - q.x, p.y - q.y}; }
inline P operator*(real k, P p) { return {k * p.x, k * p.y}; }
inline real dist(P p, P q) { return std::hypot(p.x - q.x, p.y - q.y); }

// Solve [a b; c d] [x; y] = [e; f].
inline P solve(real a, real b, real c, real d, real e, real f) {
  const real det = a * d - b * c;
  return {(e * d - b * f) / det, (a * f - e * c) / det};
}

// Equidistant point from p, q, r.
inline P circumcenter(P p, P q, P r) {
  return solve(2 * (q.x - p.x), 2 * (q.y - p.y), 2 * (r.x - p.x), 2 * (r.y - p.y),
               q.x * q.x + q.y * q.y - p.x * p.x - p.y * p.y,
               r.x * r.x + r.y * r.y - p.x * p.x - p.y * p.y);
}

inline real line_distance(P p, P a, P b) {
  return std::abs((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / dist(a, b);
}

struct Figure {
  real a, b, c;
  P A, B, C;
  P O, H, N, I;
  std::array<P, 3> ex;  // opposite A, B, C
  real s, area, R, r;
  std::array<real, 3> rx;
};

inline Figure build(real a, real b, real c) {
  Figure f{};
  f.a = a;
  f.b = b;
  f.c = c;
  // A at the origin, B on the x-axis.
  f.A = {0, 0};
  f.B = {c, 0};
  const real cos_A = (b * b + c * c - a * a) / (2 * b * c);
  f.C = {b * cos_A, b * std::sqrt(1 - cos_A * cos_A)};

  f.O = circumcenter(f.A, f.B, f.C);
  // Altitudes: (X - A).(C - B) = 0 and (X - B).(C - A) = 0.
  f.H = solve(f.C.x - f.B.x, f.C.y - f.B.y, f.C.x - f.A.x, f.C.y - f.A.y,
              f.A.x * (f.C.x - f.B.x) + f.A.y * (f.C.y - f.B.y),
              f.B.x * (f.C.x - f.A.x) + f.B.y * (f.C.y - f.A.y));
  f.N = circumcenter(0.5L * (f.B + f.C), 0.5L * (f.A + f.C), 0.5L * (f.A + f.B));
  f.I = (1 / (a + b + c)) * (a * f.A + b * f.B + c * f.C);
  f.ex[0] = (1 / (-a + b + c)) * ((-a) * f.A + b * f.B + c * f.C);
  f.ex[1] = (1 / (a - b + c)) * (a * f.A + (-b) * f.B + c * f.C);
  f.ex[2] = (1 / (a + b - c)) * (a * f.A + b * f.B + (-c) * f.C);

  f.s = (a + b + c) / 2;
  f.area = std::abs((f.B.x - f.A.x) * (f.C.y - f.A.y) - (f.C.x - f.A.x) * (f.B.y - f.A.y)) / 2;
  f.R = dist(f.O, f.A);
  f.r = line_distance(f.I, f.B, f.C);
  f.rx[0] = line_distance(f.ex[0], f.B, f.C);
  f.rx[1] = line_distance(f.ex[1], f.C, f.A);
  f.rx[2] = line_distance(f.ex[2], f.A, f.B);
  return f;
}

inline real sq(real x) { return x * x; }

}  // namespace plane_oracle
