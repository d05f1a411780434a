#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "feuerbach/centers.hpp"
#include "feuerbach/embedding.hpp"
#include "feuerbach/identities.hpp"

namespace feuerbach {

/// Supplies coefficient triples to compare(); defaults to coeffs().
using CoeffSource = std::function<CoeffTriple(CenterId, const Triangle&)>;

/// Cartesian position of alpha u + beta v + gamma w in the embedding.
Point2 realize(const CoeffTriple& x, const Embedding& e);

struct CenterAgreement {
  CenterId center = CenterId::Circumcenter;
  Point2 exact;   // coefficients applied to the embedded basis
  Point2 oracle;  // construction
  double error = 0.0;
  bool agree = false;
};

struct DistanceAgreement {
  CenterId p = CenterId::Circumcenter;
  CenterId q = CenterId::Circumcenter;
  double exact_sq = 0.0;   // exact squared distance rounded once
  double oracle_sq = 0.0;  // squared distance between constructed points
  bool agree = false;
};

struct TangencyAgreement {
  Circle circle = Circle::Incircle;
  Point2 exact;   // exact tangency coefficients applied to the basis
  Point2 oracle;  // line/circle construction
  bool agree = false;
  bool on_nine_point_circle = false;  // |F - N| matches R/2
  bool on_circle = false;             // |F - X| matches the radius
};

/// Exact kernel against the construction oracle for one triangle.
///
/// Positions are compared as |p - q| within tolerance, with R joining the
/// magnitudes in the relative term; squared distances likewise with R^2.
/// Triangles below kConditioningFloor, or whose constructions raise
/// IllConditioned, come back flagged.
struct Comparison {
  double conditioning = 0.0;  // area^2 / s^4
  bool flagged = false;
  std::string flag_reason;
  bool basis_agrees = false;  // |u|^2, |v|^2, |w|^2 against the exact R^2
  std::vector<CenterAgreement> centers;
  std::vector<DistanceAgreement> distances;  // every unordered pair
  std::vector<TangencyAgreement> tangency;   // the circles with a unique point
  bool agree = false;

  /// Passing for corpus purposes: either agreeing or flagged.
  bool acceptable() const { return agree || flagged; }
};

Comparison compare(const Triangle& t, const Tolerance& tol, const CoeffSource& source = {});

}  // namespace feuerbach
