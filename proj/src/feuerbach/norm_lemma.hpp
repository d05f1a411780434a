#pragma once

#include "feuerbach/centers.hpp"

namespace feuerbach {

/// |alpha u + beta v + gamma w|^2 by the closed form
///
///   R^2 (alpha + beta + gamma)^2 - (a^2 beta gamma + b^2 alpha gamma + c^2 alpha beta).
///
/// Every distance in the library goes through this function.
Rational squared_norm(const CoeffTriple& x, const DerivedScalars& d, const Triangle& t);
Rational squared_norm(const CoeffTriple& x, const Triangle& t);

/// Squared distance between two catalogued centers.
Rational squared_distance(CenterId p, CenterId q, const Triangle& t);
Rational squared_distance(CenterId p, CenterId q, const DerivedScalars& d, const Triangle& t);

/// Inner product of two basis vectors: <u,u> = R^2 and, for distinct
/// vertices, R^2 - x^2 / 2 with x the side joining them.
Rational gram_entry(Vertex i, Vertex j, const DerivedScalars& d, const Triangle& t);
Rational gram_entry(Vertex i, Vertex j, const Triangle& t);

/// The same squared norm expanded as sum_ij x_i x_j <e_i, e_j>. Independent of
/// squared_norm; exists to cross-check it.
Rational gram_quadratic_form(const CoeffTriple& x, const DerivedScalars& d, const Triangle& t);

}  // namespace feuerbach
