#pragma once

#include <json.hpp>

#include "feuerbach/fuzz.hpp"
#include "feuerbach/identities.hpp"

namespace feuerbach {

// Rationals are written as canonical "p/q" strings so they parse back exactly.

nlohmann::json triangle_json(const Triangle& t);
nlohmann::json report_json(const IdentityReport& r);

/// {"triangle": {...}, "reports": [{"theorem", "lhs", "rhs", "pass"}],
///  "tangency": [{"circle", "kind", ...}], "all_pass": bool}
nlohmann::json verification_json(const Triangle& t, const Verification& v);

/// Coefficient triple and embedded position for every catalogued center.
nlohmann::json centers_json(const Triangle& t);

/// Exact squared distance and its float length for every unordered pair.
nlohmann::json distances_json(const Triangle& t);

/// Summary plus the failing and flagged samples, in corpus order.
nlohmann::json fuzz_json(const FuzzResult& r);

}  // namespace feuerbach
