#include "feuerbach/report_json.hpp"

#include <cmath>

#include "feuerbach/oracle_compare.hpp"

namespace feuerbach {

using nlohmann::json;

json triangle_json(const Triangle& t) {
  return {{"a", t.a().str()}, {"b", t.b().str()}, {"c", t.c().str()}};
}

json report_json(const IdentityReport& r) {
  return {{"theorem", name(r.theorem)},
          {"lhs", r.lhs.str()},
          {"rhs", r.rhs.str()},
          {"pass", r.pass}};
}

namespace {

json coeffs_json(const CoeffTriple& x) {
  return {{"alpha", x.alpha.str()}, {"beta", x.beta.str()}, {"gamma", x.gamma.str()}};
}

json point_json(Point2 p) { return {{"x", p.x}, {"y", p.y}}; }

}  // namespace

json verification_json(const Triangle& t, const Verification& v) {
  json reports = json::array();
  for (const auto& r : v.reports) reports.push_back(report_json(r));

  json tangency = json::array();
  for (const auto& tr : v.tangency) {
    json entry = {{"circle", name(tr.circle)},
                  {"kind", name(tr.kind)},
                  {"center_distance_sq", tr.center_distance_sq.str()}};
    if (tr.point) {
      entry["scale"] = tr.point->scale.str();
      entry["point"] = coeffs_json(tr.point->coeffs);
    }
    tangency.push_back(std::move(entry));
  }
  return {{"triangle", triangle_json(t)},
          {"reports", std::move(reports)},
          {"tangency", std::move(tangency)},
          {"all_pass", v.all_pass}};
}

json centers_json(const Triangle& t) {
  const Embedding e = embed(t);
  json centers = json::array();
  for (CenterId id : kAllCenters) {
    const CoeffTriple x = coeffs(id, t);
    const Point2 p = realize(x, e);
    centers.push_back({{"center", symbol(id)},
                       {"coeffs", coeffs_json(x)},
                       {"position", point_json(p)},
                       {"canonical", point_json(e.to_canonical(p))}});
  }
  return {{"triangle", triangle_json(t)}, {"centers", std::move(centers)}};
}

json distances_json(const Triangle& t) {
  const DerivedScalars d = derive(t);
  json rows = json::array();
  for (std::size_t i = 0; i < kAllCenters.size(); ++i) {
    for (std::size_t j = i + 1; j < kAllCenters.size(); ++j) {
      const Rational sq = squared_distance(kAllCenters[i], kAllCenters[j], d, t);
      rows.push_back({{"p", symbol(kAllCenters[i])},
                      {"q", symbol(kAllCenters[j])},
                      {"squared", sq.str()},
                      {"length", std::sqrt(sq.to_double())}});
    }
  }
  return {{"triangle", triangle_json(t)}, {"distances", std::move(rows)}};
}

json fuzz_json(const FuzzResult& r) {
  json failures = json::array();
  json flagged = json::array();
  for (const auto& s : r.samples) {
    json entry = {{"index", s.index}, {"triangle", triangle_json(s.triangle)}, {"detail", s.detail}};
    if (!s.pass()) failures.push_back(entry);
    if (s.flagged) flagged.push_back(std::move(entry));
  }
  return {{"seed", r.config.seed},
          {"count", r.samples.size()},
          {"max_denominator", r.config.max_denominator},
          {"passed", r.passed},
          {"flagged", r.flagged},
          {"failures", std::move(failures)},
          {"flagged_samples", std::move(flagged)}};
}

}  // namespace feuerbach
