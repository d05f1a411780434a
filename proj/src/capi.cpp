#include "feuerbach/feuerbach.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "feuerbach/centers.hpp"
#include "feuerbach/fuzz.hpp"
#include "feuerbach/identities.hpp"
#include "feuerbach/oracle_compare.hpp"
#include "feuerbach/render_svg.hpp"
#include "feuerbach/report_json.hpp"

using namespace feuerbach;

struct fb_triangle {
  Triangle value;
};

struct fb_verification {
  Triangle triangle;
  Verification value;
};

struct fb_fuzz_result {
  FuzzResult value;
};

namespace {

thread_local std::string tl_last_error;

fb_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return FB_ERR_PARSE;
    case ErrorCode::ZeroDenominator: return FB_ERR_ZERO_DENOMINATOR;
    case ErrorCode::Overflow: return FB_ERR_OVERFLOW;
    case ErrorCode::NonPositiveSide: return FB_ERR_NON_POSITIVE_SIDE;
    case ErrorCode::DegenerateTriangle: return FB_ERR_DEGENERATE_TRIANGLE;
    case ErrorCode::CoincidentCircles: return FB_ERR_COINCIDENT_CIRCLES;
    case ErrorCode::IllConditioned: return FB_ERR_ILL_CONDITIONED;
    case ErrorCode::InvalidArgument: return FB_ERR_INVALID_ARGUMENT;
  }
  return FB_ERR_INTERNAL;
}

fb_status fail(fb_status status, std::string message) {
  tl_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
fb_status guarded(Body&& body) {
  try {
    tl_last_error.clear();
    return body();
  } catch (const Error& err) {
    return fail(to_status(err.code()), err.what());
  } catch (const std::bad_alloc&) {
    return fail(FB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& err) {
    return fail(FB_ERR_INTERNAL, err.what());
  }
}

fb_status null_argument(const char* name) {
  return fail(FB_ERR_NULL_ARGUMENT, std::string("null pointer: ") + name);
}

#define FB_REQUIRE(ptr) \
  do {                  \
    if (!(ptr)) return null_argument(#ptr); \
  } while (0)

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

CenterId center_id(fb_center c) {
  if (c < FB_CENTER_CIRCUMCENTER || c > FB_CENTER_EXCENTER_C) {
    throw Error(ErrorCode::InvalidArgument, "center index out of range");
  }
  return static_cast<CenterId>(c);
}

Side side_id(fb_side s) {
  if (s < FB_SIDE_A || s > FB_SIDE_C) throw Error(ErrorCode::InvalidArgument, "side index out of range");
  return static_cast<Side>(s);
}

Circle circle_id(fb_circle c) {
  if (c < FB_CIRCLE_INCIRCLE || c > FB_CIRCLE_EXCIRCLE_C) {
    throw Error(ErrorCode::InvalidArgument, "circle index out of range");
  }
  return static_cast<Circle>(c);
}

fb_tangency_kind kind_id(TangencyKind k) {
  switch (k) {
    case TangencyKind::Internal: return FB_TANGENCY_INTERNAL;
    case TangencyKind::External: return FB_TANGENCY_EXTERNAL;
    case TangencyKind::Coincident: return FB_TANGENCY_COINCIDENT;
    case TangencyKind::None: return FB_TANGENCY_NONE;
  }
  return FB_TANGENCY_NONE;
}

}  // namespace

extern "C" {

const char* fb_version(void) { return kVersion; }

const char* fb_last_error(void) { return tl_last_error.c_str(); }

const char* fb_status_string(fb_status status) {
  switch (status) {
    case FB_OK: return "ok";
    case FB_ERR_NULL_ARGUMENT: return "null argument";
    case FB_ERR_PARSE: return "parse error";
    case FB_ERR_ZERO_DENOMINATOR: return "zero denominator";
    case FB_ERR_OVERFLOW: return "overflow";
    case FB_ERR_NON_POSITIVE_SIDE: return "non-positive side";
    case FB_ERR_DEGENERATE_TRIANGLE: return "degenerate triangle";
    case FB_ERR_COINCIDENT_CIRCLES: return "coincident circles";
    case FB_ERR_ILL_CONDITIONED: return "ill-conditioned";
    case FB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void fb_string_free(char* s) { std::free(s); }

const char* fb_center_symbol(fb_center center) {
  if (center < FB_CENTER_CIRCUMCENTER || center > FB_CENTER_EXCENTER_C) return "?";
  return symbol(static_cast<CenterId>(center)).data();
}

const char* fb_theorem_name(fb_theorem theorem) {
  if (theorem < FB_THEOREM_EULER || theorem > FB_THEOREM_ORTHOCENTER_DISTANCE) return "?";
  return name(static_cast<Theorem>(theorem)).data();
}

const char* fb_circle_name(fb_circle circle) {
  if (circle < FB_CIRCLE_INCIRCLE || circle > FB_CIRCLE_EXCIRCLE_C) return "?";
  return name(static_cast<Circle>(circle)).data();
}

const char* fb_tangency_kind_name(fb_tangency_kind kind) {
  if (kind < FB_TANGENCY_INTERNAL || kind > FB_TANGENCY_NONE) return "?";
  return name(static_cast<TangencyKind>(kind)).data();
}

fb_status fb_rational_normalize(const char* text, char** out) {
  FB_REQUIRE(text);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(Rational::parse(text).str());
    return FB_OK;
  });
}

fb_status fb_rational_to_double(const char* text, double* out) {
  FB_REQUIRE(text);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = Rational::parse(text).to_double();
    return FB_OK;
  });
}

fb_status fb_triangle_create(const char* a, const char* b, const char* c, fb_triangle** out) {
  FB_REQUIRE(a);
  FB_REQUIRE(b);
  FB_REQUIRE(c);
  FB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new fb_triangle{Triangle::make(Rational::parse(a), Rational::parse(b), Rational::parse(c))};
    return FB_OK;
  });
}

void fb_triangle_destroy(fb_triangle* t) { delete t; }

fb_status fb_triangle_side(const fb_triangle* t, fb_side side, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(t->value.side(side_id(side)).str());
    return FB_OK;
  });
}

fb_status fb_triangle_quantity(const fb_triangle* t, fb_quantity q, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    const DerivedScalars d = derive(t->value);
    const Rational* value = nullptr;
    switch (q) {
      case FB_Q_SEMIPERIMETER: value = &d.s; break;
      case FB_Q_AREA_SQ: value = &d.area_sq; break;
      case FB_Q_CIRCUMRADIUS_SQ: value = &d.circumradius_sq; break;
      case FB_Q_INRADIUS_SQ: value = &d.inradius_sq; break;
      case FB_Q_INRADIUS_TIMES_R: value = &d.inradius_times_R; break;
      case FB_Q_EXRADIUS_SQ_A:
      case FB_Q_EXRADIUS_SQ_B:
      case FB_Q_EXRADIUS_SQ_C: value = &d.exradius_sq[q - FB_Q_EXRADIUS_SQ_A]; break;
      case FB_Q_EXRADIUS_TIMES_R_A:
      case FB_Q_EXRADIUS_TIMES_R_B:
      case FB_Q_EXRADIUS_TIMES_R_C: value = &d.exradius_times_R[q - FB_Q_EXRADIUS_TIMES_R_A]; break;
    }
    if (!value) return fail(FB_ERR_INVALID_ARGUMENT, "quantity index out of range");
    *out = dup_string(value->str());
    return FB_OK;
  });
}

fb_status fb_euler_inequality(const fb_triangle* t, int* holds, int* equality) {
  FB_REQUIRE(t);
  return guarded([&] {
    const EulerInequality e = euler_inequality(derive(t->value));
    if (holds) *holds = e.holds;
    if (equality) *equality = e.equality;
    return FB_OK;
  });
}

fb_status fb_center_coeffs(const fb_triangle* t, fb_center center, char** alpha, char** beta,
                           char** gamma) {
  FB_REQUIRE(t);
  FB_REQUIRE(alpha);
  FB_REQUIRE(beta);
  FB_REQUIRE(gamma);
  return guarded([&] {
    const CoeffTriple x = coeffs(center_id(center), t->value);
    std::string sa = x.alpha.str(), sb = x.beta.str(), sg = x.gamma.str();
    *alpha = dup_string(sa);
    *beta = dup_string(sb);
    *gamma = dup_string(sg);
    return FB_OK;
  });
}

fb_status fb_center_position(const fb_triangle* t, fb_center center, int canonical, double* x,
                             double* y) {
  FB_REQUIRE(t);
  FB_REQUIRE(x);
  FB_REQUIRE(y);
  return guarded([&] {
    const Embedding e = embed(t->value);
    Point2 p = realize(coeffs(center_id(center), t->value), e);
    if (canonical) p = e.to_canonical(p);
    *x = p.x;
    *y = p.y;
    return FB_OK;
  });
}

fb_status fb_squared_distance(const fb_triangle* t, fb_center p, fb_center q, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(squared_distance(center_id(p), center_id(q), t->value).str());
    return FB_OK;
  });
}

fb_status fb_squared_norm(const fb_triangle* t, const char* alpha, const char* beta,
                          const char* gamma, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(alpha);
  FB_REQUIRE(beta);
  FB_REQUIRE(gamma);
  FB_REQUIRE(out);
  return guarded([&] {
    const CoeffTriple x{Rational::parse(alpha), Rational::parse(beta), Rational::parse(gamma)};
    *out = dup_string(squared_norm(x, t->value).str());
    return FB_OK;
  });
}

fb_status fb_gram_entry(const fb_triangle* t, fb_side i, fb_side j, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    const Vertex vi = opposite(side_id(i));
    const Vertex vj = opposite(side_id(j));
    *out = dup_string(gram_entry(vi, vj, t->value).str());
    return FB_OK;
  });
}

fb_status fb_bisector_membership(const fb_triangle* t, fb_center center, char** lambda, char** mu,
                                 int* pass) {
  FB_REQUIRE(t);
  return guarded([&] {
    const BisectorCheck check = bisector_membership(center_id(center), t->value);
    put(lambda, check.lambda.str());
    put(mu, check.mu.str());
    if (pass) *pass = check.pass;
    return FB_OK;
  });
}

fb_status fb_verify_all(const fb_triangle* t, fb_verification** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new fb_verification{t->value, verify_all(t->value)};
    return FB_OK;
  });
}

void fb_verification_destroy(fb_verification* v) { delete v; }

int fb_verification_all_pass(const fb_verification* v) { return v && v->value.all_pass ? 1 : 0; }

size_t fb_verification_report_count(const fb_verification* v) {
  return v ? v->value.reports.size() : 0;
}

fb_status fb_verification_report(const fb_verification* v, size_t i, fb_theorem* theorem,
                                 char** lhs, char** rhs, int* pass) {
  FB_REQUIRE(v);
  if (i >= v->value.reports.size()) return fail(FB_ERR_INVALID_ARGUMENT, "report index out of range");
  return guarded([&] {
    const IdentityReport& r = v->value.reports[i];
    if (theorem) *theorem = static_cast<fb_theorem>(r.theorem);
    put(lhs, r.lhs.str());
    put(rhs, r.rhs.str());
    if (pass) *pass = r.ok();
    return FB_OK;
  });
}

fb_status fb_verification_tangency(const fb_verification* v, size_t i, fb_circle* circle,
                                   fb_tangency_kind* kind, char** scale) {
  FB_REQUIRE(v);
  if (i >= v->value.tangency.size()) {
    return fail(FB_ERR_INVALID_ARGUMENT, "tangency index out of range");
  }
  return guarded([&] {
    const TangencyResult& r = v->value.tangency[i];
    if (circle) *circle = static_cast<fb_circle>(r.circle);
    if (kind) *kind = kind_id(r.kind);
    if (scale) *scale = r.point ? dup_string(r.point->scale.str()) : nullptr;
    return FB_OK;
  });
}

fb_status fb_verification_json(const fb_verification* v, char** out) {
  FB_REQUIRE(v);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(verification_json(v->triangle, v->value).dump(2));
    return FB_OK;
  });
}

fb_status fb_tangency_point(const fb_triangle* t, fb_circle circle, char** scale, char** alpha,
                            char** beta, char** gamma) {
  FB_REQUIRE(t);
  return guarded([&] {
    const TangencyPoint tp = tangency_point(t->value, circle_id(circle));
    put(scale, tp.scale.str());
    put(alpha, tp.coeffs.alpha.str());
    put(beta, tp.coeffs.beta.str());
    put(gamma, tp.coeffs.gamma.str());
    return FB_OK;
  });
}

fb_status fb_compare(const fb_triangle* t, double tolerance_rel, double tolerance_abs, int* agree,
                     int* flagged) {
  FB_REQUIRE(t);
  if (!(tolerance_rel >= 0.0) || !(tolerance_abs >= 0.0)) {
    return fail(FB_ERR_INVALID_ARGUMENT, "tolerances must be non-negative");
  }
  return guarded([&] {
    const Comparison cmp = compare(t->value, Tolerance{tolerance_abs, tolerance_rel});
    if (agree) *agree = cmp.agree;
    if (flagged) *flagged = cmp.flagged;
    return FB_OK;
  });
}

fb_status fb_centers_json(const fb_triangle* t, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(centers_json(t->value).dump(2));
    return FB_OK;
  });
}

fb_status fb_distances_json(const fb_triangle* t, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(distances_json(t->value).dump(2));
    return FB_OK;
  });
}

fb_status fb_render_svg(const fb_triangle* t, const char* layers_csv, int width_px,
                        double margin_fraction, char** out) {
  FB_REQUIRE(t);
  FB_REQUIRE(out);
  return guarded([&] {
    RenderOptions opts;
    if (layers_csv) opts.layers = parse_layers(layers_csv);
    opts.width_px = width_px;
    opts.margin_fraction = margin_fraction;
    *out = dup_string(render_svg(t->value, opts));
    return FB_OK;
  });
}

void fb_fuzz_options_default(fb_fuzz_options* opts) {
  if (!opts) return;
  const FuzzConfig defaults;
  opts->seed = defaults.seed;
  opts->count = defaults.count;
  opts->max_denominator = defaults.max_denominator;
  opts->tolerance_rel = defaults.tolerance.relative;
  opts->tolerance_abs = defaults.tolerance.absolute;
  opts->threads = defaults.threads;
}

fb_status fb_fuzz_run(const fb_fuzz_options* opts, fb_fuzz_result** out) {
  FB_REQUIRE(opts);
  FB_REQUIRE(out);
  *out = nullptr;
  if (!(opts->tolerance_rel >= 0.0) || !(opts->tolerance_abs >= 0.0)) {
    return fail(FB_ERR_INVALID_ARGUMENT, "tolerances must be non-negative");
  }
  return guarded([&] {
    FuzzConfig config;
    config.seed = opts->seed;
    config.count = opts->count;
    config.max_denominator = opts->max_denominator;
    config.tolerance = Tolerance{opts->tolerance_abs, opts->tolerance_rel};
    config.threads = opts->threads;
    *out = new fb_fuzz_result{run_fuzz(config)};
    return FB_OK;
  });
}

void fb_fuzz_result_destroy(fb_fuzz_result* r) { delete r; }

size_t fb_fuzz_count(const fb_fuzz_result* r) { return r ? r->value.samples.size() : 0; }
size_t fb_fuzz_passed(const fb_fuzz_result* r) { return r ? r->value.passed : 0; }
size_t fb_fuzz_flagged(const fb_fuzz_result* r) { return r ? r->value.flagged : 0; }

fb_status fb_fuzz_sample(const fb_fuzz_result* r, size_t i, fb_triangle** triangle, int* pass,
                         int* flagged, char** detail) {
  FB_REQUIRE(r);
  if (i >= r->value.samples.size()) return fail(FB_ERR_INVALID_ARGUMENT, "sample index out of range");
  return guarded([&] {
    const FuzzSample& s = r->value.samples[i];
    if (triangle) *triangle = new fb_triangle{s.triangle};
    if (pass) *pass = s.pass();
    if (flagged) *flagged = s.flagged;
    put(detail, s.detail);
    return FB_OK;
  });
}

fb_status fb_fuzz_json(const fb_fuzz_result* r, char** out) {
  FB_REQUIRE(r);
  FB_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(fuzz_json(r->value).dump(2));
    return FB_OK;
  });
}

}  // extern "C"
