/*
 * feuerbach - exact triangle-center distances and nine-point circle tangency.
 *
 * C interface. All handles are opaque; every fallible call returns an
 * fb_status and leaves a human-readable message in fb_last_error() (per
 * thread). Strings returned through char** are heap-allocated and must be
 * released with fb_string_free(). Rational values cross the boundary as
 * canonical "p/q" text ("p" when q = 1).
 */
#ifndef FEUERBACH_H
#define FEUERBACH_H

#include <stddef.h>
#include <stdint.h>

#if defined(FEUERBACH_BUILDING_LIBRARY)
#define FB_API __attribute__((visibility("default")))
#else
#define FB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fb_status {
  FB_OK = 0,
  FB_ERR_NULL_ARGUMENT = 1,
  FB_ERR_PARSE = 2,
  FB_ERR_ZERO_DENOMINATOR = 3,
  FB_ERR_OVERFLOW = 4,
  FB_ERR_NON_POSITIVE_SIDE = 5,
  FB_ERR_DEGENERATE_TRIANGLE = 6,
  FB_ERR_COINCIDENT_CIRCLES = 7,
  FB_ERR_ILL_CONDITIONED = 8,
  FB_ERR_INVALID_ARGUMENT = 9,
  FB_ERR_INTERNAL = 10
} fb_status;

/* Sides and vertices share indices: side a is opposite vertex A. */
typedef enum fb_side { FB_SIDE_A = 0, FB_SIDE_B = 1, FB_SIDE_C = 2 } fb_side;

typedef enum fb_center {
  FB_CENTER_CIRCUMCENTER = 0,
  FB_CENTER_CENTROID = 1,
  FB_CENTER_NINE_POINT = 2,
  FB_CENTER_ORTHOCENTER = 3,
  FB_CENTER_INCENTER = 4,
  FB_CENTER_EXCENTER_A = 5,
  FB_CENTER_EXCENTER_B = 6,
  FB_CENTER_EXCENTER_C = 7
} fb_center;
#define FB_CENTER_COUNT 8

typedef enum fb_theorem {
  FB_THEOREM_EULER = 0,
  FB_THEOREM_FEUERBACH_INCIRCLE = 1,
  FB_THEOREM_FEUERBACH_EXCIRCLE_A = 2,
  FB_THEOREM_FEUERBACH_EXCIRCLE_B = 3,
  FB_THEOREM_FEUERBACH_EXCIRCLE_C = 4,
  FB_THEOREM_ORTHOCENTER_DISTANCE = 5
} fb_theorem;

typedef enum fb_circle {
  FB_CIRCLE_INCIRCLE = 0,
  FB_CIRCLE_EXCIRCLE_A = 1,
  FB_CIRCLE_EXCIRCLE_B = 2,
  FB_CIRCLE_EXCIRCLE_C = 3
} fb_circle;

typedef enum fb_tangency_kind {
  FB_TANGENCY_INTERNAL = 0,
  FB_TANGENCY_EXTERNAL = 1,
  FB_TANGENCY_COINCIDENT = 2,
  FB_TANGENCY_NONE = 3
} fb_tangency_kind;

typedef enum fb_quantity {
  FB_Q_SEMIPERIMETER = 0,
  FB_Q_AREA_SQ = 1,
  FB_Q_CIRCUMRADIUS_SQ = 2,
  FB_Q_INRADIUS_SQ = 3,
  FB_Q_INRADIUS_TIMES_R = 4,
  FB_Q_EXRADIUS_SQ_A = 5,
  FB_Q_EXRADIUS_SQ_B = 6,
  FB_Q_EXRADIUS_SQ_C = 7,
  FB_Q_EXRADIUS_TIMES_R_A = 8,
  FB_Q_EXRADIUS_TIMES_R_B = 9,
  FB_Q_EXRADIUS_TIMES_R_C = 10
} fb_quantity;

typedef struct fb_triangle fb_triangle;
typedef struct fb_verification fb_verification;
typedef struct fb_fuzz_result fb_fuzz_result;

/* ---- library ---------------------------------------------------------- */

FB_API const char* fb_version(void);
/* Message of the most recent failure on the calling thread; "" if none. */
FB_API const char* fb_last_error(void);
FB_API const char* fb_status_string(fb_status status);
FB_API void fb_string_free(char* s);

FB_API const char* fb_center_symbol(fb_center center);
FB_API const char* fb_theorem_name(fb_theorem theorem);
FB_API const char* fb_circle_name(fb_circle circle);
FB_API const char* fb_tangency_kind_name(fb_tangency_kind kind);

/* ---- rationals -------------------------------------------------------- */

/* Parses "p/q" or a decimal literal and writes the canonical form. */
FB_API fb_status fb_rational_normalize(const char* text, char** out);
/* Round-to-nearest conversion; FB_ERR_OVERFLOW instead of infinity. */
FB_API fb_status fb_rational_to_double(const char* text, double* out);

/* ---- triangles -------------------------------------------------------- */

/* a = |BC|, b = |CA|, c = |AB|. Fails with FB_ERR_NON_POSITIVE_SIDE or
 * FB_ERR_DEGENERATE_TRIANGLE for invalid input. */
FB_API fb_status fb_triangle_create(const char* a, const char* b, const char* c,
                                    fb_triangle** out);
FB_API void fb_triangle_destroy(fb_triangle* t);
FB_API fb_status fb_triangle_side(const fb_triangle* t, fb_side side, char** out);
FB_API fb_status fb_triangle_quantity(const fb_triangle* t, fb_quantity q, char** out);
/* R^2 >= 4r^2 and whether it is an equality. */
FB_API fb_status fb_euler_inequality(const fb_triangle* t, int* holds, int* equality);

/* ---- centers and distances ------------------------------------------- */

/* Coefficients of the center in the circumcenter basis u, v, w. */
FB_API fb_status fb_center_coeffs(const fb_triangle* t, fb_center center, char** alpha,
                                  char** beta, char** gamma);
/* Embedded position: circumcenter at the origin when canonical == 0,
 * otherwise the placement with B at (0,0) and C at (a,0). */
FB_API fb_status fb_center_position(const fb_triangle* t, fb_center center, int canonical,
                                    double* x, double* y);
FB_API fb_status fb_squared_distance(const fb_triangle* t, fb_center p, fb_center q, char** out);
/* |alpha u + beta v + gamma w|^2 for arbitrary rational coefficients. */
FB_API fb_status fb_squared_norm(const fb_triangle* t, const char* alpha, const char* beta,
                                 const char* gamma, char** out);
FB_API fb_status fb_gram_entry(const fb_triangle* t, fb_side i, fb_side j, char** out);
/* Incenter or excenter only; FB_ERR_INVALID_ARGUMENT otherwise. */
FB_API fb_status fb_bisector_membership(const fb_triangle* t, fb_center center, char** lambda,
                                        char** mu, int* pass);

/* ---- verification ----------------------------------------------------- */

FB_API fb_status fb_verify_all(const fb_triangle* t, fb_verification** out);
FB_API void fb_verification_destroy(fb_verification* v);
FB_API int fb_verification_all_pass(const fb_verification* v);
FB_API size_t fb_verification_report_count(const fb_verification* v);
/* lhs and rhs may be NULL when not wanted. */
FB_API fb_status fb_verification_report(const fb_verification* v, size_t i, fb_theorem* theorem,
                                        char** lhs, char** rhs, int* pass);
/* i in [0, 4): incircle, excircles a, b, c. scale may be NULL; it is set to
 * NULL when there is no unique tangency point. */
FB_API fb_status fb_verification_tangency(const fb_verification* v, size_t i, fb_circle* circle,
                                          fb_tangency_kind* kind, char** scale);
FB_API fb_status fb_verification_json(const fb_verification* v, char** out);

/* Nine-point tangency point F = N + k (X - N). FB_ERR_COINCIDENT_CIRCLES for
 * the incircle of an equilateral triangle. */
FB_API fb_status fb_tangency_point(const fb_triangle* t, fb_circle circle, char** scale,
                                   char** alpha, char** beta, char** gamma);

/* Exact kernel against the floating construction oracle. */
FB_API fb_status fb_compare(const fb_triangle* t, double tolerance_rel, double tolerance_abs,
                            int* agree, int* flagged);

FB_API fb_status fb_centers_json(const fb_triangle* t, char** out);
FB_API fb_status fb_distances_json(const fb_triangle* t, char** out);

/* ---- rendering -------------------------------------------------------- */

/* layers_csv NULL means every layer. */
FB_API fb_status fb_render_svg(const fb_triangle* t, const char* layers_csv, int width_px,
                               double margin_fraction, char** out);

/* ---- fuzzing ---------------------------------------------------------- */

typedef struct fb_fuzz_options {
  uint64_t seed;
  size_t count;
  uint32_t max_denominator;
  double tolerance_rel;
  double tolerance_abs;
  unsigned threads; /* 0 = hardware concurrency */
} fb_fuzz_options;

FB_API void fb_fuzz_options_default(fb_fuzz_options* opts);
FB_API fb_status fb_fuzz_run(const fb_fuzz_options* opts, fb_fuzz_result** out);
FB_API void fb_fuzz_result_destroy(fb_fuzz_result* r);
FB_API size_t fb_fuzz_count(const fb_fuzz_result* r);
FB_API size_t fb_fuzz_passed(const fb_fuzz_result* r);
FB_API size_t fb_fuzz_flagged(const fb_fuzz_result* r);
/* Any of the out pointers may be NULL. */
FB_API fb_status fb_fuzz_sample(const fb_fuzz_result* r, size_t i, fb_triangle** triangle,
                                int* pass, int* flagged, char** detail);
FB_API fb_status fb_fuzz_json(const fb_fuzz_result* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FEUERBACH_H */
