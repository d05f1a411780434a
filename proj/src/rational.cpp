#include "feuerbach/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <ostream>

namespace feuerbach {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::ZeroDenominator: return "zero denominator";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::NonPositiveSide: return "non-positive side";
    case ErrorCode::DegenerateTriangle: return "degenerate triangle";
    case ErrorCode::CoincidentCircles: return "coincident circles";
    case ErrorCode::IllConditioned: return "ill-conditioned";
    case ErrorCode::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto p = body.substr(0, slash);
    const auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) parse_fail(text);
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) {
      throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
    }
  } else {
    const auto dot = body.find('.');
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part =
        dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) parse_fail(text);
    if (!int_part.empty() && !all_digits(int_part)) parse_fail(text);
    if (!frac_part.empty() && !all_digits(frac_part)) parse_fail(text);
    std::string digits = std::string(int_part) + std::string(frac_part);
    num.set_str(digits, 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  }
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

double Rational::to_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
  // 53-bit precision already matches double, so the extraction is exact
  // unless the exponent is out of range.
  const double result = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  if (std::isinf(result)) {
    throw Error(ErrorCode::Overflow, "rational magnitude exceeds the double range");
  }
  return result;
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::exact_sqrt() const {
  if (!is_perfect_square()) {
    throw Error(ErrorCode::InvalidArgument, str() + " is not the square of a rational");
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational square(const Rational& x) { return x * x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace feuerbach
