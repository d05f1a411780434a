#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "feuerbach/error.hpp"

namespace feuerbach {

/// Exact rational number backed by GMP.
///
/// Values are always in lowest terms with a positive denominator; every
/// arithmetic operation re-canonicalizes, so `==` is a structural comparison.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p/q" (optional sign on p) or a finite decimal literal such as
  /// "-0.25". Decimals are scaled by a power of ten, never routed through
  /// binary floating point.
  static Rational parse(std::string_view text);

  /// Canonical text: "p/q" in lowest terms, or "p" when q = 1.
  std::string str() const;

  /// Nearest double (round-to-nearest-even). Throws Overflow instead of
  /// returning an infinity.
  double to_double() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  /// True iff the value is the square of a rational.
  bool is_perfect_square() const;
  /// Rational square root; throws InvalidArgument unless is_perfect_square().
  Rational exact_sqrt() const;

  Rational abs() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& l, const Rational& r) { return l.value_ == r.value_; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    const int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational square(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace feuerbach
