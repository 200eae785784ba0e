#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace phm {

using Rational = mpq_class;

/// Tolerance for strict inequalities when any operand is approximate.
inline constexpr double kEpsStrict = 1e-12;

/// A real number that is either an exact rational or a double.
///
/// Arithmetic between two exact operands stays exact; anything touching an
/// approximate operand becomes approximate.
class Scalar {
 public:
  Scalar() : q_(0), d_(0.0), exact_(true) {}
  Scalar(const Rational& q) : q_(q), d_(q.get_d()), exact_(true) {}  // NOLINT
  Scalar(long v) : Scalar(Rational(v)) {}                             // NOLINT
  Scalar(int v) : Scalar(Rational(v)) {}                              // NOLINT

  static Scalar approx(double d) {
    Scalar s;
    s.q_ = 0;
    s.d_ = d;
    s.exact_ = false;
    return s;
  }

  bool exact() const { return exact_; }
  /// Throws ParamError when not exact.
  const Rational& rational() const;
  double to_double() const { return d_; }

  /// -1, 0, +1. Exact when both are exact, plain double comparison otherwise.
  int sign() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  /// Throws ParamError on division by an exact zero.
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  /// Same exactness and same value.
  friend bool operator==(const Scalar& x, const Scalar& y);

  /// "num/den" or "num" for exact values, %.17g (always with '.' or exponent) otherwise.
  std::string str() const;

 private:
  Rational q_;
  double d_;
  bool exact_;
};

Scalar abs(const Scalar& x);
Scalar pow(const Scalar& x, unsigned e);

/// Parses "num/den", an integer, or a decimal literal. Decimals give approximate values.
/// Throws SyntaxError (line 0) on malformed text.
Scalar parse_scalar(std::string_view text);

/// Formats a double so it re-parses as a decimal (never as an integer literal).
std::string format_decimal(double d);

}  // namespace phm
