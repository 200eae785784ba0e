#pragma once

#include <complex>
#include <string>

#include "polyharm/scalar.hpp"

namespace phm {

/// Complex coefficient, either a pair of exact rationals or a complex double.
class Coefficient {
 public:
  Coefficient() : Coefficient(Rational(0), Rational(0)) {}
  Coefficient(const Rational& re, const Rational& im);
  Coefficient(const Scalar& re, const Scalar& im);
  Coefficient(long re, long im) : Coefficient(Rational(re), Rational(im)) {}
  static Coefficient approx(std::complex<double> z);

  bool exact() const { return exact_; }
  bool is_zero() const;
  bool is_one() const;
  std::complex<double> value() const { return value_; }

  /// Exact parts; throw ParamError on approximate coefficients.
  const Rational& re() const;
  const Rational& im() const;
  Scalar real_part() const;
  Scalar imag_part() const;

  /// |value|. Exact whenever |value|^2 is the square of a rational
  /// (always the case for real or purely imaginary values).
  Scalar magnitude() const;
  /// |value|^2, exact for exact coefficients.
  Scalar norm() const;
  /// Exact comparison |value| <= bound (squares compared) for exact inputs.
  bool magnitude_le(const Scalar& bound) const;
  bool magnitude_lt(const Scalar& bound) const;

  Coefficient conj() const;
  Coefficient operator-() const;
  friend Coefficient operator+(const Coefficient& x, const Coefficient& y);
  friend Coefficient operator-(const Coefficient& x, const Coefficient& y);
  friend Coefficient operator*(const Coefficient& x, const Coefficient& y);
  friend Coefficient operator*(const Scalar& s, const Coefficient& x);
  friend Coefficient operator/(const Coefficient& x, const Scalar& s);

  /// Same exactness and same value.
  friend bool operator==(const Coefficient& x, const Coefficient& y);

 private:
  Rational re_, im_;
  std::complex<double> value_;
  bool exact_ = true;
};

}  // namespace phm
