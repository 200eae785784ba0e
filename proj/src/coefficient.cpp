#include "polyharm/coefficient.hpp"

#include <cmath>

#include "polyharm/errors.hpp"

namespace phm {

namespace {

// sqrt of a nonnegative rational when it is itself rational.
bool exact_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  out = Rational(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

Coefficient::Coefficient(const Rational& re, const Rational& im)
    : re_(re), im_(im), value_(re.get_d(), im.get_d()), exact_(true) {}

Coefficient::Coefficient(const Scalar& re, const Scalar& im) {
  if (re.exact() && im.exact()) {
    *this = Coefficient(re.rational(), im.rational());
  } else {
    *this = approx({re.to_double(), im.to_double()});
  }
}

Coefficient Coefficient::approx(std::complex<double> z) {
  Coefficient c;
  c.re_ = 0;
  c.im_ = 0;
  c.value_ = z;
  c.exact_ = false;
  return c;
}

bool Coefficient::is_zero() const {
  if (exact_) return sgn(re_) == 0 && sgn(im_) == 0;
  return value_ == std::complex<double>(0.0, 0.0);
}

bool Coefficient::is_one() const {
  if (exact_) return re_ == 1 && sgn(im_) == 0;
  return value_ == std::complex<double>(1.0, 0.0);
}

const Rational& Coefficient::re() const {
  if (!exact_) throw ParamError("coefficient is not exact");
  return re_;
}

const Rational& Coefficient::im() const {
  if (!exact_) throw ParamError("coefficient is not exact");
  return im_;
}

Scalar Coefficient::real_part() const {
  return exact_ ? Scalar(re_) : Scalar::approx(value_.real());
}

Scalar Coefficient::imag_part() const {
  return exact_ ? Scalar(im_) : Scalar::approx(value_.imag());
}

Scalar Coefficient::norm() const {
  if (exact_) return Scalar(Rational(re_ * re_ + im_ * im_));
  return Scalar::approx(std::norm(value_));
}

Scalar Coefficient::magnitude() const {
  if (exact_) {
    if (sgn(im_) == 0) return Scalar(Rational(abs(re_)));
    if (sgn(re_) == 0) return Scalar(Rational(abs(im_)));
    Rational root;
    if (exact_sqrt(Rational(re_ * re_ + im_ * im_), root)) return Scalar(root);
  }
  return Scalar::approx(std::abs(value_));
}

bool Coefficient::magnitude_le(const Scalar& bound) const {
  if (exact_ && bound.exact()) {
    if (sgn(bound.rational()) < 0) return false;
    return norm().rational() <= bound.rational() * bound.rational();
  }
  return std::abs(value_) <= bound.to_double();
}

bool Coefficient::magnitude_lt(const Scalar& bound) const {
  if (exact_ && bound.exact()) {
    if (sgn(bound.rational()) <= 0) return false;
    return norm().rational() < bound.rational() * bound.rational();
  }
  return std::abs(value_) < bound.to_double();
}

Coefficient Coefficient::conj() const {
  if (exact_) return Coefficient(re_, Rational(-im_));
  return approx(std::conj(value_));
}

Coefficient Coefficient::operator-() const {
  if (exact_) return Coefficient(Rational(-re_), Rational(-im_));
  return approx(-value_);
}

Coefficient operator+(const Coefficient& x, const Coefficient& y) {
  if (x.exact_ && y.exact_) return Coefficient(Rational(x.re_ + y.re_), Rational(x.im_ + y.im_));
  return Coefficient::approx(x.value_ + y.value_);
}

Coefficient operator-(const Coefficient& x, const Coefficient& y) {
  if (x.exact_ && y.exact_) return Coefficient(Rational(x.re_ - y.re_), Rational(x.im_ - y.im_));
  return Coefficient::approx(x.value_ - y.value_);
}

Coefficient operator*(const Coefficient& x, const Coefficient& y) {
  if (x.exact_ && y.exact_) {
    return Coefficient(Rational(x.re_ * y.re_ - x.im_ * y.im_),
                       Rational(x.re_ * y.im_ + x.im_ * y.re_));
  }
  return Coefficient::approx(x.value_ * y.value_);
}

Coefficient operator*(const Scalar& s, const Coefficient& x) {
  if (s.exact() && x.exact_) {
    return Coefficient(Rational(s.rational() * x.re_), Rational(s.rational() * x.im_));
  }
  return Coefficient::approx(s.to_double() * x.value_);
}

Coefficient operator/(const Coefficient& x, const Scalar& s) {
  if (s.exact() && x.exact_) {
    if (sgn(s.rational()) == 0) throw ParamError("division by zero");
    return Coefficient(Rational(x.re_ / s.rational()), Rational(x.im_ / s.rational()));
  }
  return Coefficient::approx(x.value_ / s.to_double());
}

bool operator==(const Coefficient& x, const Coefficient& y) {
  if (x.exact_ != y.exact_) return false;
  if (x.exact_) return x.re_ == y.re_ && x.im_ == y.im_;
  return x.value_ == y.value_;
}

}  // namespace phm
