#include "polyharm/scalar.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "polyharm/errors.hpp"

namespace phm {

const Rational& Scalar::rational() const {
  if (!exact_) throw ParamError("scalar is not exact: " + str());
  return q_;
}

int Scalar::sign() const {
  if (exact_) return sgn(q_);
  return (d_ > 0) - (d_ < 0);
}

Scalar Scalar::operator-() const {
  if (exact_) return Scalar(Rational(-q_));
  return approx(-d_);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  if (x.exact_ && y.exact_) return Scalar(Rational(x.q_ + y.q_));
  return Scalar::approx(x.d_ + y.d_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  if (x.exact_ && y.exact_) return Scalar(Rational(x.q_ - y.q_));
  return Scalar::approx(x.d_ - y.d_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  if (x.exact_ && y.exact_) return Scalar(Rational(x.q_ * y.q_));
  return Scalar::approx(x.d_ * y.d_);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (x.exact_ && y.exact_) {
    if (sgn(y.q_) == 0) throw ParamError("division by zero");
    return Scalar(Rational(x.q_ / y.q_));
  }
  return Scalar::approx(x.d_ / y.d_);
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.exact_ != y.exact_) return false;
  if (x.exact_) return x.q_ == y.q_;
  return x.d_ == y.d_;
}

std::string Scalar::str() const {
  if (exact_) return q_.get_str();
  return format_decimal(d_);
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar& x, unsigned e) {
  if (x.exact()) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.rational().get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.rational().get_den_mpz_t(), e);
    r.canonicalize();
    return Scalar(r);
  }
  return Scalar::approx(std::pow(x.to_double(), static_cast<double>(e)));
}

std::string format_decimal(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  if (text.empty()) throw SyntaxError(0, "empty number");
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
      throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
    Rational q;
    mpz_class n(strip_plus(num));
    mpz_class d{std::string(den)};
    if (d == 0) throw SyntaxError(0, "zero denominator in '" + std::string(text) + "'");
    q.get_num() = n;
    q.get_den() = d;
    q.canonicalize();
    return Scalar(q);
  }
  if (is_integer_literal(text)) return Scalar(Rational(mpz_class(strip_plus(text))));

  std::string buf(text);
  char* end = nullptr;
  errno = 0;
  double d = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE || !std::isfinite(d))
    throw SyntaxError(0, "malformed number '" + buf + "'");
  return Scalar::approx(d);
}

}  // namespace phm
