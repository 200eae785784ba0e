#include "polyharm/series.hpp"

#include <algorithm>
#include <sstream>

#include "polyharm/errors.hpp"

namespace phm {

namespace {

const Coefficient& zero_coefficient() {
  static const Coefficient zero;
  return zero;
}

void check_table(const CoefficientTable& t, int p, char letter) {
  for (const auto& [slot, c] : t) {
    if (slot.n < 1 || slot.k < 1 || slot.k > p) {
      throw InvalidMap(std::string("coefficient ") + letter + " " + std::to_string(slot.n) + " " +
                       std::to_string(slot.k) + " outside 1<=n, 1<=k<=p=" + std::to_string(p));
    }
  }
}

void drop_zeros(CoefficientTable& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second.is_zero(); });
}

// Comparisons honoring the exact/approximate split. Approximate
// non-strict comparisons accept boundary noise up to kEpsStrict; strict
// ones must clear the bound by kEpsStrict.
struct Comparator {
  bool tolerance_used = false;

  bool le(const Scalar& x, const Scalar& y) {
    if (x.exact() && y.exact()) return x.rational() <= y.rational();
    tolerance_used = true;
    return x.to_double() <= y.to_double() + kEpsStrict;
  }
  bool lt(const Scalar& x, const Scalar& y) {
    if (x.exact() && y.exact()) return x.rational() < y.rational();
    tolerance_used = true;
    return x.to_double() < y.to_double() - kEpsStrict;
  }
};

}  // namespace

PolyharmonicMap::PolyharmonicMap(int p, CoefficientTable a, CoefficientTable b)
    : p_(p), a_(std::move(a)), b_(std::move(b)) {
  if (p_ < 1) throw InvalidMap("p must be >= 1, got " + std::to_string(p_));
  check_table(a_, p_, 'a');
  check_table(b_, p_, 'b');
  drop_zeros(a_);
  drop_zeros(b_);
  if (!this->a(1, 1).is_one()) throw InvalidMap("a_{1,1} must equal 1");
  if (!this->b(1, 1).magnitude_lt(Scalar(1))) throw InvalidMap("|b_{1,1}| must be < 1");
  for (const auto* t : {&a_, &b_}) {
    for (const auto& [slot, c] : *t) {
      max_degree_ = std::max(max_degree_, slot.n);
      exact_ = exact_ && c.exact();
    }
  }
}

PolyharmonicMap PolyharmonicMap::identity(int p) {
  return PolyharmonicMap(p, {{{1, 1}, Coefficient(1, 0)}}, {});
}

const Coefficient& PolyharmonicMap::a(int n, int k) const {
  auto it = a_.find({n, k});
  return it == a_.end() ? zero_coefficient() : it->second;
}

const Coefficient& PolyharmonicMap::b(int n, int k) const {
  auto it = b_.find({n, k});
  return it == b_.end() ? zero_coefficient() : it->second;
}

void PolyharmonicMap::for_each_term(
    const std::function<void(Part, Slot, const Coefficient&)>& f) const {
  for (const auto& [slot, c] : a_) f(Part::a, slot, c);
  for (const auto& [slot, c] : b_) f(Part::b, slot, c);
}

PolyharmonicMap PolyharmonicMap::padded(int p) const {
  return PolyharmonicMap(std::max(p, p_), a_, b_);
}

bool PolyharmonicMap::is_normalized() const {
  if (!b(1, 1).is_zero()) return false;
  for (int k = 2; k <= p_; ++k)
    if (!a(1, k).is_zero() || !b(1, k).is_zero()) return false;
  return true;
}

bool operator==(const PolyharmonicMap& x, const PolyharmonicMap& y) {
  return x.p_ == y.p_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::hs_lambda: return "hs-lambda";
    case Family::hs: return "hs";
    case Family::hc: return "hc";
  }
  return "?";
}

Rational weight(int n, int k, const Rational& lambda) {
  return Rational(2 * (k - 1)) + n * (lambda * n + 1 - lambda);
}

MembershipReport membership(const PolyharmonicMap& f, const ClassParams& params) {
  if (params.family == Family::hs_lambda && (params.lambda < 0 || params.lambda > 1))
    throw ParamError("lambda must lie in [0, 1], got " + params.lambda.get_str());

  const Rational lambda = params.family == Family::hs   ? Rational(0)
                          : params.family == Family::hc ? Rational(1)
                                                        : params.lambda;
  MembershipReport r;
  r.params = params;
  const bool approx_weights = params.family == Family::hs_lambda && params.lambda_approximate;

  Scalar row1_lhs;
  Scalar first_weighted;    // sum_{k>=2} (2k-1)(|a_{1,k}|+|b_{1,k}|)
  Scalar first_unweighted;  // sum_{k>=2} (|a_{1,k}|+|b_{1,k}|)
  f.for_each_term([&](Part, Slot s, const Coefficient& c) {
    if (s.n == 1 && s.k == 1) return;  // a_{1,1} = 1 and b_{1,1} handled below
    Scalar m = c.magnitude();
    if (s.n >= 2) {
      const Rational w = weight(s.n, s.k, lambda);
      row1_lhs += approx_weights ? Scalar::approx(w.get_d()) * m : Scalar(w) * m;
    } else {
      first_weighted += Scalar(2 * s.k - 1) * m;
      first_unweighted += m;
    }
  });
  const Scalar b11 = f.b(1, 1).magnitude();

  Comparator cmp;
  r.row1_lhs = row1_lhs;
  if (params.family == Family::hs_lambda) {
    const Scalar s = Scalar(1) + b11 + first_weighted;
    r.row1_rhs = Scalar(2) - s;
    r.row2_value = s;
    const bool lower = cmp.le(Scalar(1), s);
    const bool upper = cmp.lt(s, Scalar(2));
    r.row2_ok = lower && upper;
  } else {
    r.row1_rhs = Scalar(1) - b11 - first_weighted;
    r.row2_value = b11 + first_unweighted;
    const bool lower = cmp.le(Scalar(0), r.row2_value);
    const bool upper = cmp.lt(r.row2_value, Scalar(1));
    r.row2_ok = lower && upper;
  }
  r.row1_margin = r.row1_rhs - r.row1_lhs;
  const bool row1_ok = cmp.le(Scalar(0), r.row1_margin);
  r.normalized_ok = f.is_normalized();
  r.member = row1_ok && r.row2_ok && (!params.normalized || r.normalized_ok);
  r.exact = !approx_weights && r.row1_lhs.exact() && r.row1_rhs.exact() && r.row2_value.exact();
  r.tolerance_used = cmp.tolerance_used;
  return r;
}

bool class_reduction_check(const PolyharmonicMap& f) {
  const bool s0 = membership(f, ClassParams::hs_lambda(0)).member;
  const bool s = membership(f, ClassParams::hs()).member;
  const bool c1 = membership(f, ClassParams::hs_lambda(1)).member;
  const bool c = membership(f, ClassParams::hc()).member;
  return s0 == s && c1 == c;
}

std::string to_key_value(const MembershipReport& r) {
  std::ostringstream os;
  os << "family=" << family_name(r.params.family) << '\n';
  if (r.params.family == Family::hs_lambda) {
    os << "lambda="
       << (r.params.lambda_approximate ? format_decimal(r.params.lambda.get_d()) : r.params.lambda.get_str())
       << '\n';
  }
  os << "normalized=" << (r.params.normalized ? "true" : "false") << '\n'
     << "row1_lhs=" << r.row1_lhs.str() << '\n'
     << "row1_rhs=" << r.row1_rhs.str() << '\n'
     << "row1_margin=" << r.row1_margin.str() << '\n'
     << "row2_value=" << r.row2_value.str() << '\n'
     << "row2_ok=" << (r.row2_ok ? "true" : "false") << '\n'
     << "normalized_ok=" << (r.normalized_ok ? "true" : "false") << '\n'
     << "member=" << (r.member ? "true" : "false") << '\n'
     << "exact=" << (r.exact ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace phm
