#pragma once

// Finitely supported polyharmonic series
//
//   F(z) = sum_{k=1}^{p} |z|^{2(k-1)} sum_{n>=1} ( a_{n,k} z^n + conj(b_{n,k}) conj(z)^n )
//
// with a_{1,1} = 1 and |b_{1,1}| < 1, and the coefficient classes
// HS_p(lambda), HS_p, HC_p together with their normalized subclasses.

#include <functional>
#include <map>
#include <string>

#include "polyharm/coefficient.hpp"
#include "polyharm/scalar.hpp"

namespace phm {

/// Which of the two coefficient sequences a term belongs to.
enum class Part { a, b };

/// Index (n, k): degree n >= 1, layer k >= 1.
struct Slot {
  int n = 1;
  int k = 1;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

using CoefficientTable = std::map<Slot, Coefficient>;

/// Immutable polyharmonic map with finite support.
///
/// Zero entries are dropped on construction, so two maps compare equal iff
/// they have the same p and the same nonzero coefficients (with matching
/// exactness).
class PolyharmonicMap {
 public:
  /// Validates the H_p conditions; throws InvalidMap.
  PolyharmonicMap(int p, CoefficientTable a, CoefficientTable b);

  /// F(z) = z with p layers.
  static PolyharmonicMap identity(int p = 1);

  int p() const { return p_; }
  /// Highest degree n carrying a nonzero coefficient (at least 1).
  int max_degree() const { return max_degree_; }
  bool exact() const { return exact_; }

  /// Zero when (n, k) is outside the support.
  const Coefficient& a(int n, int k) const;
  const Coefficient& b(int n, int k) const;
  const Coefficient& coefficient(Part part, int n, int k) const {
    return part == Part::a ? a(n, k) : b(n, k);
  }

  const CoefficientTable& a_table() const { return a_; }
  const CoefficientTable& b_table() const { return b_; }

  /// Visits nonzero terms, a-terms first, each table in (n, k) order.
  void for_each_term(const std::function<void(Part, Slot, const Coefficient&)>& f) const;

  /// Copy with p raised to at least `p` (extra layers are zero).
  PolyharmonicMap padded(int p) const;

  /// b_{1,1} = 0 and a_{1,k} = b_{1,k} = 0 for k >= 2.
  bool is_normalized() const;

  friend bool operator==(const PolyharmonicMap& x, const PolyharmonicMap& y);

 private:
  int p_;
  int max_degree_ = 1;
  bool exact_ = true;
  CoefficientTable a_, b_;
};

enum class Family { hs_lambda, hs, hc };

/// Class selector; `normalized` picks the superscript-0 subclass.
struct ClassParams {
  Family family = Family::hs_lambda;
  Rational lambda = 0;
  bool normalized = false;
  /// lambda came from a decimal literal; the report is then approximate.
  bool lambda_approximate = false;

  static ClassParams hs_lambda(const Rational& lambda, bool normalized = false) {
    return {Family::hs_lambda, lambda, normalized};
  }
  static ClassParams hs(bool normalized = false) { return {Family::hs, 0, normalized}; }
  static ClassParams hc(bool normalized = false) { return {Family::hc, 1, normalized}; }
};

std::string family_name(Family f);

/// Both inequality rows of a class condition, evaluated over the finite support.
///
/// For HS_p(lambda):  row1_lhs = sum_{n>=2} w(n,k,lambda)(|a|+|b|), row1_rhs = 2 - S,
///                    row2_value = S = sum_k (2k-1)(|a_{1,k}|+|b_{1,k}|), 1 <= S < 2.
/// For HS_p / HC_p:   row1_rhs = 1 - |b_{1,1}| - sum_{k>=2} (2k-1)(...),
///                    row2_value = |b_{1,1}| + sum_{k>=2} (|a_{1,k}|+|b_{1,k}|), 0 <= . < 1.
struct MembershipReport {
  ClassParams params;
  Scalar row1_lhs;
  Scalar row1_rhs;
  Scalar row1_margin;
  Scalar row2_value;
  bool row2_ok = false;
  bool normalized_ok = false;
  bool member = false;
  /// Every quantity above is an exact rational.
  bool exact = true;
  /// Set when some comparison fell back to the kEpsStrict tolerance.
  bool tolerance_used = false;
};

/// 2(k-1) + n(lambda n + 1 - lambda).
Rational weight(int n, int k, const Rational& lambda);

/// Throws ParamError when lambda is outside [0, 1].
MembershipReport membership(const PolyharmonicMap& f, const ClassParams& params);

/// HS_p(0) agrees with HS_p and HS_p(1) agrees with HC_p on f.
bool class_reduction_check(const PolyharmonicMap& f);

/// Flat "name=value" lines.
std::string to_key_value(const MembershipReport& r);

}  // namespace phm
