#pragma once

// Numerical geometry of polyharmonic maps on the unit disk: pointwise
// evaluation, angular and Wirtinger derivatives, grid verification of
// sense preservation, starlikeness, convexity and (sampled) injectivity,
// plus distortion envelopes and the convexity-radius certificate.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyharm/series.hpp"

namespace phm {

using Complex = std::complex<double>;

/// |F| or |F_theta| below this is treated as a zero.
inline constexpr double kEpsZero = 1e-12;
/// Sign checks pass above -kSignTolerance.
inline constexpr double kSignTolerance = 1e-9;
/// Two grid images collide when closer than this times their local grid spacing.
inline constexpr double kCollisionScale = 1e-3;
/// Upper limit on rings * rays for verify_geometry.
inline constexpr long kMaxGridPoints = 1L << 15;

struct Wirtinger {
  Complex dz;
  Complex dzbar;
  double jacobian() const { return std::norm(dz) - std::norm(dzbar); }
};

/// Double-precision view of a map for fast repeated evaluation.
class Evaluator {
 public:
  explicit Evaluator(const PolyharmonicMap& f);

  int p() const { return p_; }
  Complex operator()(Complex z) const;
  /// Harmonic layer G_k(z) = h_k(z) + conj(g_k(z)), 1 <= k <= p.
  Complex layer(int k, Complex z) const;
  /// d^order/dtheta^order F(r e^{i theta}), order 1 or 2.
  Complex theta_derivative(double r, double theta, int order) const;
  Wirtinger wirtinger(Complex z) const;

 private:
  int p_;
  int max_n_;
  // [k-1][n], n = 0 unused.
  std::vector<std::vector<Complex>> a_;
  std::vector<std::vector<Complex>> bbar_;
};

Complex eval(const PolyharmonicMap& f, Complex z);
Complex theta_derivative(const PolyharmonicMap& f, double r, double theta, int order);
Wirtinger wirtinger_derivatives(const PolyharmonicMap& f, Complex z);

/// d/dtheta arg F(r e^{i theta}) = Im(F_theta / F). Throws ZeroValue.
double arg_derivative(const Evaluator& f, double r, double theta);
double arg_derivative(const PolyharmonicMap& f, double r, double theta);
/// d/dtheta arg F_theta = Im(F_theta_theta / F_theta). Throws ZeroDerivative.
double convexity_indicator(const Evaluator& f, double r, double theta);
double convexity_indicator(const PolyharmonicMap& f, double r, double theta);

/// Polar sampling grid: ring i (0-based) at radius r_max (i+1)/rings, ray j at
/// angle 2 pi j / rays. With include_origin_ring the Jacobian is also
/// sampled at z = 0.
struct DiskGrid {
  int rings = 32;
  int rays = 256;
  double r_max = 0.995;
  bool include_origin_ring = false;

  /// Throws ParamError.
  void validate() const;
  double radius(int ring) const { return r_max * (ring + 1) / rings; }
  double angle(int ray) const;
};

struct CheckSet {
  bool jacobian = true;
  bool starlike = true;
  bool convex = true;
  bool injective = true;

  static CheckSet all() { return {}; }
  static CheckSet none() { return {false, false, false, false}; }
};

/// Minimum over the grid with its location; ring -1 marks the origin.
struct GridExtremum {
  double value = 0.0;
  int ring = 0;
  int ray = 0;
};

/// Grid minima of the Jacobian, Im(F_theta/F) and Im(F_thetatheta/F_theta),
/// plus sampled injectivity evidence. A clean report is evidence on the
/// sampled grid, not a proof.
struct GeometryReport {
  DiskGrid grid;
  CheckSet checks = CheckSet::none();
  std::optional<GridExtremum> min_jacobian;
  std::optional<GridExtremum> min_arg_derivative;
  std::optional<GridExtremum> min_convexity_indicator;
  /// Grid-point pairs whose images lie within kCollisionScale * local spacing.
  std::optional<long> injectivity_collisions;
  /// Self-intersections of ring images plus crossings of adjacent ring images.
  std::optional<long> curve_crossings;

  bool jacobian_ok() const;
  bool starlike_ok() const;
  bool convex_ok() const;
  bool injective_ok() const;
  /// Every requested check passed.
  bool ok() const;
};

/// Throws ParamError for an invalid grid and GridTooLarge when
/// rings * rays > kMaxGridPoints. Minima are reduced with ties going to the
/// lowest ring, then the lowest ray.
GeometryReport verify_geometry(const PolyharmonicMap& f, const DiskGrid& grid,
                               const CheckSet& checks = CheckSet::all());

/// "name=value" lines; unchecked quantities are omitted.
std::string to_key_value(const GeometryReport& r);
/// "quantity,value,ring,ray,r,theta" header plus one row per recorded extremum.
std::string to_csv(const GeometryReport& r);

enum class DistortionBranch { low, high };

/// Radius-dependent bounds lower(|z|) <= |F(z)| <= upper(|z|) for members of HS_p(lambda):
///   low  (lambda <= 1/2): (1 -+ b11) r -+ (1 - b11) / (2(1+lambda)) r^2
///   high (lambda >  1/2): (1 -+ b11) r -+ (1 - b11 - 3c) / (2(1+lambda)) r^2 -+ c r^3,
/// where c = |a_{1,2}| + |b_{1,2}|.
struct DistortionEnvelope {
  Rational lambda;
  double b11 = 0.0;
  double a12 = 0.0;
  double b12 = 0.0;
  DistortionBranch branch = DistortionBranch::low;

  double lower(double r) const;
  double upper(double r) const;

 private:
  double quadratic() const;
};

/// Throws NotMember unless f is in HS_p(lambda).
DistortionEnvelope distortion_envelope(const PolyharmonicMap& f, const Rational& lambda);

struct DistortionCheck {
  long samples = 0;
  long violations = 0;
  /// Largest amount by which |F| left [lower, upper]; <= 0 when none did.
  double max_excess = 0.0;
};

/// Compares |F(z)| with the envelope at every grid point (tolerance 1e-12).
DistortionCheck check_distortion(const PolyharmonicMap& f, const DistortionEnvelope& env,
                                 const DiskGrid& grid);

/// Map attaining the distortion bounds. Phases are (mu, nu) for the low
/// branch and (eta, phi, psi) for the high branch; missing phases are 0, and a
/// zero phase keeps the coefficient exact. Throws ParamError for
/// branch-inconsistent or out-of-range parameters.
PolyharmonicMap distortion_extremal(const Rational& lambda, const Scalar& b11, const Scalar& a12,
                                    const Scalar& b12, std::span<const double> phases = {});

/// |G_k(z)| <= (|a_{1,k}|+|b_{1,k}|)|z| + (1-|b_{1,1}|)/(2(1+lambda)) |z|^2 for every layer at
/// `samples` random points of the unit disk. Throws NotMember.
bool layer_bound_check(const PolyharmonicMap& f, const Rational& lambda, int samples,
                       std::uint64_t seed = 1);

/// max(1/2, lambda).
Rational convexity_radius(const Rational& lambda);

/// Exact check that rescale(f, r) satisfies the HC_p coefficient condition,
/// via the per-term inequality (2(k-1)+n^2) r^{2k+n-3} <= w(n,k,lambda).
/// Throws NotMember unless f is in HS_p(lambda), ParamError unless
/// 0 < r <= convexity_radius(lambda).
bool rescale_convexity_certificate(const PolyharmonicMap& f, const Rational& lambda,
                                   const Scalar& r);

/// Outcome of the p = 2 convolution experiment: random F in HS_2^0(lambda),
/// 1/2 <= lambda < 1, against random H with |A_{n,k}| <= (n+1)/2, |B_{n,k}| <= (n-1)/2.
/// Nothing is asserted; violations are only reported.
struct ConvolutionSearchReport {
  int trials = 0;
  /// Convolutions with a grid point where Im(F_theta/F) <= -kSignTolerance or J <= 0.
  int starlike_violations = 0;
  /// Convolutions outside HS_2 (the coefficient route of the p = 1 proof fails).
  int coefficient_failures = 0;
  std::string first_violation;  // .phm text of F*H, empty when none
};

ConvolutionSearchReport starlike_convolution_search(int trials, std::uint64_t seed,
                                                    const DiskGrid& grid, int max_degree = 4);

}  // namespace phm
