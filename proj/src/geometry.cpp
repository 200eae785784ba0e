#include "polyharm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>

#include "polyharm/errors.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/phm_io.hpp"
#include "polyharm/polyline.hpp"
#include "polyharm/sampling.hpp"

namespace phm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// z^e with 0^0 = 1.
Complex ipow(Complex z, int e) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < e; ++i) out *= z;
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void take_min(std::optional<GridExtremum>& slot, double v, int ring, int ray) {
  // Strict comparison keeps the first (lowest ring, lowest ray) minimizer.
  if (!slot || v < slot->value || (std::isnan(v) && !std::isnan(slot->value)))
    slot = GridExtremum{v, ring, ray};
}

}  // namespace

Evaluator::Evaluator(const PolyharmonicMap& f) : p_(f.p()), max_n_(f.max_degree()) {
  a_.assign(p_, std::vector<Complex>(max_n_ + 1));
  bbar_.assign(p_, std::vector<Complex>(max_n_ + 1));
  for (const auto& [s, c] : f.a_table()) a_[s.k - 1][s.n] = c.value();
  for (const auto& [s, c] : f.b_table()) bbar_[s.k - 1][s.n] = std::conj(c.value());
}

Complex Evaluator::layer(int k, Complex z) const {
  const auto& a = a_[k - 1];
  const auto& bb = bbar_[k - 1];
  const Complex zb = std::conj(z);
  Complex h(0.0), g(0.0);
  for (int n = max_n_; n >= 1; --n) {
    h = (h + a[n]) * z;
    g = (g + bb[n]) * zb;
  }
  return h + g;
}

Complex Evaluator::operator()(Complex z) const {
  const double r2 = std::norm(z);
  Complex sum(0.0);
  double scale = 1.0;
  for (int k = 1; k <= p_; ++k) {
    sum += scale * layer(k, z);
    scale *= r2;
  }
  return sum;
}

Complex Evaluator::theta_derivative(double r, double theta, int order) const {
  if (order != 1 && order != 2) throw ParamError("theta derivative order must be 1 or 2");
  const Complex e = std::polar(1.0, theta);
  const Complex eb = std::conj(e);
  Complex sum(0.0);
  for (int k = 1; k <= p_; ++k) {
    Complex en(1.0), ebn(1.0);
    double rn = std::pow(r, 2 * (k - 1));
    for (int n = 1; n <= max_n_; ++n) {
      en *= e;
      ebn *= eb;
      rn *= r;
      const Complex in(0.0, n);
      const Complex fa = order == 1 ? in : in * in;
      const Complex fb = order == 1 ? -in : in * in;
      sum += rn * (fa * a_[k - 1][n] * en + fb * bbar_[k - 1][n] * ebn);
    }
  }
  return sum;
}

Wirtinger Evaluator::wirtinger(Complex z) const {
  // a z^{n+k-1} zbar^{k-1} and bbar z^{k-1} zbar^{n+k-1}, differentiated termwise.
  const Complex zb = std::conj(z);
  Wirtinger w{Complex(0.0), Complex(0.0)};
  for (int k = 1; k <= p_; ++k) {
    for (int n = 1; n <= max_n_; ++n) {
      const Complex a = a_[k - 1][n];
      const Complex b = bbar_[k - 1][n];
      const int m = n + k - 1;
      if (a != 0.0) {
        w.dz += a * static_cast<double>(m) * ipow(z, m - 1) * ipow(zb, k - 1);
        if (k >= 2) w.dzbar += a * static_cast<double>(k - 1) * ipow(z, m) * ipow(zb, k - 2);
      }
      if (b != 0.0) {
        if (k >= 2) w.dz += b * static_cast<double>(k - 1) * ipow(z, k - 2) * ipow(zb, m);
        w.dzbar += b * static_cast<double>(m) * ipow(z, k - 1) * ipow(zb, m - 1);
      }
    }
  }
  return w;
}

Complex eval(const PolyharmonicMap& f, Complex z) { return Evaluator(f)(z); }

Complex theta_derivative(const PolyharmonicMap& f, double r, double theta, int order) {
  return Evaluator(f).theta_derivative(r, theta, order);
}

Wirtinger wirtinger_derivatives(const PolyharmonicMap& f, Complex z) {
  return Evaluator(f).wirtinger(z);
}

double arg_derivative(const Evaluator& f, double r, double theta) {
  const Complex v = f(std::polar(r, theta));
  if (std::abs(v) < kEpsZero) throw ZeroValue("F vanishes at r=" + fmt(r) + " theta=" + fmt(theta));
  return (f.theta_derivative(r, theta, 1) / v).imag();
}

double arg_derivative(const PolyharmonicMap& f, double r, double theta) {
  return arg_derivative(Evaluator(f), r, theta);
}

double convexity_indicator(const Evaluator& f, double r, double theta) {
  const Complex d1 = f.theta_derivative(r, theta, 1);
  if (std::abs(d1) < kEpsZero)
    throw ZeroDerivative("F_theta vanishes at r=" + fmt(r) + " theta=" + fmt(theta));
  return (f.theta_derivative(r, theta, 2) / d1).imag();
}

double convexity_indicator(const PolyharmonicMap& f, double r, double theta) {
  return convexity_indicator(Evaluator(f), r, theta);
}

// ---------------------------------------------------------------------------
// Grid verification

void DiskGrid::validate() const {
  if (rings < 1) throw ParamError("grid needs rings >= 1");
  if (rays < 3) throw ParamError("grid needs rays >= 3");
  if (!(r_max > 0.0 && r_max < 1.0)) throw ParamError("grid needs 0 < r_max < 1");
}

double DiskGrid::angle(int ray) const { return kTwoPi * ray / rays; }

bool GeometryReport::jacobian_ok() const { return !min_jacobian || min_jacobian->value > 0.0; }

bool GeometryReport::starlike_ok() const {
  return !min_arg_derivative || min_arg_derivative->value > -kSignTolerance;
}

bool GeometryReport::convex_ok() const {
  return !min_convexity_indicator || min_convexity_indicator->value > -kSignTolerance;
}

bool GeometryReport::injective_ok() const {
  return injectivity_collisions.value_or(0) == 0 && curve_crossings.value_or(0) == 0;
}

bool GeometryReport::ok() const {
  return jacobian_ok() && starlike_ok() && convex_ok() && injective_ok();
}

namespace {

long count_collisions(const std::vector<Complex>& w, const std::vector<double>& spacing) {
  const double max_h = *std::max_element(spacing.begin(), spacing.end());
  const double cell = kCollisionScale * max_h;
  auto key = [&](long ix, long iy) { return ix * 2654435761L ^ iy; };
  std::unordered_map<long, std::vector<int>> buckets;
  std::vector<std::pair<long, long>> cells(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const long ix = static_cast<long>(std::floor(w[i].real() / cell));
    const long iy = static_cast<long>(std::floor(w[i].imag() / cell));
    cells[i] = {ix, iy};
    buckets[key(ix, iy)].push_back(static_cast<int>(i));
  }
  long count = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = buckets.find(key(cells[i].first + dx, cells[i].second + dy));
        if (it == buckets.end()) continue;
        for (int j : it->second) {
          if (static_cast<std::size_t>(j) <= i) continue;
          const auto& cj = cells[static_cast<std::size_t>(j)];
          if (cj.first != cells[i].first + dx || cj.second != cells[i].second + dy) continue;
          const double tol = kCollisionScale * std::min(spacing[i], spacing[static_cast<std::size_t>(j)]);
          if (std::abs(w[i] - w[static_cast<std::size_t>(j)]) < tol) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

GeometryReport verify_geometry(const PolyharmonicMap& f, const DiskGrid& grid,
                               const CheckSet& checks) {
  grid.validate();
  if (static_cast<long>(grid.rings) * grid.rays > kMaxGridPoints)
    throw GridTooLarge("grid has " + std::to_string(static_cast<long>(grid.rings) * grid.rays) +
                       " points, limit " + std::to_string(kMaxGridPoints));
  const Evaluator ev(f);
  GeometryReport rep;
  rep.grid = grid;
  rep.checks = checks;

  const std::size_t npts = static_cast<std::size_t>(grid.rings) * grid.rays;
  std::vector<Complex> images(npts);
  std::vector<double> spacing(npts);
  const double ring_gap = grid.r_max / grid.rings;

  if (checks.jacobian && grid.include_origin_ring)
    take_min(rep.min_jacobian, ev.wirtinger(0.0).jacobian(), -1, 0);

  for (int i = 0; i < grid.rings; ++i) {
    const double r = grid.radius(i);
    for (int j = 0; j < grid.rays; ++j) {
      const double t = grid.angle(j);
      const Complex z = std::polar(r, t);
      const std::size_t idx = static_cast<std::size_t>(i) * grid.rays + j;
      images[idx] = ev(z);
      spacing[idx] = std::min(ring_gap, kTwoPi * r / grid.rays);
      if (checks.jacobian) take_min(rep.min_jacobian, ev.wirtinger(z).jacobian(), i, j);
      if (checks.starlike) {
        double v = -std::numeric_limits<double>::infinity();
        if (std::abs(images[idx]) >= kEpsZero)
          v = (ev.theta_derivative(r, t, 1) / images[idx]).imag();
        take_min(rep.min_arg_derivative, v, i, j);
      }
      if (checks.convex) {
        double v = -std::numeric_limits<double>::infinity();
        const Complex d1 = ev.theta_derivative(r, t, 1);
        if (std::abs(d1) >= kEpsZero) v = (ev.theta_derivative(r, t, 2) / d1).imag();
        take_min(rep.min_convexity_indicator, v, i, j);
      }
    }
  }

  if (checks.injective) {
    rep.injectivity_collisions = count_collisions(images, spacing);
    long crossings = 0;
    for (int i = 0; i < grid.rings; ++i) {
      std::span<const Complex> ring(images.data() + static_cast<std::size_t>(i) * grid.rays,
                                    static_cast<std::size_t>(grid.rays));
      crossings += count_self_intersections(ring);
      if (i + 1 < grid.rings) {
        std::span<const Complex> next(ring.data() + grid.rays, static_cast<std::size_t>(grid.rays));
        crossings += count_crossings(ring, next);
      }
    }
    rep.curve_crossings = crossings;
  }
  return rep;
}

std::string to_key_value(const GeometryReport& r) {
  std::ostringstream os;
  os << "rings=" << r.grid.rings << '\n'
     << "rays=" << r.grid.rays << '\n'
     << "r_max=" << fmt(r.grid.r_max) << '\n';
  auto ext = [&](const char* name, const std::optional<GridExtremum>& e) {
    if (!e) return;
    os << name << '=' << fmt(e->value) << '\n'
       << name << "_ring=" << e->ring << '\n'
       << name << "_ray=" << e->ray << '\n';
  };
  ext("min_jacobian", r.min_jacobian);
  ext("min_arg_derivative", r.min_arg_derivative);
  ext("min_convexity_indicator", r.min_convexity_indicator);
  if (r.injectivity_collisions) os << "injectivity_collisions=" << *r.injectivity_collisions << '\n';
  if (r.curve_crossings) os << "curve_crossings=" << *r.curve_crossings << '\n';
  if (r.injectivity_collisions) os << "injectivity_evidence=sampled\n";
  os << "ok=" << (r.ok() ? "true" : "false") << '\n';
  return os.str();
}

std::string to_csv(const GeometryReport& r) {
  std::ostringstream os;
  os << "quantity,value,ring,ray,r,theta\n";
  auto row = [&](const char* name, const std::optional<GridExtremum>& e) {
    if (!e) return;
    const double rad = e->ring < 0 ? 0.0 : r.grid.radius(e->ring);
    os << name << ',' << fmt(e->value) << ',' << e->ring << ',' << e->ray << ',' << fmt(rad) << ','
       << fmt(r.grid.angle(e->ray)) << '\n';
  };
  row("min_jacobian", r.min_jacobian);
  row("min_arg_derivative", r.min_arg_derivative);
  row("min_convexity_indicator", r.min_convexity_indicator);
  return os.str();
}

// ---------------------------------------------------------------------------
// Distortion

double DistortionEnvelope::quadratic() const {
  const double denom = 2.0 * (1.0 + lambda.get_d());
  if (branch == DistortionBranch::low) return (1.0 - b11) / denom;
  return (1.0 - b11 - 3.0 * (a12 + b12)) / denom;
}

double DistortionEnvelope::lower(double r) const {
  const double c = branch == DistortionBranch::high ? a12 + b12 : 0.0;
  return (1.0 - b11) * r - quadratic() * r * r - c * r * r * r;
}

double DistortionEnvelope::upper(double r) const {
  const double c = branch == DistortionBranch::high ? a12 + b12 : 0.0;
  return (1.0 + b11) * r + quadratic() * r * r + c * r * r * r;
}

DistortionEnvelope distortion_envelope(const PolyharmonicMap& f, const Rational& lambda) {
  if (!membership(f, ClassParams::hs_lambda(lambda)).member)
    throw NotMember("map is not in HS_p(" + lambda.get_str() + ")");
  DistortionEnvelope env;
  env.lambda = lambda;
  env.b11 = f.b(1, 1).magnitude().to_double();
  env.a12 = f.a(1, 2).magnitude().to_double();
  env.b12 = f.b(1, 2).magnitude().to_double();
  env.branch = lambda <= Rational(1, 2) ? DistortionBranch::low : DistortionBranch::high;
  return env;
}

DistortionCheck check_distortion(const PolyharmonicMap& f, const DistortionEnvelope& env,
                                 const DiskGrid& grid) {
  grid.validate();
  const Evaluator ev(f);
  DistortionCheck out;
  out.max_excess = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.rings; ++i) {
    const double r = grid.radius(i);
    for (int j = 0; j < grid.rays; ++j) {
      const double m = std::abs(ev(std::polar(r, grid.angle(j))));
      const double excess = std::max(env.lower(r) - m, m - env.upper(r));
      out.max_excess = std::max(out.max_excess, excess);
      if (excess > 1e-12) ++out.violations;
      ++out.samples;
    }
  }
  return out;
}

namespace {

Coefficient with_phase(const Scalar& magnitude, double phase) {
  if (phase == 0.0) return Coefficient(magnitude, Scalar(0));
  return Coefficient::approx(std::polar(magnitude.to_double(), phase));
}

}  // namespace

PolyharmonicMap distortion_extremal(const Rational& lambda, const Scalar& b11, const Scalar& a12,
                                    const Scalar& b12, std::span<const double> phases) {
  if (lambda < 0 || lambda > 1) throw ParamError("lambda must lie in [0, 1]");
  if (b11.sign() < 0 || a12.sign() < 0 || b12.sign() < 0)
    throw ParamError("magnitudes must be nonnegative");
  if (!(b11.to_double() < 1.0) || (b11.exact() && b11.rational() >= 1))
    throw ParamError("|b11| must be < 1");
  const bool high = lambda > Rational(1, 2);
  const Scalar c = a12 + b12;
  if (!high && c.sign() != 0)
    throw ParamError("a12 + b12 must vanish on the lambda <= 1/2 branch");
  const std::size_t want = high ? 3 : 2;
  if (phases.size() > want) throw ParamError("too many phases for this branch");
  auto phase = [&](std::size_t i) { return i < phases.size() ? phases[i] : 0.0; };

  const Scalar numer = Scalar(1) - b11 - Scalar(3) * c;
  if (numer.sign() < 0) throw ParamError("1 - |b11| - 3(|a12|+|b12|) must be >= 0");
  const Scalar quad = numer / Scalar(Rational(2 * (1 + lambda)));

  CoefficientTable a, b;
  a[{1, 1}] = Coefficient(1, 0);
  b[{1, 1}] = with_phase(b11, phase(0));
  a[{2, 1}] = with_phase(quad, phase(1));
  int p = 1;
  if (high && c.sign() != 0) {
    a[{1, 2}] = with_phase(c, phase(2));
    p = 2;
  }
  return PolyharmonicMap(p, std::move(a), std::move(b));
}

bool layer_bound_check(const PolyharmonicMap& f, const Rational& lambda, int samples,
                       std::uint64_t seed) {
  if (!membership(f, ClassParams::hs_lambda(lambda)).member)
    throw NotMember("map is not in HS_p(" + lambda.get_str() + ")");
  const Evaluator ev(f);
  const double quad = (1.0 - f.b(1, 1).magnitude().to_double()) / (2.0 * (1.0 + lambda.get_d()));
  std::vector<double> lin(f.p() + 1);
  for (int k = 1; k <= f.p(); ++k)
    lin[k] = f.a(1, k).magnitude().to_double() + f.b(1, k).magnitude().to_double();

  Rng rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int s = 0; s < samples; ++s) {
    const Complex z = std::polar(std::sqrt(u(rng)), kTwoPi * u(rng));
    const double r = std::abs(z);
    for (int k = 1; k <= f.p(); ++k) {
      if (std::abs(ev.layer(k, z)) > lin[k] * r + quad * r * r + 1e-12) return false;
    }
  }
  return true;
}

Rational convexity_radius(const Rational& lambda) {
  return lambda > Rational(1, 2) ? lambda : Rational(1, 2);
}

bool rescale_convexity_certificate(const PolyharmonicMap& f, const Rational& lambda,
                                   const Scalar& r) {
  if (!membership(f, ClassParams::hs_lambda(lambda)).member)
    throw NotMember("map is not in HS_p(" + lambda.get_str() + ")");
  const Rational radius = convexity_radius(lambda);
  if (r.sign() <= 0 || (r.exact() ? r.rational() > radius : r.to_double() > radius.get_d()))
    throw ParamError("r must lie in (0, " + radius.get_str() + "]");

  bool per_term = true;
  f.for_each_term([&](Part, Slot s, const Coefficient&) {
    if (s.n < 2) return;
    const Scalar lhs = Scalar(Rational(2 * (s.k - 1) + s.n * s.n)) *
                       pow(r, static_cast<unsigned>(2 * s.k + s.n - 3));
    const Scalar rhs(weight(s.n, s.k, lambda));
    const bool ok = lhs.exact() ? lhs.rational() <= rhs.rational()
                                : lhs.to_double() <= rhs.to_double() + kEpsStrict;
    per_term = per_term && ok;
  });
  const auto hc = membership(rescale(f, r), ClassParams::hc());
  const bool row1 = hc.row1_margin.exact() ? sgn(hc.row1_margin.rational()) >= 0
                                           : hc.row1_margin.to_double() >= -kEpsStrict;
  return per_term && row1;
}

ConvolutionSearchReport starlike_convolution_search(int trials, std::uint64_t seed,
                                                    const DiskGrid& grid, int max_degree) {
  ConvolutionSearchReport rep;
  Rng rng(seed);
  CheckSet checks = CheckSet::none();
  checks.jacobian = true;
  checks.starlike = true;
  for (int t = 0; t < trials; ++t) {
    MemberSpec spec;
    spec.p = 2;
    spec.max_degree = max_degree;
    spec.lambda = random_lambda(rng, Rational(1, 2), Rational(99, 100));
    spec.normalized = true;
    const PolyharmonicMap f = random_member(rng, spec);
    const PolyharmonicMap h = random_convex_bound_map(rng, 2, max_degree);
    const PolyharmonicMap g = convolve(f, h);
    ++rep.trials;
    if (!membership(g, ClassParams::hs()).member) ++rep.coefficient_failures;
    const auto geo = verify_geometry(g, grid, checks);
    if (!geo.jacobian_ok() || !geo.starlike_ok()) {
      ++rep.starlike_violations;
      if (rep.first_violation.empty()) rep.first_violation = serialize_map(g);
    }
  }
  return rep;
}

}  // namespace phm
