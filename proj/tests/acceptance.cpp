// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyharm/catalog.hpp"
#include "polyharm/errors.hpp"
#include "polyharm/geometry.hpp"
#include "polyharm/operators.hpp"
#include "polyharm/polyline.hpp"
#include "polyharm/render.hpp"
#include "polyharm/sampling.hpp"

using namespace phm;
using oracle::q;
using C = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Coefficient re(const Rational& x) { return Coefficient(x, Rational(0)); }

PolyharmonicMap make(int p, CoefficientTable a, CoefficientTable b = {}) {
  a[{1, 1}] = Coefficient(1, 0);
  return PolyharmonicMap(p, std::move(a), std::move(b));
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

C random_point(Rng& rng, double r_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(r_max * std::sqrt(u(rng)), 2 * kPi * u(rng));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome tight_memberships() {
  Outcome o;
  struct Case { const char* name; PolyharmonicMap f; Rational lambda; };
  for (const auto& c : {Case{"F1", example_f1(), q(2, 3)}, Case{"F2", example_f2(), q(1, 100)}}) {
    const auto r = membership(c.f, ClassParams::hs_lambda(c.lambda, true));
    const auto ref = oracle::hs_lambda(c.f, c.lambda);
    const bool ok = r.member && r.exact && !r.tolerance_used && r.row1_margin == Scalar(0) &&
                    ref.member && ref.rhs - ref.lhs == 0;
    o.pass = o.pass && ok;
    o.detail += std::string(c.name) + " margin=" + r.row1_margin.str() + " ";
  }
  return o;
}

Outcome class_reduction() {
  Outcome o;
  Rng rng(1002);
  int disagreements = 0, members0 = 0, members1 = 0;
  for (int t = 0; t < 500; ++t) {
    MemberSpec spec;
    spec.p = uniform(rng, 1, 3);
    spec.max_degree = uniform(rng, 2, 8);
    spec.lambda = random_lambda(rng, 0, 1);
    spec.budget_scale = q(uniform(rng, 50, 250), 100);
    const auto f = random_member(rng, spec);
    const bool hs0 = membership(f, ClassParams::hs_lambda(0)).member;
    const bool hs = membership(f, ClassParams::hs()).member;
    const bool hs1 = membership(f, ClassParams::hs_lambda(1)).member;
    const bool hc = membership(f, ClassParams::hc()).member;
    const bool oracle_ok = hs == oracle::hs_or_hc(f, false).member && hc == oracle::hs_or_hc(f, true).member &&
                           hs0 == oracle::hs_lambda(f, 0).member && hs1 == oracle::hs_lambda(f, 1).member;
    if (hs0 != hs || hs1 != hc || !oracle_ok || !class_reduction_check(f)) ++disagreements;
    members0 += hs0;
    members1 += hs1;
  }
  o.pass = disagreements == 0 && members0 > 0 && members0 < 500 && members1 > 0 && members1 < 500;
  o.detail = "disagreements=" + std::to_string(disagreements) + " hs_members=" + std::to_string(members0) +
             " hc_members=" + std::to_string(members1) + " of 500";
  return o;
}

Outcome half_plane_convolutions() {
  const auto f1 = example_f1();
  const auto h = half_plane_map(2);
  const auto c = convolve(f1, h);
  const auto d = integral_convolve(f1, h);
  Outcome o;
  o.pass = c.a(2, 1) == re(q(3, 20)) && c.b(2, 1) == re(q(-1, 10)) && d.a(2, 1) == re(q(3, 40)) &&
           d.b(2, 1) == re(q(-1, 20)) && c.a_table().size() == 2 && c.b_table().size() == 1 &&
           d.a_table().size() == 2 && d.b_table().size() == 1 && convolve(f1, half_plane_map(64)) == c;
  o.detail = "conv a2=" + c.a(2, 1).real_part().str() + " b2=" + c.b(2, 1).real_part().str() +
             "; iconv a2=" + d.a(2, 1).real_part().str() + " b2=" + d.b(2, 1).real_part().str();
  return o;
}

Outcome starlikeness() {
  Outcome o;
  const DiskGrid grid{32, 256, 0.995, false};
  const CheckSet checks{true, true, false, true};
  std::vector<PolyharmonicMap> maps{example_f1(), example_f2()};
  Rng rng(1004);
  for (int t = 0; t < 100; ++t) {
    MemberSpec spec;
    spec.p = uniform(rng, 1, 3);
    spec.lambda = random_lambda(rng, 0, 1);
    spec.max_degree = uniform(rng, 2, 8);
    maps.push_back(random_member(rng, spec));
  }
  double min_arg = 1e300, min_jac = 1e300;
  long collisions = 0;
  int failures = 0;
  for (const auto& f : maps) {
    const auto r = verify_geometry(f, grid, checks);
    min_arg = std::min(min_arg, r.min_arg_derivative->value);
    min_jac = std::min(min_jac, r.min_jacobian->value);
    collisions += *r.injectivity_collisions;
    if (!(r.min_arg_derivative->value > 0 && r.min_jacobian->value > 0 && *r.injectivity_collisions == 0))
      ++failures;
  }
  o.pass = failures == 0;
  o.detail = std::to_string(maps.size()) + " maps, min Im(F_t/F)=" + fmt(min_arg) + " min J=" + fmt(min_jac) +
             " collisions=" + std::to_string(collisions);
  return o;
}

Outcome convexity_radius_check() {
  Outcome o;
  struct Case { PolyharmonicMap f; Rational lambda, r; };
  double worst = 1e300;
  for (const auto& c : {Case{example_f1(), q(2, 3), q(2, 3)}, Case{example_f2(), q(1, 100), q(1, 2)}}) {
    const bool cert = rescale_convexity_certificate(c.f, c.lambda, c.r) && convexity_radius(c.lambda) == c.r;
    const auto g = rescale(c.f, c.r);
    double m = 1e300;
    for (int j = 0; j < 4096; ++j) m = std::min(m, convexity_indicator(g, 0.999, 2 * kPi * j / 4096));
    worst = std::min(worst, m);
    o.pass = o.pass && cert && m >= -1e-9;
  }
  o.detail = "certificates exact, min boundary indicator=" + fmt(worst);
  return o;
}

Outcome distortion() {
  Outcome o;
  Rng rng(1006);
  long violations = 0, samples = 0;
  for (const Rational& lambda : {Rational(0), q(1, 4), q(1, 2), q(3, 4), Rational(1)}) {
    for (int t = 0; t < 200; ++t) {
      MemberSpec spec;
      spec.p = uniform(rng, 1, 3);
      spec.lambda = lambda;
      spec.max_degree = uniform(rng, 2, 8);
      const auto f = random_member(rng, spec);
      const auto env = distortion_envelope(f, lambda);
      const Evaluator ev(f);
      for (int i = 0; i < 1000; ++i) {
        const C z = random_point(rng, 1.0);
        const double m = std::abs(ev(z)), r = std::abs(z);
        ++samples;
        if (m > env.upper(r) + 1e-12 || m < env.lower(r) - 1e-12) ++violations;
      }
    }
  }
  // Equality maps with zero phases at z = r.
  struct Case { Rational lambda, b11, a12, b12; };
  std::vector<Case> cases;
  for (const Rational& lambda : {Rational(0), q(1, 4), q(1, 2)})
    for (const Rational& b11 : {Rational(0), q(1, 3), q(9, 10)}) cases.push_back({lambda, b11, 0, 0});
  for (const Rational& lambda : {q(3, 4), Rational(1)})
    for (const Rational& b11 : {Rational(0), q(1, 4)})
      for (const auto& [a12, b12] : {std::pair{Rational(0), Rational(0)}, std::pair{q(1, 12), Rational(0)},
                                     std::pair{Rational(0), q(1, 10)}, std::pair{q(1, 10), q(1, 10)}})
        cases.push_back({lambda, b11, a12, b12});
  double worst_gap = 0;
  for (const auto& c : cases) {
    const auto f = distortion_extremal(c.lambda, c.b11, c.a12, c.b12);
    const auto env = distortion_envelope(f, c.lambda);
    for (int i = 1; i <= 9; ++i) {
      const double r = i / 10.0;
      worst_gap = std::max(worst_gap, std::abs(std::abs(eval(f, r)) - env.upper(r)));
    }
  }
  o.pass = violations == 0 && worst_gap <= 1e-12;
  o.detail = std::to_string(samples) + " samples, violations=" + std::to_string(violations) + "; " +
             std::to_string(cases.size()) + " equality maps, max |F(r)|-upper gap=" + fmt(worst_gap);
  return o;
}

Outcome convolution_closure() {
  Outcome o;
  Rng rng(1007);
  std::vector<PolyharmonicMap> hs;
  for (int n : {2, 5, 8}) hs.push_back(half_plane_map(n));
  while (hs.size() < 20) hs.push_back(random_convex_bound_map(rng, 1, uniform(rng, 2, 8)));
  for (const auto& h : hs)
    if (!ch0_certificate(h)) o.pass = false;
  int failures = 0, pairs = 0;
  for (int t = 0; t < 200; ++t) {
    MemberSpec spec;
    spec.p = 1;
    spec.normalized = true;
    spec.lambda = random_lambda(rng, q(1, 2), 1);
    spec.max_degree = uniform(rng, 2, 8);
    const auto f = random_member(rng, spec);
    for (const auto& h : hs) {
      ++pairs;
      const auto a = membership(convolve(f, h), ClassParams::hs(true));
      const auto b = membership(integral_convolve(f, h), ClassParams::hc(true));
      if (!(a.member && a.exact && b.member && b.exact)) ++failures;
    }
  }
  o.pass = o.pass && failures == 0;
  o.detail = std::to_string(pairs) + " pairs, failures=" + std::to_string(failures);
  return o;
}

Outcome neighborhoods() {
  Outcome o;
  Rng rng(1008);
  int failures = 0, resampled = 0, at_radius = 0;
  for (int t = 0; t < 500; ++t) {
    MemberSpec spec;
    spec.p = uniform(rng, 1, 3);
    spec.lambda = random_lambda(rng, q(1, 100), 1);
    spec.max_degree = uniform(rng, 2, 8);
    spec.phases = PhaseMode::axis_by_slot;
    const auto f = random_member(rng, spec);
    const Rational delta = delta_bound(f, spec.lambda).rational();
    // Spend a random share of delta (all of it a quarter of the time) over random slots.
    const Rational spend = uniform(rng, 0, 3) == 0 ? delta : delta * random_unit_rational(rng);
    for (int attempt = 0;; ++attempt) {
      CoefficientTable a = f.a_table(), b = f.b_table();
      const int slots = uniform(rng, 1, 4);
      std::vector<Rational> shares(slots);
      Rational total = 0;
      for (auto& s : shares) total += (s = uniform(rng, 1, 9));
      for (int i = 0; i < slots; ++i) {
        Slot s{uniform(rng, 1, spec.max_degree + 1), uniform(rng, 1, spec.p)};
        Part part = uniform(rng, 0, 1) ? Part::a : Part::b;
        if (s == Slot{1, 1}) part = Part::b;
        const Rational w = s.n == 1 ? Rational(2 * s.k - 1) : Rational(2 * (s.k - 1) + s.n);
        const Rational m = spend * shares[i] / total / w;
        auto& table = part == Part::a ? a : b;
        table[s] = table[s] + axis_coefficient(rng, m, PhaseMode::axis_by_slot, part, s);
      }
      try {
        const PolyharmonicMap g(spec.p, a, b);
        const auto nb = neighborhood(f, g, spec.lambda);
        if (!nb.inside || !nb.distance.exact()) {
          ++failures;
        } else if (!membership(g, ClassParams::hs()).member) {
          ++failures;
        }
        at_radius += nb.distance == nb.delta_bound;
        break;
      } catch (const InvalidMap&) {
        ++resampled;  // |B11| reached 1
        if (attempt > 100) {
          ++failures;
          break;
        }
      }
    }
  }
  const bool f1 = delta_bound(example_f1(), q(2, 3)) == Scalar(q(2, 5));
  o.pass = failures == 0 && f1;
  o.detail = "500 perturbations, failures=" + std::to_string(failures) + " at_radius=" + std::to_string(at_radius) +
             " resampled=" + std::to_string(resampled) + "; delta_bound(F1,2/3)=" +
             delta_bound(example_f1(), q(2, 3)).str();
  return o;
}

Outcome convex_combinations() {
  Outcome o;
  Rng rng(1009);
  int failures = 0;
  Rational min_margin = 10;
  for (int t = 0; t < 300; ++t) {
    MemberSpec spec;
    spec.p = uniform(rng, 1, 3);
    spec.lambda = random_lambda(rng, 0, 1);
    spec.max_degree = uniform(rng, 2, 8);
    spec.phases = PhaseMode::axis_by_slot;
    const int m = uniform(rng, 1, 5);
    std::vector<long> w(m);
    long total = 0;
    for (auto& x : w) total += (x = uniform(rng, 0, 10));
    if (total == 0) w[0] = total = 1;
    ConvexCombination c;
    for (int i = 0; i < m; ++i) c.terms.push_back({q(w[i], total), random_member(rng, spec)});
    const auto r = membership(convex_combine(c), ClassParams::hs_lambda(spec.lambda));
    if (!(r.member && r.exact && r.row1_margin.rational() >= 0)) {
      ++failures;
    } else {
      min_margin = std::min(min_margin, r.row1_margin.rational());
    }
  }
  o.pass = failures == 0;
  o.detail = "300 combinations, failures=" + std::to_string(failures) + " min margin=" + min_margin.get_str();
  return o;
}

Outcome derivative_oracles() {
  Outcome o;
  Rng rng(1010);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    MemberSpec spec;
    spec.p = uniform(rng, 1, 3);
    spec.lambda = random_lambda(rng, 0, 1);
    spec.max_degree = uniform(rng, 2, 8);
    spec.budget_scale = q(uniform(rng, 50, 300), 100);
    const auto f = random_member(rng, spec);
    for (int i = 0; i < 100; ++i) {
      const C z = random_point(rng, 0.95);
      const double r = std::abs(z), th = std::arg(z);
      worst = std::max(worst, oracle::rel_err(theta_derivative(f, r, th, 1), oracle::d_theta(f, r, th)));
      worst = std::max(worst, oracle::rel_err(theta_derivative(f, r, th, 2), oracle::d2_theta(f, r, th)));
      const auto w = wirtinger_derivatives(f, z);
      const auto [dz, dzbar] = oracle::wirtinger(f, z);
      worst = std::max(worst, oracle::rel_err(w.dz, dz));
      worst = std::max(worst, oracle::rel_err(w.dzbar, dzbar));
    }
  }
  o.pass = worst <= 1e-7;
  o.detail = "5000 points, max relative error=" + fmt(worst);
  return o;
}

// Reads the ring polyline with the given id back out of the SVG text.
std::vector<Point> svg_polyline(const std::string& svg, const std::string& id) {
  const std::regex re("<polyline id=\"" + id + "\"[^>]*points=\"([^\"]*)\"");
  std::smatch m;
  std::vector<Point> pts;
  if (!std::regex_search(svg, m, re)) return pts;
  std::istringstream in(m[1].str());
  std::string pair;
  while (in >> pair) {
    double x, y;
    if (std::sscanf(pair.c_str(), "%lf,%lf", &x, &y) == 2) pts.emplace_back(x, y);
  }
  return pts;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome rendering() {
  Outcome o;
  const RenderSpec spec;
  struct Case { const char* name; PolyharmonicMap f; };
  for (const auto& c : {Case{"f1", example_f1()}, Case{"f2", example_f2()}}) {
    const auto svg = render_svg(c.f, spec);
    const std::string golden = std::string(GOLDEN_DIR) + "/" + c.name + ".svg";
    if (std::getenv("PHM_UPDATE_GOLDEN")) std::ofstream(golden, std::ios::binary) << svg;
    const bool deterministic = svg == render_svg(c.f, spec) && svg == slurp(golden);
    auto ring = svg_polyline(svg, "ring_" + std::to_string(spec.grid.rings - 1));
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    const auto ray = svg_polyline(svg, "ray_0");
    const Point origin = ray.empty() ? Point{} : ray.front();  // F(0) = 0
    const long self = count_self_intersections(ring);
    int bad_rays = 0;
    for (int j = 0; j < 4096; ++j)
      if (ray_crossings(ring, origin, 2 * kPi * (j + 0.5) / 4096) != 1) ++bad_rays;
    const bool ok = deterministic && ring.size() == static_cast<std::size_t>(spec.samples_per_curve) &&
                    self == 0 && bad_rays == 0;
    o.pass = o.pass && ok;
    o.detail += std::string(c.name) + ": identical=" + (deterministic ? "yes" : "no") +
                " self_intersections=" + std::to_string(self) + " rays_not_once=" + std::to_string(bad_rays) + " ";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"boundary-tight memberships", tight_memberships},
      {"class reduction", class_reduction},
      {"half-plane convolution coefficients", half_plane_convolutions},
      {"starlikeness, Jacobian, injectivity", starlikeness},
      {"convexity radius", convexity_radius_check},
      {"distortion bounds", distortion},
      {"convolution closure", convolution_closure},
      {"neighborhood inclusion", neighborhoods},
      {"convex-combination closure", convex_combinations},
      {"derivative oracles", derivative_oracles},
      {"rendering", rendering},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%s) [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
