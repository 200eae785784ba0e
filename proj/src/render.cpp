#include "polyharm/render.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "polyharm/errors.hpp"

namespace phm {

void RenderSpec::validate() const {
  grid.validate();
  if (grid.r_max > kMaxRenderRadius) throw ParamError("render r_max must be <= 0.995");
  if (samples_per_curve < 64) throw ParamError("samples_per_curve must be >= 64");
  if (width < 100 || height < 100) throw ParamError("canvas must be at least 100x100");
  if (!(margin >= 0.0 && margin < 0.5)) throw ParamError("margin must lie in [0, 0.5)");
}

std::vector<Curve> sample_curves(const PolyharmonicMap& f, const RenderSpec& spec) {
  spec.validate();
  const Evaluator ev(f);
  const int s = spec.samples_per_curve;
  std::vector<Curve> curves;
  curves.reserve(static_cast<std::size_t>(spec.grid.rings + spec.grid.rays));
  for (int i = 0; i < spec.grid.rings; ++i) {
    Curve c{CurveKind::ring, i, spec.grid.radius(i), {}, {}};
    for (int j = 0; j < s; ++j) {
      const double t = 2.0 * std::numbers::pi * j / s;
      c.sample_params.push_back(t);
      c.points.push_back(ev(std::polar(c.param, t)));
    }
    curves.push_back(std::move(c));
  }
  for (int j = 0; j < spec.grid.rays; ++j) {
    Curve c{CurveKind::ray, j, spec.grid.angle(j), {}, {}};
    for (int m = 0; m < s; ++m) {
      const double r = spec.grid.r_max * m / (s - 1);
      c.sample_params.push_back(r);
      c.points.push_back(ev(std::polar(r, c.param)));
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

namespace {

std::string curve_id(const Curve& c) {
  return (c.kind == CurveKind::ring ? "ring_" : "ray_") + std::to_string(c.index);
}

}  // namespace

std::string render_svg(const PolyharmonicMap& f, const RenderSpec& spec) {
  const auto curves = sample_curves(f, spec);
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& c : curves)
    for (const auto& w : c.points) {
      x0 = std::min(x0, w.real());
      x1 = std::max(x1, w.real());
      y0 = std::min(y0, w.imag());
      y1 = std::max(y1, w.imag());
    }
  const double span = std::max({x1 - x0, y1 - y0, 1e-12});
  const double usable_w = spec.width * (1.0 - 2.0 * spec.margin);
  const double usable_h = spec.height * (1.0 - 2.0 * spec.margin);
  const double scale = std::min(usable_w, usable_h) / span;
  const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
  auto px = [&](std::complex<double> w) { return 0.5 * spec.width + (w.real() - cx) * scale; };
  auto py = [&](std::complex<double> w) { return 0.5 * spec.height - (w.imag() - cy) * scale; };

  std::ostringstream os;
  char buf[128];
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%d\" "
                "height=\"%d\" viewBox=\"0 0 %d %d\">\n",
                spec.width, spec.height, spec.width, spec.height);
  os << buf;
  for (const auto& c : curves) {
    const bool boundary = c.kind == CurveKind::ring && c.index == spec.grid.rings - 1;
    const double stroke = boundary && spec.boundary_emphasis ? 2.0 : 0.75;
    std::snprintf(buf, sizeof buf,
                  "<polyline id=\"%s\" fill=\"none\" stroke=\"%s\" stroke-width=\"%.6f\" points=\"",
                  curve_id(c).c_str(), c.kind == CurveKind::ring ? "#1f4e9c" : "#9c1f3a", stroke);
    os << buf;
    const std::size_t n = c.points.size() + (c.kind == CurveKind::ring ? 1 : 0);
    for (std::size_t m = 0; m < n; ++m) {
      const auto& w = c.points[m % c.points.size()];
      std::snprintf(buf, sizeof buf, "%s%.6f,%.6f", m == 0 ? "" : " ", px(w), py(w));
      os << buf;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_csv(const PolyharmonicMap& f, const RenderSpec& spec) {
  const auto curves = sample_curves(f, spec);
  std::ostringstream os;
  os << "curve_id,theta_or_r,re,im\n";
  char buf[160];
  for (const auto& c : curves) {
    const std::string id = curve_id(c);
    for (std::size_t m = 0; m < c.points.size(); ++m) {
      std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g\n", id.c_str(), c.sample_params[m],
                    c.points[m].real(), c.points[m].imag());
      os << buf;
    }
  }
  return os.str();
}

}  // namespace phm
