#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polyharm/geometry.hpp"
#include "polyharm/series.hpp"

namespace phm {

/// Largest ring radius the renderer samples.
inline constexpr double kMaxRenderRadius = 0.995;

struct RenderSpec {
  DiskGrid grid{10, 24, 0.98, false};
  int samples_per_curve = 256;
  int width = 600;
  int height = 600;
  double margin = 0.05;
  bool boundary_emphasis = true;

  /// Throws ParamError.
  void validate() const;
};

enum class CurveKind { ring, ray };

/// Image of one circle |z| = r (param = r) or one radius arg z = theta (param = theta).
/// Ring curves hold samples_per_curve distinct points; rays run from 0 to r_max.
struct Curve {
  CurveKind kind;
  int index;
  double param;
  std::vector<double> sample_params;  // theta along a ring, r along a ray
  std::vector<std::complex<double>> points;
};

std::vector<Curve> sample_curves(const PolyharmonicMap& f, const RenderSpec& spec);

/// Deterministic SVG 1.1 with one <polyline> per curve (rings closed back to
/// their first vertex), fitted to the image bounding box plus margin.
std::string render_svg(const PolyharmonicMap& f, const RenderSpec& spec);

/// "curve_id,theta_or_r,re,im" header plus one row per sample, %.17g.
std::string render_csv(const PolyharmonicMap& f, const RenderSpec& spec);

}  // namespace phm
