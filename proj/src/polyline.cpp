#include "polyharm/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace phm {

namespace {

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0) - (v < 0);
}

bool on_segment(Point a, Point b, Point c) {
  return std::min(a.real(), b.real()) <= c.real() && c.real() <= std::max(a.real(), b.real()) &&
         std::min(a.imag(), b.imag()) <= c.imag() && c.imag() <= std::max(a.imag(), b.imag());
}

struct Box {
  double x0, x1, y0, y1;
};

Box edge_box(Point a, Point b) {
  return {std::min(a.real(), b.real()), std::max(a.real(), b.real()), std::min(a.imag(), b.imag()),
          std::max(a.imag(), b.imag())};
}

bool overlap(const Box& u, const Box& v) {
  return u.x0 <= v.x1 && v.x0 <= u.x1 && u.y0 <= v.y1 && v.y0 <= u.y1;
}

}  // namespace

bool segments_intersect(Point p1, Point p2, Point q1, Point q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

long count_self_intersections(std::span<const Point> pts) {
  const std::size_t n = pts.size();
  if (n < 4) return 0;
  std::vector<Box> boxes(n);
  for (std::size_t i = 0; i < n; ++i) boxes[i] = edge_box(pts[i], pts[(i + 1) % n]);
  long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the closing edge
      if (!overlap(boxes[i], boxes[j])) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) ++count;
    }
  }
  return count;
}

long count_crossings(std::span<const Point> a, std::span<const Point> b) {
  const std::size_t na = a.size(), nb = b.size();
  if (na < 2 || nb < 2) return 0;
  std::vector<Box> bb(nb);
  Box all_b{1e300, -1e300, 1e300, -1e300};
  for (std::size_t j = 0; j < nb; ++j) {
    bb[j] = edge_box(b[j], b[(j + 1) % nb]);
    all_b = {std::min(all_b.x0, bb[j].x0), std::max(all_b.x1, bb[j].x1),
             std::min(all_b.y0, bb[j].y0), std::max(all_b.y1, bb[j].y1)};
  }
  long count = 0;
  for (std::size_t i = 0; i < na; ++i) {
    const Box ea = edge_box(a[i], a[(i + 1) % na]);
    if (!overlap(ea, all_b)) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      if (!overlap(ea, bb[j])) continue;
      if (segments_intersect(a[i], a[(i + 1) % na], b[j], b[(j + 1) % nb])) ++count;
    }
  }
  return count;
}

int ray_crossings(std::span<const Point> pts, Point origin, double angle) {
  const Point rot = std::polar(1.0, -angle);
  const std::size_t n = pts.size();
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = (pts[i] - origin) * rot;
    const Point v = (pts[(i + 1) % n] - origin) * rot;
    if ((u.imag() > 0) == (v.imag() > 0)) continue;
    const double x = u.real() + (v.real() - u.real()) * (0.0 - u.imag()) / (v.imag() - u.imag());
    if (x > 0) ++count;
  }
  return count;
}

bool is_convex_polygon(std::span<const Point> pts, double tol) {
  const std::size_t n = pts.size();
  if (n < 3) return true;
  int orient = 0;
  for (std::size_t i = 0; i < n && orient == 0; ++i) {
    const Point e1 = pts[(i + 1) % n] - pts[i];
    const Point e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
    const double c = cross(e1, e2);
    if (std::abs(c) > tol * std::abs(e1) * std::abs(e2)) orient = c > 0 ? 1 : -1;
  }
  if (orient == 0) return true;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e1 = pts[(i + 1) % n] - pts[i];
    const Point e2 = pts[(i + 2) % n] - pts[(i + 1) % n];
    if (orient * cross(e1, e2) < -tol * std::abs(e1) * std::abs(e2)) return false;
    turning += std::arg(e2 / e1);
  }
  // Same-sign turns that wind more than once describe a star polygon.
  return std::abs(std::abs(turning) - 2.0 * std::numbers::pi) < 1e-6;
}

}  // namespace phm
