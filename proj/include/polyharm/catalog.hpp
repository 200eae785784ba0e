#pragma once

#include "polyharm/series.hpp"

namespace phm {

/// z + (1/10) z^2 + (1/5) conj(z^2), a boundary-tight member of HS_1^0(2/3).
PolyharmonicMap example_f1();
/// z + (1/101) z^2 + (49/101) conj(z^2), a boundary-tight member of HS_1^0(1/100).
PolyharmonicMap example_f2();

enum class ExtremalKind { analytic, antianalytic };

/// z + |z|^{2(k-1)} e^{i phase} z^n / w(n,k,lambda), or the conj(z^n) analogue.
struct ExtremalSpec {
  int n = 2;
  int k = 1;
  Rational lambda = 0;
  ExtremalKind kind = ExtremalKind::analytic;
  double phase = 0.0;
};

/// Extremal point of HS_p^0(lambda). Exact when phase == 0.
/// Throws ParamError for n < 2, k outside [1, p] or lambda outside [0, 1].
PolyharmonicMap extremal_point(const ExtremalSpec& spec, int p = 1);

/// Degree-N truncation of Re{z/(1-z)} + i Im{z/(1-z)^2}: A_n = (n+1)/2, B_n = -(n-1)/2.
/// Its coefficients sit on the convex-map bounds with equality.
PolyharmonicMap half_plane_map(int truncation = 64);

}  // namespace phm
