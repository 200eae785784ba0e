#include "polyharm/catalog.hpp"

#include <cmath>

#include "polyharm/errors.hpp"

namespace phm {

namespace {

Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

PolyharmonicMap example_f1() {
  return PolyharmonicMap(1, {{{1, 1}, Coefficient(1, 0)}, {{2, 1}, Coefficient(q(1, 10), 0)}},
                         {{{2, 1}, Coefficient(q(1, 5), 0)}});
}

PolyharmonicMap example_f2() {
  return PolyharmonicMap(1, {{{1, 1}, Coefficient(1, 0)}, {{2, 1}, Coefficient(q(1, 101), 0)}},
                         {{{2, 1}, Coefficient(q(49, 101), 0)}});
}

PolyharmonicMap extremal_point(const ExtremalSpec& spec, int p) {
  if (spec.n < 2) throw ParamError("extremal point needs n >= 2");
  if (spec.k < 1 || spec.k > p) throw ParamError("extremal point needs 1 <= k <= p");
  if (spec.lambda < 0 || spec.lambda > 1) throw ParamError("lambda must lie in [0, 1]");
  const Rational m = 1 / weight(spec.n, spec.k, spec.lambda);
  const Coefficient c = spec.phase == 0.0 ? Coefficient(m, 0)
                                          : Coefficient::approx(std::polar(m.get_d(), spec.phase));
  CoefficientTable a{{{1, 1}, Coefficient(1, 0)}}, b;
  (spec.kind == ExtremalKind::analytic ? a : b)[{spec.n, spec.k}] = c;
  return PolyharmonicMap(p, std::move(a), std::move(b));
}

PolyharmonicMap half_plane_map(int truncation) {
  if (truncation < 1) throw ParamError("truncation degree must be >= 1");
  // z/(1-z) = sum z^n and z/(1-z)^2 = sum n z^n, so h = (sum (1+n) z^n)/2 and
  // g = (sum (1-n) z^n)/2.
  CoefficientTable a{{{1, 1}, Coefficient(1, 0)}}, b;
  for (int n = 2; n <= truncation; ++n) {
    a[{n, 1}] = Coefficient(q(n + 1, 2), 0);
    b[{n, 1}] = Coefficient(q(-(n - 1), 2), 0);
  }
  return PolyharmonicMap(1, std::move(a), std::move(b));
}

}  // namespace phm
