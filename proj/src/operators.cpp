#include "polyharm/operators.hpp"

#include <algorithm>
#include <cmath>

#include "polyharm/errors.hpp"

namespace phm {

namespace {

CoefficientTable hadamard(const CoefficientTable& x, const CoefficientTable& y, bool divide_by_n) {
  CoefficientTable out;
  for (const auto& [slot, c] : x) {
    auto it = y.find(slot);
    if (it == y.end()) continue;
    Coefficient prod = c * it->second;
    if (divide_by_n && slot.n > 1) prod = prod / Scalar(slot.n);
    out.emplace(slot, prod);
  }
  return out;
}

PolyharmonicMap hadamard_map(const PolyharmonicMap& f, const PolyharmonicMap& g, bool divide) {
  const int p = std::max(f.p(), g.p());
  try {
    return PolyharmonicMap(p, hadamard(f.a_table(), g.a_table(), divide),
                           hadamard(f.b_table(), g.b_table(), divide));
  } catch (const InvalidMap& e) {
    throw InvalidMap(std::string("convolution result: ") + e.what());
  }
}

// Sum over the union of supports of w(n,k) * |x - y|.
Scalar weighted_difference(const CoefficientTable& x, const CoefficientTable& y) {
  Scalar total;
  auto term = [&](Slot s, const Coefficient& d) {
    total += Scalar(2 * (s.k - 1) + s.n) * d.magnitude();
  };
  for (const auto& [slot, c] : x) {
    auto it = y.find(slot);
    term(slot, it == y.end() ? c : c - it->second);
  }
  for (const auto& [slot, c] : y) {
    if (!x.contains(slot)) term(slot, c);
  }
  return total;
}

}  // namespace

PolyharmonicMap convolve(const PolyharmonicMap& f, const PolyharmonicMap& g) {
  return hadamard_map(f, g, false);
}

PolyharmonicMap integral_convolve(const PolyharmonicMap& f, const PolyharmonicMap& g) {
  return hadamard_map(f, g, true);
}

PolyharmonicMap convex_combine(const ConvexCombination& c) {
  if (c.terms.empty()) throw WeightError("empty convex combination");
  Scalar total;
  int p = 1;
  for (const auto& t : c.terms) {
    if (t.weight.sign() < 0) throw WeightError("negative weight " + t.weight.str());
    total += t.weight;
    p = std::max(p, t.map.p());
  }
  const bool sums_to_one = total.exact() ? total.rational() == 1
                                         : std::abs(total.to_double() - 1.0) <= kEpsStrict;
  if (!sums_to_one) throw WeightError("weights sum to " + total.str() + ", expected 1");

  CoefficientTable a, b;
  for (const auto& t : c.terms) {
    for (const auto& [slot, v] : t.map.a_table()) a[slot] = a[slot] + t.weight * v;
    for (const auto& [slot, v] : t.map.b_table()) b[slot] = b[slot] + t.weight * v;
  }
  // Approximate weights that sum to 1 within tolerance still leave a_{1,1} = 1.
  a[{1, 1}] = total.exact() ? Coefficient(1, 0) : Coefficient::approx({1.0, 0.0});
  return PolyharmonicMap(p, std::move(a), std::move(b));
}

PolyharmonicMap rescale(const PolyharmonicMap& f, const Scalar& r) {
  if (r.sign() <= 0 || (r.exact() ? r.rational() > 1 : r.to_double() > 1.0))
    throw ParamError("rescale radius must lie in (0, 1], got " + r.str());
  auto scale = [&](const CoefficientTable& t) {
    CoefficientTable out;
    for (const auto& [slot, c] : t) {
      const unsigned e = static_cast<unsigned>(2 * slot.k + slot.n - 3);
      out.emplace(slot, e == 0 ? c : pow(r, e) * c);
    }
    return out;
  };
  return PolyharmonicMap(f.p(), scale(f.a_table()), scale(f.b_table()));
}

Scalar neighborhood_distance(const PolyharmonicMap& f, const PolyharmonicMap& g) {
  // a_{1,1} = A_{1,1} = 1 is a class invariant, so (1,1) contributes only |b_{1,1} - B_{1,1}|.
  return weighted_difference(f.a_table(), g.a_table()) +
         weighted_difference(f.b_table(), g.b_table());
}

Scalar delta_bound(const PolyharmonicMap& f, const Rational& lambda) {
  if (lambda <= 0 || lambda > 1)
    throw ParamError("delta_bound needs lambda in (0, 1], got " + lambda.get_str());
  const auto report = membership(f, ClassParams::hs_lambda(lambda));
  if (!report.member) throw NotMember("map is not in HS_p(" + lambda.get_str() + ")");
  const Rational factor = lambda / (f.p() + lambda);
  return Scalar(factor) * (Scalar(2) - report.row2_value);
}

NeighborhoodReport neighborhood(const PolyharmonicMap& f, const PolyharmonicMap& g,
                                const Rational& lambda) {
  NeighborhoodReport r;
  r.delta_bound = delta_bound(f, lambda);
  r.distance = neighborhood_distance(f, g);
  if (r.distance.exact() && r.delta_bound.exact()) {
    r.inside = r.distance.rational() <= r.delta_bound.rational();
  } else {
    r.inside = r.distance.to_double() <= r.delta_bound.to_double();
  }
  return r;
}

bool ch0_certificate(const PolyharmonicMap& h) {
  if (h.p() != 1 || !h.b(1, 1).is_zero()) return false;
  for (const auto& [slot, c] : h.a_table()) {
    if (slot.n < 2) continue;
    if (!c.magnitude_le(Scalar(Rational(slot.n + 1) / 2))) return false;
  }
  for (const auto& [slot, c] : h.b_table()) {
    if (!c.magnitude_le(Scalar(Rational(slot.n - 1) / 2))) return false;
  }
  return true;
}

}  // namespace phm
