#pragma once

#include <vector>

#include "polyharm/series.hpp"

namespace phm {

/// Hadamard product: a_{n,k} A_{n,k} and b_{n,k} B_{n,k}. Maps with different
/// p are zero-padded to the larger one.
PolyharmonicMap convolve(const PolyharmonicMap& f, const PolyharmonicMap& g);

/// Hadamard product with the degree-n terms divided by n.
PolyharmonicMap integral_convolve(const PolyharmonicMap& f, const PolyharmonicMap& g);

struct WeightedMap {
  Scalar weight;
  PolyharmonicMap map;
};

/// sum t_i F_i with t_i >= 0 and sum t_i = 1.
struct ConvexCombination {
  std::vector<WeightedMap> terms;
};

/// Throws WeightError on negative weights or when the weights do not sum to 1
/// (exactly, or within kEpsStrict for approximate weights).
PolyharmonicMap convex_combine(const ConvexCombination& c);

/// r^{-1} F(r z): coefficient (n, k) scaled by r^{2k+n-3}. Requires 0 < r <= 1.
PolyharmonicMap rescale(const PolyharmonicMap& f, const Scalar& r);

/// Weighted coefficient distance defining N_delta(F):
/// sum_{(n,k)} (2(k-1)+n)(|a_{n,k}-A_{n,k}| + |b_{n,k}-B_{n,k}|).
Scalar neighborhood_distance(const PolyharmonicMap& f, const PolyharmonicMap& g);

/// lambda/(p+lambda) (2 - sum_k (2k-1)(|a_{1,k}|+|b_{1,k}|)).
/// Requires lambda in (0, 1] (ParamError) and F in HS_p(lambda) (NotMember).
Scalar delta_bound(const PolyharmonicMap& f, const Rational& lambda);

struct NeighborhoodReport {
  Scalar distance;
  Scalar delta_bound;
  bool inside = false;
};

/// Distance of g from f against the admissible radius of f at lambda.
NeighborhoodReport neighborhood(const PolyharmonicMap& f, const PolyharmonicMap& g,
                                const Rational& lambda);

/// Necessary coefficient bounds of normalized convex harmonic maps:
/// 2|A_n| <= n+1 and 2|B_n| <= n-1. False unless p == 1 and b_{1,1} == 0.
bool ch0_certificate(const PolyharmonicMap& h);

}  // namespace phm
