#pragma once

// Random exact maps for property tests and the experimental searches.
//
// Members are built by budget: the first-degree sum S = 1 + beta is fixed
// first, then the row-1 budget rho (2 - S) is split over at most
// `max_slots` random (part, n, k) slots, each getting share / w(n, k, lambda)
// in magnitude. Phases stay on the axes so every magnitude is rational.

#include <cstdint>
#include <random>

#include "polyharm/series.hpp"

namespace phm {

using Rng = std::mt19937_64;

enum class PhaseMode {
  quarter_turns,  // independent phase in {1, i, -1, -i} per coefficient
  axis_by_slot,   // real axis when n + k + [part == b] is even, else imaginary; random sign
};

struct MemberSpec {
  int p = 1;
  int max_degree = 8;
  Rational lambda = 0;
  bool normalized = false;
  int max_slots = 8;
  PhaseMode phases = PhaseMode::quarter_turns;
  /// Multiplies the row-1 budget; values above 1 produce non-members.
  Rational budget_scale = 1;
};

/// Uniform rational j/d in [0, 1] with a random denominator d <= max_den.
Rational random_unit_rational(Rng& rng, int max_den = 24);

/// Lambda drawn from the 101-point grid j/100 restricted to [lo, hi].
Rational random_lambda(Rng& rng, const Rational& lo, const Rational& hi);

/// Exact member of HS_p(lambda) (of HS_p^0(lambda) when spec.normalized),
/// unless budget_scale > 1.
PolyharmonicMap random_member(Rng& rng, const MemberSpec& spec);

/// Normalized map with |A_{n,k}| <= (n+1)/2 and |B_{n,k}| <= (n-1)/2 for
/// n >= 2 on every layer; when p == 1 it passes ch0_certificate.
PolyharmonicMap random_convex_bound_map(Rng& rng, int p, int max_degree);

/// Coefficient of magnitude m placed on an axis according to `mode`.
Coefficient axis_coefficient(Rng& rng, const Rational& m, PhaseMode mode, Part part, Slot slot);

}  // namespace phm
