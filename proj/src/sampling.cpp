#include "polyharm/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace phm {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Splits `total` into `parts` nonnegative exact shares with random integer weights.
std::vector<Rational> split(Rng& rng, const Rational& total, std::size_t parts) {
  std::vector<long> w(parts);
  for (auto& x : w) x = uniform_int(rng, 1, 12);
  const long sum = std::accumulate(w.begin(), w.end(), 0L);
  std::vector<Rational> out;
  out.reserve(parts);
  for (long x : w) out.emplace_back(total * Rational(x) / Rational(sum));
  return out;
}

struct Target {
  Part part;
  Slot slot;
};

void put(CoefficientTable& a, CoefficientTable& b, const Target& t, const Coefficient& c) {
  (t.part == Part::a ? a : b)[t.slot] = c;
}

}  // namespace

Rational random_unit_rational(Rng& rng, int max_den) {
  const int d = uniform_int(rng, 1, max_den);
  Rational q(uniform_int(rng, 0, d), d);
  q.canonicalize();
  return q;
}

Rational random_lambda(Rng& rng, const Rational& lo, const Rational& hi) {
  const Rational lo100 = lo * 100, hi100 = hi * 100;
  const mpz_class first = (lo100.get_num() + lo100.get_den() - 1) / lo100.get_den();
  const mpz_class last = hi100.get_num() / hi100.get_den();
  const int j = uniform_int(rng, static_cast<int>(first.get_si()), static_cast<int>(last.get_si()));
  Rational q(j, 100);
  q.canonicalize();
  return q;
}

Coefficient axis_coefficient(Rng& rng, const Rational& m, PhaseMode mode, Part part, Slot slot) {
  int turn = 0;
  if (mode == PhaseMode::quarter_turns) {
    turn = uniform_int(rng, 0, 3);
  } else {
    const bool imaginary = (slot.n + slot.k + (part == Part::b ? 1 : 0)) % 2 != 0;
    turn = (imaginary ? 1 : 0) + 2 * uniform_int(rng, 0, 1);
  }
  switch (turn) {
    case 0: return Coefficient(m, 0);
    case 1: return Coefficient(0, m);
    case 2: return Coefficient(Rational(-m), 0);
    default: return Coefficient(0, Rational(-m));
  }
}

PolyharmonicMap random_member(Rng& rng, const MemberSpec& spec) {
  CoefficientTable a, b;
  a[{1, 1}] = Coefficient(1, 0);

  // First-degree budget beta = S - 1 in [0, 1).
  Rational beta = 0;
  if (!spec.normalized && uniform_int(rng, 0, 3) != 0) {
    const int d = uniform_int(rng, 2, 24);
    beta = Rational(uniform_int(rng, 0, d - 1), d);
    beta.canonicalize();
  }
  if (sgn(beta) > 0) {
    std::vector<Target> first{{Part::b, {1, 1}}};
    for (int k = 2; k <= spec.p; ++k) {
      first.push_back({Part::a, {1, k}});
      first.push_back({Part::b, {1, k}});
    }
    std::shuffle(first.begin(), first.end(), rng);
    first.resize(static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(first.size()))));
    const auto shares = split(rng, beta, first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      const Rational m = shares[i] / (2 * first[i].slot.k - 1);
      put(a, b, first[i], axis_coefficient(rng, m, spec.phases, first[i].part, first[i].slot));
    }
  }

  // Row-1 budget: a fraction rho of 2 - S, tight (rho = 1) a third of the time.
  const Rational rho = uniform_int(rng, 0, 2) == 0 ? Rational(1) : random_unit_rational(rng);
  const Rational budget = rho * (1 - beta) * spec.budget_scale;
  std::vector<Target> slots;
  for (int n = 2; n <= spec.max_degree; ++n)
    for (int k = 1; k <= spec.p; ++k) {
      slots.push_back({Part::a, {n, k}});
      slots.push_back({Part::b, {n, k}});
    }
  std::shuffle(slots.begin(), slots.end(), rng);
  const int m = std::min<int>(uniform_int(rng, 0, spec.max_slots), static_cast<int>(slots.size()));
  slots.resize(static_cast<std::size_t>(m));
  if (!slots.empty() && sgn(budget) > 0) {
    const auto shares = split(rng, budget, slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Rational mag = shares[i] / weight(slots[i].slot.n, slots[i].slot.k, spec.lambda);
      put(a, b, slots[i], axis_coefficient(rng, mag, spec.phases, slots[i].part, slots[i].slot));
    }
  }
  return PolyharmonicMap(spec.p, std::move(a), std::move(b));
}

PolyharmonicMap random_convex_bound_map(Rng& rng, int p, int max_degree) {
  CoefficientTable a, b;
  a[{1, 1}] = Coefficient(1, 0);
  for (int n = 2; n <= max_degree; ++n) {
    for (int k = 1; k <= p; ++k) {
      // Coefficient bound met with equality a quarter of the time.
      auto fraction = [&] {
        return uniform_int(rng, 0, 3) == 0 ? Rational(1) : random_unit_rational(rng);
      };
      const Rational am = Rational(Rational(n + 1) / 2) * fraction();
      const Rational bm = Rational(Rational(n - 1) / 2) * fraction();
      a[{n, k}] = axis_coefficient(rng, Rational(am), PhaseMode::quarter_turns, Part::a, {n, k});
      b[{n, k}] = axis_coefficient(rng, Rational(bm), PhaseMode::quarter_turns, Part::b, {n, k});
    }
  }
  return PolyharmonicMap(p, std::move(a), std::move(b));
}

}  // namespace phm
