#pragma once

// Shared helpers for the test suites: seeded random inputs and brute-force
// reference computations that avoid the library code under test.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "autorecon/groups.hpp"
#include "autorecon/spectral.hpp"

namespace autorecon::testing {

inline RatFn random_integer_fn(const GroupSpec& g, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> pick(lo, hi);
  RatFn f(g);
  for (auto& v : f.values()) v = pick(rng);
  return f;
}

inline RatFn random_rational_fn(const GroupSpec& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RatFn f(g);
  for (auto& v : f.values()) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return f;
}

inline GroupElement random_element(const GroupSpec& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
  return g.at(static_cast<std::size_t>(pick(rng)));
}

/// Closure of a generating set by breadth-first addition.
inline std::set<GroupElement> closure(const GroupSpec& g, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen{g.zero()};
  std::vector<GroupElement> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        auto y = g.add(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

/// Shift that maps f onto g, by scanning every translation.
inline bool is_translate(const RatFn& f, const RatFn& g) {
  const auto& grp = f.group();
  for (const auto& y : grp.elements()) {
    bool ok = true;
    for (const auto& x : grp.elements())
      if (g(x) != f(grp.add(x, y))) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace autorecon::testing
