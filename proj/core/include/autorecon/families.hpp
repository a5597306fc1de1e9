#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "autorecon/moments.hpp"
#include "autorecon/spectral.hpp"

namespace autorecon {

/// Z/6 function with values (2a, a-3b, -a-3b, -2a, 3b-a, a+3b); its transform
/// is 6(a +- sqrt(-3) b) at +-1 and zero elsewhere.
RatFn family_z6(const Integer& a, const Integer& b);

/// Pair on (Z/6)^r: fhat(+-e_j) = 1 and fhat(3,..,3) = +1 for f, -1 for g.
std::pair<RatFn, RatFn> family_threer(std::size_t r);

/// Pair on (Z/2pq)^r: fhat = 1 on the unit orbits of p(q+2)e_k and of
/// q(p+2)(1,..,1); g takes -1 on the diagonal orbit.
std::pair<RatFn, RatFn> family_sharp(std::int64_t p, std::int64_t q, std::size_t r);

/// fhat(e_r) = 1 against ghat = 0; complex valued.
std::pair<SpecFn, SpecFn> family_delta(const GroupSpec& g);

/// fhat(e_k) = ghat(e_k) = 1, and at (a_1/d,..,a_r/d) fhat = 1, ghat = e^{2 pi i/d}.
std::pair<SpecFn, SpecFn> family_divisor(const GroupSpec& g, std::int64_t d);

struct Agreement {
  /// Every moment of order <= agree_through matches.
  std::size_t agree_through = 0;
  std::optional<std::size_t> differs_at;
  /// A zero-sum sequence on which they differ.
  std::vector<GroupElement> witness;
  std::uint64_t sequences = 0;
};

/// Compares transformed moments over zero-sum multisets drawn from the union
/// of the supports, orders 1..max_order; throws budget_exceeded past `budget`
/// visited prefixes.
Agreement agreement_order(const SpecFn& f, const SpecFn& g, std::size_t max_order,
                          std::uint64_t budget = 10'000'000);
Agreement agreement_order(const RatFn& f, const RatFn& g, std::size_t max_order,
                          std::uint64_t budget = 10'000'000);

/// Indicator of {3, 5, 6} on Z/7.
RatFn worked_example_z7();
/// Its M_1..M_3 assembled from the closed-form rules for the moments.
MomentTable worked_example_z7_table();
/// The 13 x 13 crab image.
RatFn worked_example_crab();

}  // namespace autorecon
