#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "autorecon/cyclotomic.hpp"
#include "autorecon/groups.hpp"
#include "autorecon/moments.hpp"
#include "autorecon/spectral.hpp"

namespace autorecon {

/// c = u + v + w (mod N) with u, v units and w = 0, or all three units when N
/// is even and c odd.
struct UnitalDecomposition {
  std::int64_t c = 0;
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;

  /// The nonzero parts.
  std::vector<std::int64_t> terms() const;
};

UnitalDecomposition unital_decomposition(std::int64_t c, std::int64_t n);

/// Residues t_i summing to c mod N whose multiples t_i x stay in the unit
/// orbit of x: {} for 0, {c} for a unit, the unital decomposition otherwise.
std::vector<std::int64_t> split_coefficient(std::int64_t c, std::int64_t n);

/// Smallest l >= 1 with a^l = 1 mod n (1 when n = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);

/// Exponent M used by power recovery: 2^l - 1 for odd N, 2^m (2^l - 1) for
/// N = 2^m N' with N' odd, where l is the order of 2 mod N'.
Integer power_exponent(std::int64_t n);

struct PowerFactor {
  CycNum value;
  Integer exponent;
};

/// gamma = fhat(x)^M, also written as prod factor^exponent.
struct PowerDatum {
  GroupElement x;
  Integer M;
  CycNum gamma;
  std::vector<PowerFactor> factors;
};

PowerDatum power_odd(MomentOracle& oracle, const GroupElement& x);
PowerDatum power_even(MomentOracle& oracle, const GroupElement& x);
/// Dispatches on the parity of exp(G).
PowerDatum recover_power(MomentOracle& oracle, const GroupElement& x);

struct ReconConfig {
  /// Starting precision of the numeric embedding, doubled on failure.
  mpfr_prec_t precision = 256;
  mpfr_prec_t max_precision = 4096;
  /// Largest accepted |coefficient| (numerator and denominator) of an
  /// integer relation; 0 disables the filter.
  Integer height_bound = 0;
  /// Cap on root candidates examined per precision level.
  std::uint64_t max_candidates = 1'000'000;

  /// Defaults, with AUTORECON_PRECISION overriding the starting precision.
  static ReconConfig from_environment();
};

/// beta with beta^M = gamma, found by numeric M-th root, integer relation
/// against the power basis and exact verification.
CycNum extract_root(const PowerDatum& pd, const ReconConfig& cfg);
/// As above, reporting the precision at which the root was found.
CycNum extract_root(const PowerDatum& pd, const ReconConfig& cfg, mpfr_prec_t* precision_used);

/// prod_j (fhat(x_j) / beta_j)^{b c_j} from a single moment query.
CycNum kernel_relation_value(MomentOracle& oracle, const std::vector<GroupElement>& gens,
                             const std::vector<CycNum>& betas, std::int64_t b, const IntVector& c);

/// t with sum_j b c^(i)_j t_j = s_i (mod N) for every basis vector c^(i);
/// the smallest solution in the order of the solution lattice's HNF.
std::vector<std::int64_t> solve_remodulation(const std::vector<IntVector>& basis,
                                             const std::vector<std::int64_t>& s, std::int64_t b,
                                             std::int64_t n, std::size_t unknowns);

/// Data for one prime p^m || N.
struct PrimeBlock {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t b = 1;  // N / p^m
  Integer a = 1;       // Bezout coefficient, sum a_k b_k = 1
  std::optional<Subgroup> h;
  std::vector<GroupElement> gens;
  std::vector<IntVector> kernel;
  std::vector<CycNum> betas;
  std::vector<std::int64_t> phases;
  std::vector<CycNum> alphas;
};

struct AlignmentData {
  std::vector<PrimeBlock> blocks;
};

struct ReconReport {
  std::size_t max_order = 0;
  std::uint64_t queries = 0;
  std::size_t support_size = 0;
  std::size_t rank = 0;
  std::size_t required_order = 0;
  std::vector<std::pair<std::int64_t, std::vector<GroupElement>>> generators;
  std::vector<Integer> exponents;
  std::size_t roots_extracted = 0;
  mpfr_prec_t max_precision_used = 0;
  double seconds = 0;
};

/// The pipeline with its intermediate state, so the steps can be inspected.
class Reconstructor {
 public:
  Reconstructor(MomentOracle& oracle, ReconConfig cfg = {});

  /// x with fhat(x) != 0, via fhat(x) fhat(-x) != 0 (and M_1 != 0 at 0).
  const std::vector<GroupElement>& support();
  AlignmentData align();
  /// ghat(x); `expansions` optionally fixes the coefficients per block.
  CycNum assemble_value(const AlignmentData& align, const GroupElement& x,
                        const std::optional<std::vector<std::vector<std::int64_t>>>& expansions = std::nullopt);
  SpecFn assemble(const AlignmentData& align);
  RatFn run();

  /// Root for x consistent across each unit orbit.
  CycNum root_for(const GroupElement& x);
  const ReconReport& report() const noexcept { return report_; }

 private:
  MomentOracle& oracle_;
  ReconConfig cfg_;
  GroupSpec group_;
  ContextPtr ctx_;
  std::optional<std::vector<GroupElement>> support_;
  std::optional<Rational> m1_;
  std::map<GroupElement, CycNum> roots_;
  ReconReport report_;
};

SpecFn assemble(MomentOracle& oracle, const AlignmentData& align);
RatFn reconstruct(MomentOracle& oracle, const ReconConfig& cfg = {}, ReconReport* report = nullptr);

/// Order budget of the main theorem: 2r + 2 for odd exp(G), 3r + 3 for even.
std::size_t required_order(const GroupSpec& g, std::size_t r);
/// required_order with r the rank of the subgroup generated by supp(fhat).
std::size_t required_order_for(const RatFn& f);

/// Clears denominators, reconstructs from a hidden-function oracle with the
/// given cap (default: required_order_for), and scales back.
RatFn reconstruct_hidden(const RatFn& f, const ReconConfig& cfg = {}, std::optional<std::size_t> cap = std::nullopt,
                         ReconReport* report = nullptr);

/// y with g(x) = f(x + y) for all x.
std::optional<GroupElement> verify_translation(const RatFn& f, const RatFn& g);

}  // namespace autorecon
