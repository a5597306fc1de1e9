#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "autorecon/cyclotomic.hpp"
#include "autorecon/groups.hpp"
#include "autorecon/spectral.hpp"

namespace autorecon {

/// Group elements summing to zero. Zero entries are ignored: the order is the
/// number of nonzero entries, and an all-zero sequence has order 1.
class ZeroSumSeq {
 public:
  ZeroSumSeq(const GroupSpec& g, std::vector<GroupElement> entries);

  const std::vector<GroupElement>& entries() const noexcept { return entries_; }
  /// Nonzero entries, sorted.
  const std::vector<GroupElement>& nonzero() const noexcept { return nonzero_; }
  std::size_t order() const noexcept { return nonzero_.empty() ? 1 : nonzero_.size(); }
  bool all_zero() const noexcept { return nonzero_.empty(); }

 private:
  std::vector<GroupElement> entries_;
  std::vector<GroupElement> nonzero_;
};

/// M_n(f; x_1..x_{n-1}) = sum_y f(y) f(y + x_1) ... f(y + x_{n-1}).
Rational autocorr(const RatFn& f, const std::vector<GroupElement>& shifts);

/// Product of fhat over the nonzero entries (1 for the all-zero sequence).
CycNum transformed_moment(const SpecFn& fhat, const ZeroSumSeq& zs);

/// Sparse exact autocorrelation tables of orders 1..max_order, one entry per
/// sorted shift multiset (M_n is symmetric in its shifts).
class MomentTable {
 public:
  using Shifts = std::vector<GroupElement>;

  MomentTable(GroupSpec g, std::size_t max_order);

  /// All moments of f up to max_order; throws budget_exceeded when more than
  /// `budget` shift multisets would have to be evaluated.
  static MomentTable from_function(const RatFn& f, std::size_t max_order, std::uint64_t budget = 5'000'000);

  const GroupSpec& group() const noexcept { return group_; }
  std::size_t max_order() const noexcept { return max_order_; }

  /// Shifts may be in any order; missing entries are zero.
  Rational value(Shifts shifts) const;
  void set(Shifts shifts, const Rational& value);
  /// Nonzero entries of order n (n - 1 shifts).
  const std::map<Shifts, Rational>& entries(std::size_t n) const;

  /// The transformed moment from the order(zs) table; throws order_exceeded
  /// beyond max_order.
  CycNum transformed(const ZeroSumSeq& zs) const;

 private:
  GroupSpec group_;
  std::size_t max_order_;
  std::vector<std::map<Shifts, Rational>> tables_;
};

/// Number of multisets of size k drawn from n kinds.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k);

/// The reconstructor's only view of the hidden function: transformed moments
/// up to a cap, with the highest order queried recorded.
class MomentOracle {
 public:
  static MomentOracle from_function(const RatFn& f, std::size_t cap);
  static MomentOracle from_spectrum(SpecFn fhat, std::size_t cap);
  static MomentOracle from_table(MomentTable table, std::size_t cap);

  MomentOracle(MomentOracle&& other) noexcept;
  MomentOracle& operator=(MomentOracle&&) = delete;
  MomentOracle(const MomentOracle&) = delete;

  const GroupSpec& group() const noexcept { return group_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t log() const noexcept { return log_.load(); }
  std::uint64_t query_count() const noexcept { return count_.load(); }

  CycNum query(const ZeroSumSeq& zs);
  CycNum query(const std::vector<GroupElement>& entries);
  /// M_1(f) = fhat(0); logged as an order-1 query.
  Rational first_moment();

 private:
  MomentOracle(GroupSpec g, std::size_t cap);
  void record(std::size_t order);

  GroupSpec group_;
  ContextPtr ctx_;
  std::size_t cap_;
  std::optional<SpecFn> spectrum_;
  std::optional<MomentTable> table_;
  std::atomic<std::size_t> log_{0};
  std::atomic<std::uint64_t> count_{0};
};

/// Checks M_n(f; x) = |G|^{-(n-1)} sum over zero-sum (y_1..y_n) of
/// prod fhat(y_j) prod chi(x_j, y_j) on `trials` random shift tuples.
bool prop1_identity_check(const RatFn& f, std::size_t n, std::size_t trials, std::uint64_t seed = 1);

}  // namespace autorecon
