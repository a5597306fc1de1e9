#pragma once

#include <cstdint>
#include <vector>

#include "autorecon/cyclotomic.hpp"
#include "autorecon/groups.hpp"
#include "autorecon/rational.hpp"

namespace autorecon {

/// Rational-valued function on a grid, stored row-major.
class RatFn {
 public:
  RatFn() = default;
  explicit RatFn(GroupSpec g);
  RatFn(GroupSpec g, std::vector<Rational> values);

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::vector<Rational>& values() noexcept { return values_; }

  const Rational& operator()(const GroupElement& x) const { return values_[group_.index_of(x)]; }
  Rational& operator()(const GroupElement& x) { return values_[group_.index_of(x)]; }

  bool operator==(const RatFn& other) const = default;

 private:
  GroupSpec group_;
  std::vector<Rational> values_;
};

/// Cyclotomic-valued function on a grid with conductor exp(G).
class SpecFn {
 public:
  SpecFn() = default;
  explicit SpecFn(GroupSpec g);
  SpecFn(GroupSpec g, std::vector<CycNum> values);

  const GroupSpec& group() const noexcept { return group_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<CycNum>& values() const noexcept { return values_; }

  const CycNum& operator()(const GroupElement& x) const { return values_[group_.index_of(x)]; }
  CycNum& operator()(const GroupElement& x) { return values_[group_.index_of(x)]; }

  bool operator==(const SpecFn& other) const;

 private:
  GroupSpec group_;
  ContextPtr ctx_;
  std::vector<CycNum> values_;
};

/// sum_k (N/a_k) x_k y_k mod N.
std::int64_t character_exponent(const GroupSpec& g, const GroupElement& x, const GroupElement& y);
CycNum character(const GroupSpec& g, const GroupElement& x, const GroupElement& y);

/// fhat(x) = sum_y f(y) conj(chi(x, y)).
SpecFn dft(const RatFn& f);
/// f(x) = |G|^-1 sum_y F(y) chi(x, y).
std::vector<CycNum> idft(const SpecFn& F);
/// As idft, throwing not_rational unless every value is rational.
RatFn idft_rational(const SpecFn& F);

/// F(a x) = sigma_a(F(x)) for all x and all units a.
bool rationality_check(const SpecFn& F);

std::vector<GroupElement> support(const SpecFn& F);

/// x -> f(x + y).
RatFn translate(const RatFn& f, const GroupElement& y);

}  // namespace autorecon
