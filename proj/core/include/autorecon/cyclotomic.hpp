#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "autorecon/integer_matrix.hpp"
#include "autorecon/numeric.hpp"
#include "autorecon/rational.hpp"

namespace autorecon {

/// Coefficients of Phi_N, constant term first.
IntVector cyclotomic_poly(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Q(xi_N) with the power basis 1, xi, ..., xi^{phi(N)-1}.
class CyclotomicContext {
 public:
  explicit CyclotomicContext(std::int64_t n);

  /// Shared, cached context for conductor n.
  static std::shared_ptr<const CyclotomicContext> get(std::int64_t n);

  std::int64_t conductor() const noexcept { return n_; }
  std::size_t degree() const noexcept { return degree_; }
  const IntVector& phi_poly() const noexcept { return phi_; }
  /// xi^k written in the power basis, 0 <= k < N.
  const IntVector& reduced_power(std::int64_t k) const { return powers_.at(static_cast<std::size_t>(k)); }
  /// Largest |coefficient| among the reduced powers.
  const Integer& growth() const noexcept { return growth_; }
  bool is_unit(std::int64_t a) const;

  /// xi^k for k < degree, as complex numbers.
  std::vector<Complex> numeric_basis(mpfr_prec_t prec) const;

 private:
  std::int64_t n_;
  std::size_t degree_;
  IntVector phi_;
  std::vector<IntVector> powers_;
  Integer growth_;
};

using ContextPtr = std::shared_ptr<const CyclotomicContext>;

/// Element of Q(xi_N), stored as (integer numerators) / (positive denominator)
/// with no common content, which makes the representation canonical.
class CycNum {
 public:
  CycNum() = default;
  explicit CycNum(ContextPtr ctx);
  CycNum(ContextPtr ctx, const Rational& value);
  CycNum(ContextPtr ctx, IntVector numerators, Integer denominator);

  /// Reduce sum_k lifted[k] xi^k / den, for lifted of any length.
  static CycNum from_lifted(ContextPtr ctx, const IntVector& lifted, Integer denominator);
  static CycNum from_coeffs(ContextPtr ctx, const std::vector<Rational>& coeffs);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::int64_t conductor() const noexcept { return ctx_->conductor(); }
  const IntVector& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }
  std::vector<Rational> coeffs() const;

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  /// Throws not_rational if the value has irrational part.
  Rational rational_value() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other);
  CycNum& operator*=(const Rational& s);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }

  bool operator==(const CycNum& other) const;

  CycNum inv() const;
  /// Exponent may be negative.
  CycNum pow(const Integer& e) const;
  /// sigma_a: xi -> xi^a. sigma_0 is the constant 1.
  CycNum automorphism(std::int64_t a) const;
  CycNum conj() const { return automorphism(conductor() - 1); }

  /// Value at xi = e^{2 pi i / N}, absolute error below 2^-precision_bits.
  Complex numeric_embedding(mpfr_prec_t precision_bits) const;

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const CycNum& other) const;

  ContextPtr ctx_;
  IntVector num_;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CycNum& z);

CycNum root_of_unity(const ContextPtr& ctx, std::int64_t t);
CycNum automorphism(std::int64_t a, const CycNum& z);
/// t with z = xi^t, if any.
std::optional<std::int64_t> as_root_of_unity(const CycNum& z);
Complex numeric_embedding(const CycNum& z, mpfr_prec_t precision_bits);

}  // namespace autorecon
