#pragma once

#include <utility>

#include <mpfr.h>

#include "autorecon/integer_matrix.hpp"
#include "autorecon/rational.hpp"

namespace autorecon {

/// Owning MPFR value. Binary operations round to the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Integer& v, mpfr_prec_t prec);
  Real(const Rational& v, mpfr_prec_t prec);
  Real(double v, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  static Real pi(mpfr_prec_t prec);

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  Integer round_to_integer() const;
  /// floor(log2 |x|), or a large negative number for 0.
  long exponent2() const;
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  Real operator-() const;
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real atan2(const Real& y, const Real& x);
Real ldexp(const Real& x, long e);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const noexcept { return re.precision(); }
  /// e^{i theta}
  static Complex unit(const Real& theta);

  friend Complex operator+(const Complex& a, const Complex& b);
  friend Complex operator-(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& s);
};

Real abs(const Complex& z);
Real arg(const Complex& z);
/// Principal branch: log|z| + i arg z, arg in (-pi, pi].
Complex log(const Complex& z);
Complex exp(const Complex& z);

}  // namespace autorecon
