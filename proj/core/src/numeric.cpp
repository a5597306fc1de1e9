#include "autorecon/numeric.hpp"

#include <algorithm>
#include <climits>
#include <utility>

namespace autorecon {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Integer& v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Integer Real::round_to_integer() const {
  Integer out;
  mpfr_get_z(out.get_mpz_t(), value_, MPFR_RNDN);
  return out;
}

long Real::exponent2() const {
  if (mpfr_zero_p(value_)) return LONG_MIN / 2;
  return static_cast<long>(mpfr_get_exp(value_)) - 1;
}

namespace {

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
  Real r(std::max(a.precision(), b.precision()));
  op(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <typename Op>
Real unary(const Real& a, Op op) {
  Real r(a.precision());
  op(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real Real::operator-() const { return unary(*this, mpfr_neg); }
Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }

Real ldexp(const Real& x, long e) {
  Real r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

Complex Complex::unit(const Real& theta) {
  Real c(theta.precision()), s(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re + b.re, a.im + b.im); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re - b.re, a.im - b.im); }
Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }

Real abs(const Complex& z) { return binary(z.re, z.im, mpfr_hypot); }
Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex exp(const Complex& z) { return Complex::unit(z.im) * exp(z.re); }

}  // namespace autorecon
