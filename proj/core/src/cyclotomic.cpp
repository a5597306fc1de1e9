#include "autorecon/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "autorecon/error.hpp"

namespace autorecon {

namespace {

using RatPoly = std::vector<Rational>;

void trim(IntVector& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic b.
IntVector divide_monic(IntVector a, const IntVector& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  IntVector q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

// Quotient and remainder over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - db);
  const Rational lead = b.back();
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    const Rational c = a[i] / lead;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::size_t bit_length(const Integer& v) { return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntVector cyclotomic_poly(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "cyclotomic polynomial needs N >= 1");
  static std::mutex mutex;
  static std::map<std::int64_t, IntVector> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntVector p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p.back() = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_poly(d));
  std::lock_guard lock(mutex);
  cache.emplace(n, p);
  return p;
}

CyclotomicContext::CyclotomicContext(std::int64_t n) : n_(n), phi_(cyclotomic_poly(n)) {
  degree_ = phi_.size() - 1;
  IntVector cur(degree_);
  cur[0] = 1;
  powers_.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    powers_.push_back(cur);
    for (const auto& c : cur)
      if (abs(c) > growth_) growth_ = abs(c);
    // multiply by x, then eliminate x^degree with the monic modulus
    Integer top = cur.back();
    for (std::size_t i = degree_; i-- > 1;) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
  }
}

ContextPtr CyclotomicContext::get(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, ContextPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CyclotomicContext>(n);
  return slot;
}

bool CyclotomicContext::is_unit(std::int64_t a) const {
  const std::int64_t r = ((a % n_) + n_) % n_;
  return std::gcd(r, n_) == 1;
}

std::vector<Complex> CyclotomicContext::numeric_basis(mpfr_prec_t prec) const {
  std::vector<Complex> out;
  const Real step = Real::pi(prec) * Real(Integer(2), prec) / Real(Integer(n_), prec);
  for (std::size_t k = 0; k < degree_; ++k) out.push_back(Complex::unit(step * Real(Integer(k), prec)));
  return out;
}

// ---------------------------------------------------------------------------

CycNum::CycNum(ContextPtr ctx) : ctx_(std::move(ctx)), num_(ctx_->degree()) {}

CycNum::CycNum(ContextPtr ctx, const Rational& value) : ctx_(std::move(ctx)), num_(ctx_->degree()) {
  num_[0] = value.get_num();
  den_ = value.get_den();
}

CycNum::CycNum(ContextPtr ctx, IntVector numerators, Integer denominator)
    : ctx_(std::move(ctx)), num_(std::move(numerators)), den_(std::move(denominator)) {
  if (num_.size() != ctx_->degree())
    throw Error(ErrorKind::context_mismatch, "coefficient count differs from the field degree");
  if (den_ == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
  normalize();
}

CycNum CycNum::from_lifted(ContextPtr ctx, const IntVector& lifted, Integer denominator) {
  const std::size_t phi = ctx->degree();
  const auto n = static_cast<std::size_t>(ctx->conductor());
  IntVector acc(phi);
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    if (lifted[k] == 0) continue;
    const std::size_t idx = k % n;
    if (idx < phi) {
      acc[idx] += lifted[k];
      continue;
    }
    const IntVector& row = ctx->reduced_power(static_cast<std::int64_t>(idx));
    for (std::size_t i = 0; i < phi; ++i)
      if (row[i] != 0) acc[i] += lifted[k] * row[i];
  }
  return CycNum(std::move(ctx), std::move(acc), std::move(denominator));
}

CycNum CycNum::from_coeffs(ContextPtr ctx, const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  IntVector lifted(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) lifted[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
  return from_lifted(std::move(ctx), lifted, den);
}

std::vector<Rational> CycNum::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

void CycNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = gcd(g, c);
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void CycNum::check_same(const CycNum& other) const {
  if (!ctx_ || !other.ctx_ || ctx_->conductor() != other.ctx_->conductor())
    throw Error(ErrorKind::context_mismatch, "cyclotomic values from different fields");
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const noexcept {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::not_rational, "value " + to_string() + " is not rational");
  Rational q(num_.empty() ? Integer(0) : num_[0], den_);
  q.canonicalize();
  return q;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  check_same(other);
  if (den_ == other.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) { return *this += -other; }

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  const std::size_t phi = a.num_.size();
  const auto n = static_cast<std::size_t>(a.conductor());
  IntVector lifted(std::min(2 * phi, n + phi));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      mpz_addmul(lifted[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return CycNum::from_lifted(a.ctx_, lifted, a.den_ * b.den_);
}

CycNum& CycNum::operator*=(const CycNum& other) { return *this = *this * other; }

CycNum& CycNum::operator*=(const Rational& s) {
  for (auto& c : num_) c *= s.get_num();
  den_ *= s.get_den();
  if (s == 0) den_ = 1;
  normalize();
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) {
  check_same(other);
  return *this *= other.inv();
}

bool CycNum::operator==(const CycNum& other) const {
  if (!ctx_ || !other.ctx_) return ctx_ == other.ctx_;
  return ctx_->conductor() == other.ctx_->conductor() && den_ == other.den_ && num_ == other.num_;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  if (is_rational()) {
    Rational q(den_, num_[0]);
    q.canonicalize();
    return CycNum(ctx_, q);
  }
  // Extended Euclid against the irreducible modulus: s * a = c (mod Phi_N).
  RatPoly r0(ctx_->phi_poly().begin(), ctx_->phi_poly().end());
  RatPoly r1;
  for (const auto& c : num_) r1.emplace_back(c);
  trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly next = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  if (r1.empty()) throw Error(ErrorKind::internal_inconsistency, "value shares a factor with the modulus");
  const Rational scale = Rational(den_) / r1[0];
  for (auto& c : s1) c *= scale;
  return from_coeffs(ctx_, s1);
}

CycNum CycNum::pow(const Integer& e) const {
  if (e < 0) return inv().pow(-e);
  CycNum result(ctx_, Rational(1));
  CycNum base = *this;
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
  }
  return result;
}

CycNum CycNum::automorphism(std::int64_t a) const {
  const std::int64_t n = conductor();
  if (n == 1) return *this;
  const std::int64_t r = ((a % n) + n) % n;
  if (r == 0) return CycNum(ctx_, Rational(1));
  if (std::gcd(r, n) != 1)
    throw Error(ErrorKind::not_a_unit, std::to_string(a) + " is not a unit mod " + std::to_string(n));
  IntVector lifted(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const auto idx = static_cast<std::size_t>((static_cast<__int128>(i) * r) % n);
    lifted[idx] += num_[i];
  }
  return from_lifted(ctx_, lifted, den_);
}

Complex CycNum::numeric_embedding(mpfr_prec_t precision_bits) const {
  std::size_t top = 0;
  for (const auto& c : num_) top = std::max(top, bit_length(c));
  const std::size_t den_bits = bit_length(den_);
  const long extra = std::max<long>(0, static_cast<long>(top) - static_cast<long>(den_bits) + 1);
  const mpfr_prec_t work = precision_bits + extra + static_cast<long>(bit_length(Integer(num_.size()))) + 16;
  const auto basis = ctx_->numeric_basis(work);
  Complex acc(work);
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    acc = acc + basis[i] * Real(num_[i], work);
  }
  const Real den(den_, work);
  return Complex(acc.re / den, acc.im / den);
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c(num_[i], den_);
    c.canonicalize();
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (i == 0) {
      os << to_canonical_string(c);
      continue;
    }
    if (c != 1) os << to_canonical_string(c) << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& z) { return os << z.to_string(); }

CycNum root_of_unity(const ContextPtr& ctx, std::int64_t t) {
  const std::int64_t n = ctx->conductor();
  return CycNum(ctx, ctx->reduced_power(((t % n) + n) % n), Integer(1));
}

CycNum automorphism(std::int64_t a, const CycNum& z) { return z.automorphism(a); }

std::optional<std::int64_t> as_root_of_unity(const CycNum& z) {
  if (z.denominator() != 1) return std::nullopt;
  const auto& ctx = z.context();
  for (std::int64_t t = 0; t < ctx->conductor(); ++t)
    if (ctx->reduced_power(t) == z.numerators()) return t;
  return std::nullopt;
}

Complex numeric_embedding(const CycNum& z, mpfr_prec_t precision_bits) {
  return z.numeric_embedding(precision_bits);
}

}  // namespace autorecon
