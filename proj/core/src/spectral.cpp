#include "autorecon/spectral.hpp"

#include <numeric>

#include "autorecon/error.hpp"

namespace autorecon {

RatFn::RatFn(GroupSpec g) : group_(std::move(g)), values_(static_cast<std::size_t>(group_.order())) {}

RatFn::RatFn(GroupSpec g, std::vector<Rational> values) : group_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(group_.order()))
    throw Error(ErrorKind::invalid_parameter, "value count does not match the group order");
  for (auto& v : values_) v.canonicalize();
}

SpecFn::SpecFn(GroupSpec g) : group_(std::move(g)), ctx_(CyclotomicContext::get(group_.exponent())) {
  values_.assign(static_cast<std::size_t>(group_.order()), CycNum(ctx_));
}

SpecFn::SpecFn(GroupSpec g, std::vector<CycNum> values)
    : group_(std::move(g)), ctx_(CyclotomicContext::get(group_.exponent())), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(group_.order()))
    throw Error(ErrorKind::invalid_parameter, "value count does not match the group order");
  for (const auto& v : values_)
    if (!v.context() || v.conductor() != ctx_->conductor())
      throw Error(ErrorKind::context_mismatch, "spectral values must live in Q(xi_N), N = exp(G)");
}

bool SpecFn::operator==(const SpecFn& other) const {
  return group_ == other.group_ && values_ == other.values_;
}

std::int64_t character_exponent(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
  const std::int64_t n = g.exponent();
  __int128 acc = 0;
  for (std::size_t k = 0; k < g.dimension(); ++k) {
    const std::int64_t a = g.dims()[k];
    acc += static_cast<__int128>(n / a) * x.coords[k] % n * y.coords[k] % n;
  }
  return static_cast<std::int64_t>(acc % n);
}

CycNum character(const GroupSpec& g, const GroupElement& x, const GroupElement& y) {
  if (!g.contains(x) || !g.contains(y)) throw Error(ErrorKind::invalid_element, "element outside the group");
  return root_of_unity(CyclotomicContext::get(g.exponent()), character_exponent(g, x, y));
}

SpecFn dft(const RatFn& f) {
  const GroupSpec& g = f.group();
  const std::int64_t n = g.exponent();
  const auto ctx = CyclotomicContext::get(n);
  const auto size = static_cast<std::size_t>(g.order());

  Integer den = 1;
  for (const auto& v : f.values()) den = lcm(den, Integer(v.get_den()));
  IntVector scaled(size);
  for (std::size_t i = 0; i < size; ++i) scaled[i] = f.values()[i].get_num() * (den / f.values()[i].get_den());

  const auto elems = g.elements();
  std::vector<CycNum> out;
  out.reserve(size);
  for (std::size_t xi = 0; xi < size; ++xi) {
    IntVector lifted(static_cast<std::size_t>(n));
    for (std::size_t yi = 0; yi < size; ++yi) {
      if (scaled[yi] == 0) continue;
      const std::int64_t e = character_exponent(g, elems[xi], elems[yi]);
      lifted[static_cast<std::size_t>((n - e) % n)] += scaled[yi];
    }
    out.push_back(CycNum::from_lifted(ctx, lifted, den));
  }
  return SpecFn(g, std::move(out));
}

std::vector<CycNum> idft(const SpecFn& F) {
  const GroupSpec& g = F.group();
  const std::int64_t n = g.exponent();
  const auto size = static_cast<std::size_t>(g.order());

  Integer den = 1;
  for (const auto& v : F.values()) den = lcm(den, v.denominator());
  std::vector<IntVector> scaled;
  scaled.reserve(size);
  for (const auto& v : F.values()) {
    IntVector s = v.numerators();
    const Integer m = den / v.denominator();
    for (auto& c : s) c *= m;
    scaled.push_back(std::move(s));
  }

  const auto elems = g.elements();
  std::vector<CycNum> out;
  out.reserve(size);
  for (std::size_t xi = 0; xi < size; ++xi) {
    IntVector lifted(static_cast<std::size_t>(n));
    for (std::size_t yi = 0; yi < size; ++yi) {
      if (F.values()[yi].is_zero()) continue;
      const std::int64_t e = character_exponent(g, elems[xi], elems[yi]);
      const IntVector& s = scaled[yi];
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        lifted[static_cast<std::size_t>((static_cast<std::int64_t>(i) + e) % n)] += s[i];
      }
    }
    out.push_back(CycNum::from_lifted(F.context(), lifted, den * g.order()));
  }
  return out;
}

RatFn idft_rational(const SpecFn& F) {
  const auto values = idft(F);
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.rational_value());
  return RatFn(F.group(), std::move(out));
}

bool rationality_check(const SpecFn& F) {
  const GroupSpec& g = F.group();
  const std::int64_t n = g.exponent();
  for (const auto& x : g.elements()) {
    const CycNum& fx = F(x);
    for (std::int64_t a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      if (F(g.scale(a, x)) != fx.automorphism(a)) return false;
    }
  }
  return true;
}

std::vector<GroupElement> support(const SpecFn& F) {
  std::vector<GroupElement> out;
  const auto size = static_cast<std::size_t>(F.group().order());
  for (std::size_t i = 0; i < size; ++i)
    if (!F.values()[i].is_zero()) out.push_back(F.group().at(i));
  return out;
}

RatFn translate(const RatFn& f, const GroupElement& y) {
  const GroupSpec& g = f.group();
  RatFn out(g);
  for (const auto& x : g.elements()) out(x) = f(g.add(x, y));
  return out;
}

}  // namespace autorecon
