#include "autorecon/families.hpp"

#include <algorithm>
#include <string>

#include "autorecon/error.hpp"

namespace autorecon {

namespace {

bool is_odd_prime(std::int64_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void assign(SpecFn& F, const GroupElement& x, const CycNum& v) {
  CycNum& slot = F(x);
  if (!slot.is_zero() && !(slot == v))
    throw Error(ErrorKind::internal_inconsistency, "conflicting values on overlapping orbits");
  slot = v;
}

std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < n; ++a)
    if (gcd64(a, n) == 1) out.push_back(a);
  return out;
}

}  // namespace

RatFn family_z6(const Integer& a, const Integer& b) {
  const GroupSpec g({6});
  RatFn f(g);
  const Integer vals[6] = {2 * a, a - 3 * b, -a - 3 * b, -2 * a, 3 * b - a, a + 3 * b};
  for (std::int64_t i = 0; i < 6; ++i) f(g.element({i})) = Rational(vals[i]);
  return f;
}

std::pair<RatFn, RatFn> family_threer(std::size_t r) {
  if (r == 0) throw Error(ErrorKind::invalid_parameter, "family_threer needs r >= 1");
  const GroupSpec g(std::vector<std::int64_t>(r, 6));
  SpecFn fhat(g);
  const auto& ctx = fhat.context();
  const CycNum one(ctx, Rational(1));
  for (std::size_t j = 0; j < r; ++j) {
    fhat(g.basis(j)) = one;
    fhat(g.neg(g.basis(j))) = one;
  }
  SpecFn ghat = fhat;
  const GroupElement diag = g.element(std::vector<std::int64_t>(r, 3));
  fhat(diag) = one;
  ghat(diag) = -one;
  return {idft_rational(fhat), idft_rational(ghat)};
}

std::pair<RatFn, RatFn> family_sharp(std::int64_t p, std::int64_t q, std::size_t r) {
  if (!is_odd_prime(p) || !is_odd_prime(q) || p == q)
    throw Error(ErrorKind::invalid_parameter, "family_sharp needs distinct odd primes");
  if (r == 0) throw Error(ErrorKind::invalid_parameter, "family_sharp needs r >= 1");
  const std::int64_t n = 2 * p * q;
  const GroupSpec g(std::vector<std::int64_t>(r, n));
  SpecFn fhat(g), ghat(g);
  const auto& ctx = fhat.context();
  const CycNum one(ctx, Rational(1));
  for (auto a : units(n)) {
    for (std::size_t k = 0; k < r; ++k) {
      const GroupElement x = g.scale(a * p * (q + 2), g.basis(k));
      assign(fhat, x, one);
      assign(ghat, x, one);
    }
    const GroupElement d = g.scale(a * q * (p + 2), g.element(std::vector<std::int64_t>(r, 1)));
    assign(fhat, d, one);
    assign(ghat, d, -one);  // a is odd
  }
  return {idft_rational(fhat), idft_rational(ghat)};
}

std::pair<SpecFn, SpecFn> family_delta(const GroupSpec& g) {
  if (g.dimension() == 0 || g.order() == 1) throw Error(ErrorKind::invalid_parameter, "family_delta needs a nontrivial group");
  SpecFn fhat(g), ghat(g);
  fhat(g.basis(g.dimension() - 1)) = CycNum(fhat.context(), Rational(1));
  return {fhat, ghat};
}

std::pair<SpecFn, SpecFn> family_divisor(const GroupSpec& g, std::int64_t d) {
  if (d <= 1) throw Error(ErrorKind::invalid_parameter, "divisor must exceed 1");
  std::vector<std::int64_t> point;
  for (auto a : g.dims()) {
    if (a % d) throw Error(ErrorKind::invalid_parameter, "d must divide every a_k");
    point.push_back(a / d);
  }
  const GroupElement x = g.element(point);
  for (std::size_t k = 0; k < g.dimension(); ++k)
    if (x == g.basis(k)) throw Error(ErrorKind::invalid_parameter, "(a_k / d) coincides with a basis vector");
  SpecFn fhat(g);
  const auto& ctx = fhat.context();
  for (std::size_t k = 0; k < g.dimension(); ++k) fhat(g.basis(k)) = CycNum(ctx, Rational(1));
  SpecFn ghat = fhat;
  fhat(x) = CycNum(ctx, Rational(1));
  ghat(x) = root_of_unity(ctx, g.exponent() / d);
  return {fhat, ghat};
}

// ---------------------------------------------------------------------------

Agreement agreement_order(const SpecFn& f, const SpecFn& g, std::size_t max_order, std::uint64_t budget) {
  if (!(f.group() == g.group())) throw Error(ErrorKind::invalid_group, "functions live on different groups");
  const GroupSpec& grp = f.group();
  std::vector<GroupElement> pool;
  for (const auto& x : grp.elements())
    if (!f(x).is_zero() || !g(x).is_zero()) pool.push_back(x);

  Agreement out;
  const auto& ctx = f.context();
  std::vector<std::size_t> idx;
  std::uint64_t visited = 0;

  // multisets of exactly n pool elements, nondecreasing indices, zero sum
  for (std::size_t n = 1; n <= max_order; ++n) {
    bool differs = false;
    std::vector<CycNum> pf{CycNum(ctx, Rational(1))}, pg{CycNum(ctx, Rational(1))};
    std::vector<GroupElement> sums{grp.zero()};
    idx.clear();
    auto extend = [&](auto&& self, std::size_t start) -> void {
      if (differs) return;
      if (++visited > budget) throw Error(ErrorKind::budget_exceeded, "agreement enumeration exceeds the budget");
      if (idx.size() == n) {
        if (!sums.back().is_zero()) return;
        ++out.sequences;
        if (!(pf.back() == pg.back())) {
          differs = true;
          out.witness.clear();
          for (auto i : idx) out.witness.push_back(pool[i]);
        }
        return;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        idx.push_back(i);
        pf.push_back(pf.back() * f(pool[i]));
        pg.push_back(pg.back() * g(pool[i]));
        sums.push_back(grp.add(sums.back(), pool[i]));
        // both products already zero: every completion agrees
        if (!(pf.back().is_zero() && pg.back().is_zero())) self(self, i);
        idx.pop_back();
        pf.pop_back();
        pg.pop_back();
        sums.pop_back();
        if (differs) return;
      }
    };
    extend(extend, 0);
    if (differs) {
      out.differs_at = n;
      return out;
    }
    out.agree_through = n;
  }
  return out;
}

Agreement agreement_order(const RatFn& f, const RatFn& g, std::size_t max_order, std::uint64_t budget) {
  return agreement_order(dft(f), dft(g), max_order, budget);
}

// ---------------------------------------------------------------------------

RatFn worked_example_z7() {
  const GroupSpec g({7});
  RatFn f(g);
  for (std::int64_t p : {3, 5, 6}) f(g.element({p})) = 1;
  return f;
}

MomentTable worked_example_z7_table() {
  const GroupSpec g({7});
  MomentTable t(g, 3);
  auto e = [&](std::int64_t a) { return g.element({a}); };
  t.set({}, 3);
  for (std::int64_t x = 0; x < 7; ++x) t.set({e(x)}, x == 0 ? 3 : 1);
  for (std::int64_t x = 0; x < 7; ++x)
    for (std::int64_t y = x; y < 7; ++y) {
      Rational v = 0;
      if (x == 0 && y == 0)
        v = 3;
      else if (x == 0 || x == y)
        v = 1;  // one shift zero, or both equal: M_2 of the other
      t.set({e(x), e(y)}, v);
    }
  for (auto [x, y] : {std::pair{1, 5}, {2, 3}, {4, 6}}) t.set({e(x), e(y)}, 1);
  return t;
}

RatFn worked_example_crab() {
  static const char* rows[13] = {
      "0000000000000", "0000000000000", "0000000000000", "0000011100000", "0000111110000",
      "0001001001000", "0011021021100", "0101111111010", "0001000001000", "0000110110000",
      "0000000000000", "0000000000000", "0000000000000",
  };
  const GroupSpec g({13, 13});
  RatFn f(g);
  for (std::int64_t i = 0; i < 13; ++i)
    for (std::int64_t j = 0; j < 13; ++j) f(g.element({i, j})) = rows[i][j] - '0';
  return f;
}

}  // namespace autorecon
