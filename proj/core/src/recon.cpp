#include "autorecon/recon.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <string>

#include "autorecon/error.hpp"
#include "autorecon/lattice.hpp"

namespace autorecon {

namespace {

std::vector<std::int64_t> units_mod(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < std::max<std::int64_t>(n, 2); ++a)
    if (gcd64(a, n) == 1) out.push_back(a);
  return out;
}

bool is_unit_mod(std::int64_t a, std::int64_t n) { return n == 1 || gcd64(mod64(a, n), n) == 1; }

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int m = 0;
    while (n % p == 0) {
      n /= p;
      ++m;
    }
    out.emplace_back(p, m);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(a).get_mpz_t(), Integer(n).get_mpz_t());
  return mod_positive(s, n).get_si();
}

CycNum from_rational(const ContextPtr& ctx, const Rational& q) { return CycNum(ctx, q); }

CycNum nonzero_query(MomentOracle& oracle, const std::vector<GroupElement>& entries, const char* what) {
  CycNum v = oracle.query(entries);
  if (v.is_zero()) throw Error(ErrorKind::contradiction, std::string(what) + " vanished on the support");
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::int64_t> UnitalDecomposition::terms() const {
  std::vector<std::int64_t> out;
  for (auto t : {u, v, w})
    if (t != 0) out.push_back(t);
  return out;
}

UnitalDecomposition unital_decomposition(std::int64_t c, std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::invalid_parameter, "modulus must be positive");
  UnitalDecomposition d;
  if (n == 1) return d;
  d.c = mod64(c, n);
  const auto units = units_mod(n);
  if (n % 2 == 0 && d.c % 2 == 1) {
    for (auto u : units)
      for (auto v : units) {
        const std::int64_t w = mod64(d.c - u - v, n);
        if (is_unit_mod(w, n)) {
          d.u = u;
          d.v = v;
          d.w = w;
          return d;
        }
      }
  } else {
    for (auto u : units) {
      const std::int64_t v = mod64(d.c - u, n);
      if (is_unit_mod(v, n)) {
        d.u = u;
        d.v = v;
        return d;
      }
    }
  }
  throw Error(ErrorKind::internal_inconsistency, "no unital decomposition of " + std::to_string(c));
}

std::vector<std::int64_t> split_coefficient(std::int64_t c, std::int64_t n) {
  const std::int64_t r = mod64(c, n);
  if (r == 0) return {};
  if (is_unit_mod(r, n)) return {r};
  return unital_decomposition(r, n).terms();
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
  if (n == 1) return 1;
  if (gcd64(a, n) != 1) throw Error(ErrorKind::not_a_unit, "order of a non-unit");
  std::int64_t l = 1;
  for (std::int64_t x = mod64(a, n); x != 1; x = static_cast<std::int64_t>(static_cast<__int128>(x) * a % n)) ++l;
  return l;
}

Integer power_exponent(std::int64_t n) {
  int m = 0;
  std::int64_t odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++m;
  }
  const std::int64_t l = multiplicative_order(2, odd);
  Integer M = (Integer(1) << static_cast<unsigned long>(l)) - 1;
  return M << static_cast<unsigned long>(m);
}

// ---------------------------------------------------------------------------

PowerDatum power_odd(MomentOracle& oracle, const GroupElement& x) {
  const GroupSpec& g = oracle.group();
  const std::int64_t n = g.exponent();
  if (n % 2 == 0) throw Error(ErrorKind::invalid_parameter, "power_odd needs an odd exponent");
  PowerDatum pd{x, power_exponent(n), CycNum(oracle.context()), {}};
  if (x.is_zero()) {
    pd.gamma = from_rational(oracle.context(), oracle.first_moment()).pow(pd.M);
    return pd;
  }
  // R_k = fhat(2^k x)^2 / fhat(2^{k+1} x) with weight 2^{l-1-k}
  const std::int64_t l = multiplicative_order(2, n);
  CycNum acc(oracle.context(), Rational(1));
  GroupElement y = x;
  for (std::int64_t k = 0; k < l; ++k) {
    const GroupElement y2 = g.scale(2, y);
    const CycNum num = nonzero_query(oracle, {y, y, g.neg(y2)}, "third-order moment");
    const CycNum den = nonzero_query(oracle, {y2, g.neg(y2)}, "second-order moment");
    CycNum r = num / den;
    acc = acc * acc * r;
    pd.factors.push_back({std::move(r), Integer(1) << static_cast<unsigned long>(l - 1 - k)});
    y = y2;
  }
  pd.gamma = std::move(acc);
  return pd;
}

PowerDatum power_even(MomentOracle& oracle, const GroupElement& x) {
  const GroupSpec& g = oracle.group();
  const std::int64_t n = g.exponent();
  if (n % 2 != 0) throw Error(ErrorKind::invalid_parameter, "power_even needs an even exponent");
  PowerDatum pd{x, power_exponent(n), CycNum(oracle.context()), {}};
  if (x.is_zero()) {
    pd.gamma = from_rational(oracle.context(), oracle.first_moment()).pow(pd.M);
    return pd;
  }
  int m = 0;
  std::int64_t odd = n;
  while (odd % 2 == 0) {
    odd /= 2;
    ++m;
  }
  const std::int64_t l = multiplicative_order(2, odd);
  const std::int64_t top = m + l;

  // (u_k, v_k) units with u_k + v_k = 2^k, repeating with period l from k = m
  std::vector<std::pair<std::int64_t, std::int64_t>> uv(static_cast<std::size_t>(top) + 1);
  uv[1] = {1, 1};
  std::int64_t pow2 = 2;
  for (std::int64_t k = 2; k < top; ++k) {
    pow2 = pow2 * 2 % n;
    const auto d = unital_decomposition(pow2, n);
    uv[static_cast<std::size_t>(k)] = {d.u, d.v};
  }
  uv[static_cast<std::size_t>(top)] = uv[static_cast<std::size_t>(m)];

  auto a_term = [&](std::int64_t k) {
    const auto [u, v] = uv[static_cast<std::size_t>(k)];
    const GroupElement ux = g.scale(u, x), vx = g.scale(v, x);
    return nonzero_query(oracle, {ux, vx, g.neg(ux), g.neg(vx)}, "fourth-order moment");
  };
  // Q_k = B_k / A_{k+1} = (fhat(u_k x) fhat(v_k x))^2 / (fhat(u_{k+1} x) fhat(v_{k+1} x))
  CycNum num(oracle.context(), Rational(1)), den(oracle.context(), Rational(1));
  for (std::int64_t k = 1; k < top; ++k) {
    const auto [u, v] = uv[static_cast<std::size_t>(k)];
    const auto [u1, v1] = uv[static_cast<std::size_t>(k + 1)];
    const GroupElement ux = g.scale(u, x), vx = g.scale(v, x);
    const CycNum b = nonzero_query(oracle, {ux, vx, ux, vx, g.scale(-u1, x), g.scale(-v1, x)}, "sixth-order moment");
    CycNum q = b / a_term(k + 1);
    num = num * num * q;
    if (k <= m - 1) den = den * den * q;
    Integer e = Integer(1) << static_cast<unsigned long>(top - 1 - k);
    if (k <= m - 1) e -= Integer(1) << static_cast<unsigned long>(m - 1 - k);
    pd.factors.push_back({std::move(q), std::move(e)});
  }
  pd.gamma = num / den;
  return pd;
}

PowerDatum recover_power(MomentOracle& oracle, const GroupElement& x) {
  return oracle.group().exponent() % 2 ? power_odd(oracle, x) : power_even(oracle, x);
}

// ---------------------------------------------------------------------------

ReconConfig ReconConfig::from_environment() {
  ReconConfig cfg;
  if (const char* env = std::getenv("AUTORECON_PRECISION"); env && *env) {
    try {
      std::size_t used = 0;
      const long bits = std::stol(env, &used);
      if (used != std::string(env).size() || bits < 32) throw std::invalid_argument("range");
      cfg.precision = bits;
      cfg.max_precision = std::max(cfg.max_precision, static_cast<mpfr_prec_t>(bits));
    } catch (const std::exception&) {
      throw Error(ErrorKind::invalid_parameter, std::string("bad AUTORECON_PRECISION: ") + env);
    }
  }
  return cfg;
}

namespace {

IntVector relation_row(std::size_t phi, std::size_t index, Integer tag, const Complex& value, long w) {
  IntVector row(phi + 3);
  if (index < phi) row[index] = 1;
  row[phi] = std::move(tag);
  row[phi + 1] = ldexp(value.re, w).round_to_integer();
  row[phi + 2] = ldexp(value.im, w).round_to_integer();
  return row;
}

Integer squared_norm(const IntVector& v) {
  Integer s = 0;
  for (const auto& e : v) s += e * e;
  return s;
}

bool within(const Integer& v, const Integer& bound) { return bound == 0 || abs(v) <= bound; }

}  // namespace

CycNum extract_root(const PowerDatum& pd, const ReconConfig& cfg) {
  return extract_root(pd, cfg, nullptr);
}

CycNum extract_root(const PowerDatum& pd, const ReconConfig& cfg, mpfr_prec_t* precision_used) {
  const ContextPtr& ctx = pd.gamma.context();
  const std::int64_t n = ctx->conductor();
  const std::size_t phi = ctx->degree();
  if (pd.gamma.is_zero()) throw Error(ErrorKind::root_recovery_failed, "power is zero");
  const Integer count = pd.M / n;
  const std::uint64_t candidates =
      count.fits_ulong_p() ? std::min<std::uint64_t>(count.get_ui(), cfg.max_candidates) : cfg.max_candidates;

  for (mpfr_prec_t prec = cfg.precision; prec <= cfg.max_precision; prec *= 2) {
    if (precision_used) *precision_used = prec;
    const mpfr_prec_t work = prec + 64;
    // principal M-th root of gamma, via the factors when available
    Complex logsum(work);
    if (pd.factors.empty()) {
      logsum = log(pd.gamma.numeric_embedding(work));
    } else {
      for (const auto& f : pd.factors) logsum = logsum + log(f.value.numeric_embedding(work)) * Real(f.exponent, work);
    }
    const Real inv_m(Rational(Integer(1), pd.M), work);
    const Complex z = exp(logsum * inv_m);
    const long mag = std::max<long>(0, abs(z).exponent2() + 1);
    const long w = prec - 32 - mag;
    if (w < 16) continue;

    const auto basis = ctx->numeric_basis(work);
    std::vector<IntVector> base;
    for (std::size_t k = 0; k < phi; ++k) base.push_back(relation_row(phi, k, 0, basis[k], w));
    base = lll_reduce(std::move(base));

    const Real step = Real::pi(work) * Real(Integer(2), work) * inv_m;
    // a genuine relation is far shorter than anything in the reduced base
    const Integer floor = squared_norm(base.front());
    auto short_enough = [&](const IntVector& v) { return (squared_norm(v) << (phi + 4)) < floor; };
    std::vector<Complex> ts;
    for (std::uint64_t j = 0; j < candidates; ++j)
      ts.push_back(z * Complex::unit(step * Real(Integer(static_cast<unsigned long>(j)), work)));

    // integral roots: nearest lattice point to the candidate itself
    const NearestPlane plane(base, work);
    for (const auto& t : ts) {
      const IntVector target = relation_row(phi, phi + 1, 0, t, w);
      std::vector<Real> real_target;
      for (const auto& e : target) real_target.emplace_back(e, work);
      IntVector v = plane.closest(real_target);
      v[phi + 1] -= target[phi + 1];
      v[phi + 2] -= target[phi + 2];
      if (!short_enough(v)) continue;
      IntVector c(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(phi));
      if (!std::all_of(c.begin(), c.end(), [&](const Integer& e) { return within(e, cfg.height_bound); })) continue;
      CycNum beta(ctx, std::move(c), 1);
      if (beta.pow(pd.M) == pd.gamma) return beta;
    }

    // general case: a denominator tag in the lattice
    for (const auto& t : ts) {
      auto rows = base;
      rows.push_back(relation_row(phi, phi, 1, Complex(-t.re, -t.im), w));
      rows = lll_reduce(std::move(rows));
      for (auto& row : rows) {
        if (row[phi] == 0 || !short_enough(row)) continue;
        if (row[phi] < 0)
          for (auto& v : row) v = -v;
        bool ok = within(row[phi], cfg.height_bound);
        IntVector c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(phi));
        for (const auto& v : c) ok = ok && within(v, cfg.height_bound);
        if (!ok) continue;
        CycNum beta(ctx, std::move(c), row[phi]);
        if (beta.pow(pd.M) == pd.gamma) return beta;
      }
    }
  }
  throw Error(ErrorKind::root_recovery_failed,
              "no root of the recovered power up to " + std::to_string(cfg.max_precision) + " bits");
}

// ---------------------------------------------------------------------------

CycNum kernel_relation_value(MomentOracle& oracle, const std::vector<GroupElement>& gens,
                             const std::vector<CycNum>& betas, std::int64_t b, const IntVector& c) {
  const GroupSpec& g = oracle.group();
  const std::int64_t n = g.exponent();
  std::vector<GroupElement> entries;
  CycNum den(oracle.context(), Rational(1));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const std::int64_t bc = mod_positive(Integer(b) * c[j], n).get_si();
    for (auto t : split_coefficient(bc, n)) {
      entries.push_back(g.scale(t, gens[j]));
      den *= betas[j].automorphism(t);
    }
  }
  if (entries.empty()) return CycNum(oracle.context(), Rational(1));
  return nonzero_query(oracle, entries, "kernel relation moment") / den;
}

std::vector<std::int64_t> solve_remodulation(const std::vector<IntVector>& basis,
                                             const std::vector<std::int64_t>& s, std::int64_t b,
                                             std::int64_t n, std::size_t unknowns) {
  if (basis.size() != s.size()) throw Error(ErrorKind::invalid_parameter, "one target per kernel vector");
  const std::size_t r = unknowns, q = basis.size();
  if (q == 0) return std::vector<std::int64_t>(r, 0);
  // [ b c^(i)_j ; N I ] solved from the left: (t, z) A = s
  IntMatrix a(r + q, q);
  for (std::size_t i = 0; i < q; ++i) {
    if (basis[i].size() != r) throw Error(ErrorKind::invalid_parameter, "kernel vector length");
    for (std::size_t j = 0; j < r; ++j) a(j, i) = mod_positive(Integer(b) * basis[i][j], n);
    a(r + i, i) = n;
  }
  IntVector rhs(q);
  for (std::size_t i = 0; i < q; ++i) rhs[i] = mod64(s[i], n);
  const auto y = solve_left(a, rhs);
  if (!y) throw Error(ErrorKind::contradiction, "kernel relations admit no phase correction");

  // reduce by the homogeneous solutions, which contain N Z^r
  const IntMatrix k = left_kernel(a);
  IntMatrix proj(k.rows() + r, r);
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) proj(i, j) = k(i, j);
  for (std::size_t j = 0; j < r; ++j) proj(k.rows() + j, j) = n;
  const IntMatrix h = hermite_normal_form(proj);
  IntVector t(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    const Integer f = floor_div(t[i], h(i, i));
    if (f == 0) continue;
    for (std::size_t j = i; j < r; ++j) t[j] -= f * h(i, j);
  }
  std::vector<std::int64_t> out(r);
  for (std::size_t j = 0; j < r; ++j) out[j] = mod_positive(t[j], n).get_si();
  return out;
}

// ---------------------------------------------------------------------------

Reconstructor::Reconstructor(MomentOracle& oracle, ReconConfig cfg)
    : oracle_(oracle), cfg_(std::move(cfg)), group_(oracle.group()), ctx_(oracle.context()) {}

const std::vector<GroupElement>& Reconstructor::support() {
  if (support_) return *support_;
  m1_ = oracle_.first_moment();
  std::vector<GroupElement> supp;
  for (const auto& x : group_.elements()) {
    if (x.is_zero()) {
      if (*m1_ != 0) supp.push_back(x);
      continue;
    }
    if (!oracle_.query({x, group_.neg(x)}).is_zero()) supp.push_back(x);
  }
  support_ = std::move(supp);
  report_.support_size = support_->size();
  return *support_;
}

CycNum Reconstructor::root_for(const GroupElement& x) {
  const std::int64_t n = group_.exponent();
  GroupElement rep = x;
  std::int64_t to_rep = 1;
  for (auto a : units_mod(n)) {
    const GroupElement y = group_.scale(a, x);
    if (y < rep) {
      rep = y;
      to_rep = a;
    }
  }
  auto it = roots_.find(rep);
  if (it == roots_.end()) {
    const PowerDatum pd = recover_power(oracle_, rep);
    mpfr_prec_t used = 0;
    CycNum beta = extract_root(pd, cfg_, &used);
    report_.max_precision_used = std::max(report_.max_precision_used, used);
    ++report_.roots_extracted;
    if (std::find(report_.exponents.begin(), report_.exponents.end(), pd.M) == report_.exponents.end())
      report_.exponents.push_back(pd.M);
    it = roots_.emplace(rep, std::move(beta)).first;
  }
  // x = a^{-1} rep
  return it->second.automorphism(inverse_mod(to_rep, n));
}

AlignmentData Reconstructor::align() {
  const auto& supp = support();
  const std::int64_t n = group_.exponent();
  std::vector<GroupElement> nonzero;
  for (const auto& x : supp)
    if (!x.is_zero()) nonzero.push_back(x);
  AlignmentData out;
  if (nonzero.empty() || n == 1) return out;
  const Subgroup target = subgroup_generated(group_, nonzero);
  report_.rank = target.rank();

  const auto primes = factor(n);
  std::vector<Integer> bs;
  for (const auto& [p, m] : primes) {
    std::int64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    bs.emplace_back(n / pm);
  }
  const auto as = bezout(bs);
  report_.generators.clear();
  for (std::size_t k = 0; k < primes.size(); ++k) {
    PrimeBlock block;
    block.p = primes[k].first;
    block.m = primes[k].second;
    block.b = bs[k].get_si();
    block.a = mod_positive(as[k], n);
    block.h = torsion_subgroup(group_, block.b);
    block.gens = quotient_generators(group_, nonzero, *block.h, target);
    block.kernel = kernel_basis(group_, block.gens, *block.h);
    for (const auto& x : block.gens) block.betas.push_back(root_for(x));
    std::vector<std::int64_t> s;
    for (const auto& c : block.kernel) {
      const auto t = as_root_of_unity(kernel_relation_value(oracle_, block.gens, block.betas, block.b, c));
      if (!t) throw Error(ErrorKind::contradiction, "kernel relation value is not a root of unity");
      s.push_back(*t);
    }
    block.phases = solve_remodulation(block.kernel, s, block.b, n, block.gens.size());
    for (std::size_t j = 0; j < block.gens.size(); ++j)
      block.alphas.push_back(root_of_unity(ctx_, block.phases[j]) * block.betas[j]);
    report_.generators.emplace_back(block.p, block.gens);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

CycNum Reconstructor::assemble_value(const AlignmentData& align, const GroupElement& x,
                                     const std::optional<std::vector<std::vector<std::int64_t>>>& expansions) {
  const auto& supp = support();
  if (x.is_zero()) return CycNum(ctx_, *m1_);
  if (!std::binary_search(supp.begin(), supp.end(), x)) return CycNum(ctx_);
  const std::int64_t n = group_.exponent();
  if (expansions && expansions->size() != align.blocks.size())
    throw Error(ErrorKind::invalid_parameter, "one expansion per prime block");

  auto coefficients = [&](std::size_t k) {
    const PrimeBlock& block = align.blocks[k];
    if (!expansions) return express_in_generators(group_, x, block.gens, *block.h);
    const auto& c = (*expansions)[k];
    if (c.size() != block.gens.size()) throw Error(ErrorKind::invalid_parameter, "expansion length");
    GroupElement rest = x;
    for (std::size_t j = 0; j < c.size(); ++j) rest = group_.sub(rest, group_.scale(c[j], block.gens[j]));
    if (!block.h->member(rest)) throw Error(ErrorKind::invalid_parameter, "expansion does not represent x");
    return c;
  };
  // prod_j prod_t fhat(t x_j) over t in split(b c_j), and the matching alphas
  auto generator_part = [&](std::size_t k, const std::vector<std::int64_t>& c, std::vector<GroupElement>& entries,
                            CycNum& den) {
    const PrimeBlock& block = align.blocks[k];
    for (std::size_t j = 0; j < c.size(); ++j)
      for (auto t : split_coefficient(block.b * c[j] % n, n)) {
        entries.push_back(group_.scale(t, block.gens[j]));
        den *= block.alphas[j].automorphism(t);
      }
  };

  if (align.blocks.size() == 1) {
    // prime-power exponent: a single query with -x
    const auto c = coefficients(0);
    std::vector<GroupElement> entries{group_.neg(x)};
    CycNum den(ctx_, Rational(1));
    generator_part(0, c, entries, den);
    return (nonzero_query(oracle_, entries, "assembly moment") / den).conj();
  }

  const CycNum beta = root_for(x);
  Integer shift = 0;
  for (std::size_t k = 0; k < align.blocks.size(); ++k) {
    const PrimeBlock& block = align.blocks[k];
    const auto c = coefficients(k);
    std::vector<GroupElement> entries;
    CycNum den(ctx_, Rational(1));
    for (auto u : split_coefficient(block.b, n)) {
      entries.push_back(group_.scale(-u, x));
      den *= beta.automorphism(mod64(-u, n));
    }
    generator_part(k, c, entries, den);
    const auto e = as_root_of_unity(nonzero_query(oracle_, entries, "assembly moment") / den);
    if (!e) throw Error(ErrorKind::contradiction, "assembly ratio is not a root of unity");
    shift += block.a * *e;
  }
  return beta * root_of_unity(ctx_, -mod_positive(shift, n).get_si());
}

SpecFn Reconstructor::assemble(const AlignmentData& align) {
  SpecFn ghat(group_);
  for (const auto& x : group_.elements()) ghat(x) = assemble_value(align, x);
  return ghat;
}

RatFn Reconstructor::run() {
  const auto start = std::chrono::steady_clock::now();
  support();
  const AlignmentData data = align();
  const SpecFn ghat = assemble(data);
  RatFn g;
  try {
    g = idft_rational(ghat);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::not_rational) throw;
    throw Error(ErrorKind::contradiction, "assembled spectrum is not the transform of a rational function");
  }
  report_.required_order = required_order(group_, report_.rank);
  report_.max_order = oracle_.log();
  report_.queries = oracle_.query_count();
  report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return g;
}

SpecFn assemble(MomentOracle& oracle, const AlignmentData& align) {
  Reconstructor r(oracle);
  return r.assemble(align);
}

RatFn reconstruct(MomentOracle& oracle, const ReconConfig& cfg, ReconReport* report) {
  Reconstructor r(oracle, cfg);
  RatFn g = r.run();
  if (report) *report = r.report();
  return g;
}

// ---------------------------------------------------------------------------

std::size_t required_order(const GroupSpec& g, std::size_t r) {
  return g.exponent() % 2 ? 2 * r + 2 : 3 * r + 3;
}

std::size_t required_order_for(const RatFn& f) {
  const auto supp = support(dft(f));
  const std::size_t r = supp.empty() ? 0 : subgroup_generated(f.group(), supp).rank();
  return required_order(f.group(), r);
}

RatFn reconstruct_hidden(const RatFn& f, const ReconConfig& cfg, std::optional<std::size_t> cap,
                         ReconReport* report) {
  Integer d = 1;
  for (const auto& v : f.values()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  RatFn scaled(f.group());
  for (std::size_t i = 0; i < f.values().size(); ++i) scaled.values()[i] = f.values()[i] * Rational(d);
  auto oracle = MomentOracle::from_function(scaled, cap.value_or(required_order_for(scaled)));
  RatFn g = reconstruct(oracle, cfg, report);
  const Rational inv(Integer(1), d);
  for (auto& v : g.values()) v *= inv;
  return g;
}

std::optional<GroupElement> verify_translation(const RatFn& f, const RatFn& g) {
  if (!(f.group() == g.group())) return std::nullopt;
  for (const auto& y : f.group().elements())
    if (translate(f, y) == g) return y;
  return std::nullopt;
}

}  // namespace autorecon
