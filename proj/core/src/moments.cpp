#include "autorecon/moments.hpp"

#include <algorithm>
#include <random>

#include "autorecon/error.hpp"

namespace autorecon {

ZeroSumSeq::ZeroSumSeq(const GroupSpec& g, std::vector<GroupElement> entries) : entries_(std::move(entries)) {
  GroupElement sum = g.zero();
  for (const auto& x : entries_) {
    sum = g.add(sum, x);
    if (!x.is_zero()) nonzero_.push_back(x);
  }
  if (!sum.is_zero()) throw Error(ErrorKind::invalid_element, "sequence does not sum to zero");
  std::sort(nonzero_.begin(), nonzero_.end());
}

Rational autocorr(const RatFn& f, const std::vector<GroupElement>& shifts) {
  const GroupSpec& g = f.group();
  for (const auto& s : shifts)
    if (!g.contains(s)) throw Error(ErrorKind::invalid_element, "shift outside the group");
  Rational total = 0;
  for (const auto& y : g.elements()) {
    Rational term = f(y);
    for (const auto& s : shifts) {
      if (term == 0) break;
      term *= f(g.add(y, s));
    }
    total += term;
  }
  return total;
}

CycNum transformed_moment(const SpecFn& fhat, const ZeroSumSeq& zs) {
  CycNum value(fhat.context(), Rational(1));
  for (const auto& x : zs.nonzero()) {
    value *= fhat(x);
    if (value.is_zero()) break;
  }
  return value;
}

// ---------------------------------------------------------------------------

std::uint64_t multiset_count(std::uint64_t n, std::uint64_t k) {
  // C(n + k - 1, k), saturating.
  if (k == 0) return 1;
  if (n == 0) return 0;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - 1 + i) / i;
    if (c > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(c);
}

MomentTable::MomentTable(GroupSpec g, std::size_t max_order)
    : group_(std::move(g)), max_order_(max_order), tables_(max_order + 1) {}

MomentTable MomentTable::from_function(const RatFn& f, std::size_t max_order, std::uint64_t budget) {
  const GroupSpec& g = f.group();
  const auto size = static_cast<std::uint64_t>(g.order());
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    total += multiset_count(size, n - 1);
    if (total > budget) throw Error(ErrorKind::budget_exceeded, "moment table exceeds the size budget");
  }

  MomentTable table(g, max_order);
  const auto elems = g.elements();
  for (std::size_t n = 1; n <= max_order; ++n) {
    // nondecreasing index tuples of length n - 1
    std::vector<std::size_t> idx(n - 1, 0);
    for (;;) {
      Shifts shifts;
      for (auto i : idx) shifts.push_back(elems[i]);
      const Rational v = autocorr(f, shifts);
      if (v != 0) table.tables_[n].emplace(std::move(shifts), v);
      std::size_t pos = idx.size();
      while (pos > 0 && idx[pos - 1] + 1 == size) --pos;
      if (pos == 0) break;
      const std::size_t next = idx[pos - 1] + 1;
      for (std::size_t j = pos - 1; j < idx.size(); ++j) idx[j] = next;
    }
  }
  return table;
}

Rational MomentTable::value(Shifts shifts) const {
  const std::size_t n = shifts.size() + 1;
  if (n > max_order_) throw Error(ErrorKind::order_exceeded, "moment order beyond the table");
  std::sort(shifts.begin(), shifts.end());
  const auto& t = tables_[n];
  auto it = t.find(shifts);
  return it == t.end() ? Rational(0) : it->second;
}

void MomentTable::set(Shifts shifts, const Rational& value) {
  const std::size_t n = shifts.size() + 1;
  if (n > max_order_) throw Error(ErrorKind::order_exceeded, "moment order beyond the table");
  for (const auto& s : shifts)
    if (!group_.contains(s)) throw Error(ErrorKind::invalid_element, "shift outside the group");
  std::sort(shifts.begin(), shifts.end());
  if (value == 0)
    tables_[n].erase(shifts);
  else
    tables_[n][std::move(shifts)] = value;
}

const std::map<MomentTable::Shifts, Rational>& MomentTable::entries(std::size_t n) const {
  if (n < 1 || n > max_order_) throw Error(ErrorKind::order_exceeded, "moment order beyond the table");
  return tables_[n];
}

CycNum MomentTable::transformed(const ZeroSumSeq& zs) const {
  const auto ctx = CyclotomicContext::get(group_.exponent());
  if (zs.all_zero()) return CycNum(ctx, Rational(1));
  const std::size_t n = zs.order();
  if (n > max_order_) throw Error(ErrorKind::order_exceeded, "transformed moment needs order " + std::to_string(n));
  // hat M_n(y_1..y_{n-1}) = prod_{j<=n} fhat(y_j) with y_n = -(y_1 + ... + y_{n-1}).
  const auto& ys = zs.nonzero();
  const std::int64_t N = group_.exponent();
  std::vector<Rational> lifted(static_cast<std::size_t>(N));
  for (const auto& [shifts, v] : tables_[n]) {
    Shifts perm = shifts;
    do {
      std::int64_t e = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) e += character_exponent(group_, perm[j], ys[j]);
      lifted[static_cast<std::size_t>((N - e % N) % N)] += v;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return CycNum::from_coeffs(ctx, lifted);
}

// ---------------------------------------------------------------------------

MomentOracle::MomentOracle(GroupSpec g, std::size_t cap)
    : group_(std::move(g)), ctx_(CyclotomicContext::get(group_.exponent())), cap_(cap) {}

MomentOracle::MomentOracle(MomentOracle&& other) noexcept
    : group_(std::move(other.group_)),
      ctx_(std::move(other.ctx_)),
      cap_(other.cap_),
      spectrum_(std::move(other.spectrum_)),
      table_(std::move(other.table_)),
      log_(other.log_.load()),
      count_(other.count_.load()) {}

MomentOracle MomentOracle::from_function(const RatFn& f, std::size_t cap) {
  return from_spectrum(dft(f), cap);
}

MomentOracle MomentOracle::from_spectrum(SpecFn fhat, std::size_t cap) {
  MomentOracle o(fhat.group(), cap);
  o.spectrum_ = std::move(fhat);
  return o;
}

MomentOracle MomentOracle::from_table(MomentTable table, std::size_t cap) {
  MomentOracle o(table.group(), cap);
  o.table_ = std::move(table);
  return o;
}

void MomentOracle::record(std::size_t order) {
  if (order > cap_)
    throw Error(ErrorKind::order_exceeded,
                "query of order " + std::to_string(order) + " above the cap " + std::to_string(cap_));
  std::size_t seen = log_.load();
  while (seen < order && !log_.compare_exchange_weak(seen, order)) {
  }
  ++count_;
}

CycNum MomentOracle::query(const ZeroSumSeq& zs) {
  record(zs.order());
  if (spectrum_) return transformed_moment(*spectrum_, zs);
  return table_->transformed(zs);
}

CycNum MomentOracle::query(const std::vector<GroupElement>& entries) {
  return query(ZeroSumSeq(group_, entries));
}

Rational MomentOracle::first_moment() {
  record(1);
  if (spectrum_) return (*spectrum_)(group_.zero()).rational_value();
  return table_->value({});
}

// ---------------------------------------------------------------------------

bool prop1_identity_check(const RatFn& f, std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorKind::invalid_parameter, "moment identity check needs n >= 2");
  const GroupSpec& g = f.group();
  const SpecFn fhat = dft(f);
  const auto& ctx = fhat.context();
  const auto elems = g.elements();
  const auto size = elems.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, size - 1);

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<GroupElement> xs;
    for (std::size_t j = 0; j + 1 < n; ++j) xs.push_back(elems[pick(rng)]);
    const Rational direct = autocorr(f, xs);

    // h_j(y) = fhat(y) chi(x_j, y); the sum over zero-sum tuples is
    // sum_s (h_1 * ... * h_{n-1})(s) fhat(-s) with * the group convolution.
    auto h = [&](const GroupElement& x) {
      std::vector<CycNum> out;
      out.reserve(size);
      for (const auto& y : elems) out.push_back(fhat(y) * character(g, x, y));
      return out;
    };
    std::vector<CycNum> conv = h(xs[0]);
    for (std::size_t j = 1; j < xs.size(); ++j) {
      const auto hj = h(xs[j]);
      std::vector<CycNum> next(size, CycNum(ctx));
      for (std::size_t a = 0; a < size; ++a) {
        if (conv[a].is_zero()) continue;
        for (std::size_t b = 0; b < size; ++b) {
          if (hj[b].is_zero()) continue;
          next[g.index_of(g.add(elems[a], elems[b]))] += conv[a] * hj[b];
        }
      }
      conv = std::move(next);
    }
    CycNum total(ctx);
    for (std::size_t s = 0; s < size; ++s)
      if (!conv[s].is_zero()) total += conv[s] * fhat(g.neg(elems[s]));

    Integer scale = 1;
    for (std::size_t j = 0; j + 1 < n; ++j) scale *= g.order();
    const CycNum rhs = total * Rational(Integer(1), scale);
    if (!rhs.is_rational() || rhs.rational_value() != direct) return false;
  }
  return true;
}

}  // namespace autorecon
