#include "autorecon/groups.hpp"

#include <numeric>
#include <sstream>

#include "autorecon/error.hpp"

namespace autorecon {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool GroupElement::is_zero() const noexcept {
  for (auto c : coords)
    if (c != 0) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  os << '(';
  for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
  return os << ')';
}

std::size_t GroupElementHash::operator()(const GroupElement& x) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : x.coords) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
  return h;
}

GroupSpec::GroupSpec(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorKind::invalid_group, "a group needs at least one modulus");
  for (auto a : dims_) {
    if (a < 1) throw Error(ErrorKind::invalid_group, "moduli must be positive");
    exponent_ = std::lcm(exponent_, a);
    if (order_ > INT64_MAX / a) throw Error(ErrorKind::invalid_group, "group order overflows");
    order_ *= a;
  }
  IntMatrix d(dims_.size(), dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) d(i, i) = dims_[i];
  for (const auto& v : smith_normal_form(d).diagonal())
    if (v > 1) invariant_factors_.push_back(v.get_si());
}

std::size_t GroupSpec::rank() const noexcept { return invariant_factors_.size(); }

void GroupSpec::check(const GroupElement& x) const {
  if (!contains(x)) {
    std::ostringstream os;
    os << "element " << x << " does not belong to the group";
    throw Error(ErrorKind::invalid_element, os.str());
  }
}

bool GroupSpec::contains(const GroupElement& x) const noexcept {
  if (x.coords.size() != dims_.size()) return false;
  for (std::size_t k = 0; k < dims_.size(); ++k)
    if (x.coords[k] < 0 || x.coords[k] >= dims_[k]) return false;
  return true;
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != dims_.size())
    throw Error(ErrorKind::invalid_element, "coordinate count does not match the group");
  for (std::size_t k = 0; k < dims_.size(); ++k) coords[k] = mod64(coords[k], dims_[k]);
  return GroupElement{std::move(coords)};
}

GroupElement GroupSpec::zero() const { return GroupElement{std::vector<std::int64_t>(dims_.size(), 0)}; }

GroupElement GroupSpec::basis(std::size_t k) const {
  GroupElement e = zero();
  e.coords.at(k) = 1 % dims_[k];
  return e;
}

std::size_t GroupSpec::index_of(const GroupElement& x) const {
  check(x);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k)
    idx = idx * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(x.coords[k]);
  return idx;
}

GroupElement GroupSpec::at(std::size_t index) const {
  GroupElement x = zero();
  for (std::size_t k = dims_.size(); k-- > 0;) {
    const auto a = static_cast<std::size_t>(dims_[k]);
    x.coords[k] = static_cast<std::int64_t>(index % a);
    index /= a;
  }
  return x;
}

GroupElement GroupSpec::add(const GroupElement& x, const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement z = x;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    z.coords[k] += y.coords[k];
    if (z.coords[k] >= dims_[k]) z.coords[k] -= dims_[k];
  }
  return z;
}

GroupElement GroupSpec::neg(const GroupElement& x) const {
  check(x);
  GroupElement z = x;
  for (std::size_t k = 0; k < dims_.size(); ++k)
    if (z.coords[k] != 0) z.coords[k] = dims_[k] - z.coords[k];
  return z;
}

GroupElement GroupSpec::sub(const GroupElement& x, const GroupElement& y) const { return add(x, neg(y)); }

GroupElement GroupSpec::scale(std::int64_t c, const GroupElement& x) const {
  check(x);
  GroupElement z = x;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const auto a = static_cast<__int128>(dims_[k]);
    const auto prod = static_cast<__int128>(mod64(c, dims_[k])) * x.coords[k];
    z.coords[k] = static_cast<std::int64_t>(prod % a);
  }
  return z;
}

std::int64_t GroupSpec::element_order(const GroupElement& x) const {
  check(x);
  std::int64_t n = 1;
  for (std::size_t k = 0; k < dims_.size(); ++k)
    n = std::lcm(n, dims_[k] / std::gcd(dims_[k], x.coords[k]));
  return n;
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i) out.push_back(at(i));
  return out;
}

GroupSpec make_group(std::vector<std::int64_t> dims) { return GroupSpec(std::move(dims)); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupSpec parent, std::vector<GroupElement> generators)
    : parent_(std::move(parent)), generators_(std::move(generators)) {
  const std::size_t r = parent_.dimension();
  IntMatrix lattice(generators_.size() + r, r);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!parent_.contains(generators_[i]))
      throw Error(ErrorKind::invalid_element, "subgroup generator outside the parent group");
    for (std::size_t k = 0; k < r; ++k) lattice(i, k) = generators_[i].coords[k];
  }
  for (std::size_t k = 0; k < r; ++k) lattice(generators_.size() + k, k) = parent_.dims()[k];
  hnf_ = hermite_normal_form(lattice);
}

bool Subgroup::member(const GroupElement& x) const {
  if (!parent_.contains(x)) throw Error(ErrorKind::invalid_element, "element outside the parent group");
  const std::size_t r = parent_.dimension();
  IntVector rem(r);
  for (std::size_t k = 0; k < r; ++k) rem[k] = x.coords[k];
  for (std::size_t i = 0; i < r; ++i) {
    if (!mpz_divisible_p(rem[i].get_mpz_t(), hnf_(i, i).get_mpz_t())) return false;
    const Integer q = rem[i] / hnf_(i, i);
    for (std::size_t k = i; k < r; ++k) rem[k] -= q * hnf_(i, k);
  }
  return true;
}

std::int64_t Subgroup::order() const {
  Integer det = 1;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) det *= hnf_(i, i);
  return parent_.order() / det.get_si();
}

std::vector<std::int64_t> Subgroup::invariant_factors() const {
  // The subgroup is L / diag(a)Z^r; write diag(a) in the HNF basis of L.
  const std::size_t r = parent_.dimension();
  IntMatrix rel(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    IntVector target(r);
    target[k] = parent_.dims()[k];
    const auto y = solve_left(hnf_, target);
    if (!y) throw Error(ErrorKind::internal_inconsistency, "subgroup lattice misses diag(dims)");
    for (std::size_t j = 0; j < r; ++j) rel(k, j) = (*y)[j];
  }
  std::vector<std::int64_t> out;
  for (const auto& v : smith_normal_form(rel).diagonal())
    if (v > 1) out.push_back(v.get_si());
  return out;
}

std::size_t Subgroup::rank() const { return invariant_factors().size(); }

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  for (auto& x : parent_.elements())
    if (member(x)) out.push_back(std::move(x));
  return out;
}

Subgroup Subgroup::join(const Subgroup& other) const {
  auto gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Subgroup(parent_, std::move(gens));
}

Subgroup Subgroup::multiple(std::int64_t c) const {
  std::vector<GroupElement> gens;
  for (const auto& x : generators_) gens.push_back(parent_.scale(c, x));
  return Subgroup(parent_, std::move(gens));
}

Subgroup subgroup_generated(const GroupSpec& g, const std::vector<GroupElement>& elems) {
  return Subgroup(g, elems);
}

bool member(const Subgroup& s, const GroupElement& x) { return s.member(x); }

Subgroup torsion_subgroup(const GroupSpec& g, std::int64_t b) {
  if (b < 1) throw Error(ErrorKind::invalid_parameter, "torsion index must be positive");
  std::vector<GroupElement> gens;
  for (std::size_t k = 0; k < g.dimension(); ++k) {
    const std::int64_t a = g.dims()[k];
    gens.push_back(g.scale(a / std::gcd(a, b), g.basis(k)));
  }
  return Subgroup(g, std::move(gens));
}

namespace {

bool contains_all(const Subgroup& big, const Subgroup& small) {
  for (const auto& x : small.generators())
    if (!big.member(x)) return false;
  return true;
}

// Smallest prime p with n a power of p, or 0 when n has two prime factors.
std::int64_t prime_power_base(std::int64_t n) {
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

}  // namespace

std::vector<GroupElement> quotient_generators(const GroupSpec& g,
                                              const std::vector<GroupElement>& support,
                                              const Subgroup& h,
                                              const std::optional<Subgroup>& target) {
  std::vector<GroupElement> all_basis;
  for (std::size_t k = 0; k < g.dimension(); ++k) all_basis.push_back(g.basis(k));
  const Subgroup t = target ? *target : Subgroup(g, all_basis);
  const Subgroup th = t.join(h);
  const std::int64_t index = th.order() / h.order();
  if (index == 1) return {};

  const std::int64_t p = prime_power_base(index);
  Subgroup current = p ? t.multiple(p).join(h) : h;
  std::vector<GroupElement> kept;
  for (const auto& s : support) {
    if (contains_all(current, th)) break;
    if (current.member(s)) continue;
    kept.push_back(s);
    current = current.join(Subgroup(g, {s}));
  }
  if (!contains_all(Subgroup(g, kept).join(h), th))
    throw Error(ErrorKind::not_generating, "support does not generate the group modulo the subgroup");
  return kept;
}

namespace {

IntMatrix relation_matrix(const GroupSpec& g, const std::vector<GroupElement>& gens, const Subgroup& h) {
  const std::size_t r = g.dimension();
  const IntMatrix& hb = h.hnf_basis();
  IntMatrix a(gens.size() + hb.rows(), r);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < r; ++k) a(i, k) = gens[i].coords[k];
  for (std::size_t i = 0; i < hb.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k) a(gens.size() + i, k) = hb(i, k);
  return a;
}

}  // namespace

std::vector<std::int64_t> express_in_generators(const GroupSpec& g, const GroupElement& x,
                                                const std::vector<GroupElement>& gens,
                                                const Subgroup& h) {
  if (!g.contains(x)) throw Error(ErrorKind::invalid_element, "element outside the group");
  IntVector b(g.dimension());
  for (std::size_t k = 0; k < g.dimension(); ++k) b[k] = x.coords[k];
  const auto y = solve_left(relation_matrix(g, gens, h), b);
  if (!y) throw Error(ErrorKind::not_in_span, "element is not in the span of the generators");
  std::vector<std::int64_t> c(gens.size());
  const Integer n = g.exponent();
  for (std::size_t j = 0; j < gens.size(); ++j) c[j] = mod_positive((*y)[j], n).get_si();
  return c;
}

std::vector<IntVector> kernel_basis(const GroupSpec& g, const std::vector<GroupElement>& gens,
                                    const Subgroup& h) {
  if (gens.empty()) return {};
  const IntMatrix k = left_kernel(relation_matrix(g, gens, h));
  IntMatrix proj(k.rows(), gens.size());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) proj(i, j) = k(i, j);
  const IntMatrix hnf = hermite_normal_form(proj);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < hnf.rows(); ++i) out.push_back(hnf.row(i));
  return out;
}

std::vector<Integer> bezout(const std::vector<Integer>& b) {
  if (b.empty()) throw Error(ErrorKind::invalid_parameter, "bezout needs at least one number");
  std::vector<Integer> a(b.size());
  Integer g = b[0];
  a[0] = 1;
  for (std::size_t i = 1; i < b.size(); ++i) {
    Integer ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), b[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) a[j] *= s;
    a[i] = t;
    g = ng;
  }
  return a;
}

}  // namespace autorecon
