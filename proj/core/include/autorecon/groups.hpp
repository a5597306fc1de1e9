#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "autorecon/integer_matrix.hpp"

namespace autorecon {

/// A point of a finite abelian grid, coordinates fully reduced.
struct GroupElement {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GroupElement&) const = default;
  bool is_zero() const noexcept;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& x) const noexcept;
};

/// Z/a_1 x ... x Z/a_r in the caller's coordinates.
class GroupSpec {
 public:
  GroupSpec() = default;
  explicit GroupSpec(std::vector<std::int64_t> dims);

  const std::vector<std::int64_t>& dims() const noexcept { return dims_; }
  std::size_t dimension() const noexcept { return dims_.size(); }
  std::int64_t exponent() const noexcept { return exponent_; }
  std::int64_t order() const noexcept { return order_; }
  const std::vector<std::int64_t>& invariant_factors() const noexcept { return invariant_factors_; }
  /// Number of invariant factors > 1.
  std::size_t rank() const noexcept;

  bool operator==(const GroupSpec& other) const { return dims_ == other.dims_; }

  /// Reduces arbitrary integer coordinates.
  GroupElement element(std::vector<std::int64_t> coords) const;
  GroupElement zero() const;
  GroupElement basis(std::size_t k) const;
  bool contains(const GroupElement& x) const noexcept;

  /// Row-major position of an element and its inverse.
  std::size_t index_of(const GroupElement& x) const;
  GroupElement at(std::size_t index) const;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement scale(std::int64_t c, const GroupElement& x) const;
  /// Smallest n >= 1 with n*x = 0.
  std::int64_t element_order(const GroupElement& x) const;

  /// All elements in row-major (lexicographic) order.
  std::vector<GroupElement> elements() const;

 private:
  void check(const GroupElement& x) const;

  std::vector<std::int64_t> dims_;
  std::int64_t exponent_ = 1;
  std::int64_t order_ = 1;
  std::vector<std::int64_t> invariant_factors_;
};

GroupSpec make_group(std::vector<std::int64_t> dims);

/// Subgroup described by the lattice of lifts of its generators plus diag(dims).
class Subgroup {
 public:
  Subgroup(GroupSpec parent, std::vector<GroupElement> generators);

  const GroupSpec& parent() const noexcept { return parent_; }
  const std::vector<GroupElement>& generators() const noexcept { return generators_; }
  /// Square, upper triangular, positive diagonal.
  const IntMatrix& hnf_basis() const noexcept { return hnf_; }

  bool member(const GroupElement& x) const;
  std::int64_t order() const;
  std::vector<std::int64_t> invariant_factors() const;
  std::size_t rank() const;
  std::vector<GroupElement> elements() const;
  /// Generators of this subgroup joined with those of another.
  Subgroup join(const Subgroup& other) const;
  /// { c*x : x in this subgroup }.
  Subgroup multiple(std::int64_t c) const;

 private:
  GroupSpec parent_;
  std::vector<GroupElement> generators_;
  IntMatrix hnf_;
};

Subgroup subgroup_generated(const GroupSpec& g, const std::vector<GroupElement>& elems);
bool member(const Subgroup& s, const GroupElement& x);

/// { x : b*x = 0 }.
Subgroup torsion_subgroup(const GroupSpec& g, std::int64_t b);

/// Elements of `support` (scanned in order) generating target+h modulo h; the
/// target defaults to the whole group. When the quotient is a p-group the scan
/// works in its Frattini quotient, so at most rank-many elements are kept.
std::vector<GroupElement> quotient_generators(const GroupSpec& g,
                                              const std::vector<GroupElement>& support,
                                              const Subgroup& h,
                                              const std::optional<Subgroup>& target = std::nullopt);

/// Coefficients c with x - sum c_j gens[j] in h, each reduced mod exp(G).
std::vector<std::int64_t> express_in_generators(const GroupSpec& g, const GroupElement& x,
                                                const std::vector<GroupElement>& gens,
                                                const Subgroup& h);

/// HNF basis of { c : sum c_j gens[j] in h }.
std::vector<IntVector> kernel_basis(const GroupSpec& g, const std::vector<GroupElement>& gens,
                                    const Subgroup& h);

/// a with sum a_i b_i = gcd(b).
std::vector<Integer> bezout(const std::vector<Integer>& b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t mod64(std::int64_t a, std::int64_t m);

}  // namespace autorecon
