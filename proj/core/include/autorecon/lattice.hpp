#pragma once

#include <vector>

#include "autorecon/integer_matrix.hpp"
#include "autorecon/numeric.hpp"
#include "autorecon/rational.hpp"

namespace autorecon {

/// Exact integral LLL reduction of linearly independent integer rows with
/// Lovasz constant delta in (1/4, 1]. Throws invalid_parameter on dependent rows.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const Rational& delta = Rational(99, 100));

/// Babai's nearest-plane rounding against a fixed (ideally LLL-reduced) basis.
/// Gram-Schmidt data is kept in floating point at the given precision.
class NearestPlane {
 public:
  NearestPlane(std::vector<IntVector> basis, mpfr_prec_t prec);

  const std::vector<IntVector>& basis() const noexcept { return basis_; }
  /// Integer coefficients c with sum c_i basis_i close to target.
  IntVector coefficients(const std::vector<Real>& target) const;
  /// The lattice vector sum c_i basis_i for those coefficients.
  IntVector closest(const std::vector<Real>& target) const;

 private:
  std::vector<IntVector> basis_;
  mpfr_prec_t prec_;
  std::vector<std::vector<Real>> star_;
  std::vector<Real> norms_;
};

}  // namespace autorecon
