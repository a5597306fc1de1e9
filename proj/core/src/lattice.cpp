#include "autorecon/lattice.hpp"

#include "autorecon/error.hpp"

namespace autorecon {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

// Integral LLL in the style of Cohen, "A Course in Computational Algebraic
// Number Theory", Alg. 2.6.7: all Gram-Schmidt data is kept as the integers
// d_i (Gram determinants) and lambda_{k,j} = d_{j} mu_{k,j}.
class IntegralLll {
 public:
  IntegralLll(std::vector<IntVector> b, const Rational& delta)
      : b_(std::move(b)), n_(b_.size()), d_(n_ + 1), lambda_(n_, IntVector(n_)),
        dnum_(delta.get_num()), dden_(delta.get_den()) {}

  std::vector<IntVector> run() {
    if (n_ == 0) return b_;
    d_[0] = 1;
    d_[1] = dot(b_[0], b_[0]);
    if (d_[1] == 0) throw Error(ErrorKind::invalid_parameter, "LLL basis contains a zero row");
    std::size_t k = 1, kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        gram_schmidt(k);
      }
      for (;;) {
        reduce(k, k - 1);
        const Integer& lam = lambda_[k][k - 1];
        // Lovasz test, scaled by the delta denominator.
        if (dden_ * d_[k + 1] * d_[k - 1] < dnum_ * d_[k] * d_[k] - dden_ * lam * lam) {
          swap(k, kmax);
          if (k > 1) --k;
          continue;
        }
        break;
      }
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
    return b_;
  }

 private:
  // lambda_[k][j] for j < k and d_[k+1].
  void gram_schmidt(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer u = dot(b_[k], b_[j]);
      for (std::size_t i = 0; i < j; ++i) {
        u = d_[i + 1] * u - lambda_[k][i] * lambda_[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        if (u == 0) throw Error(ErrorKind::invalid_parameter, "LLL basis rows are linearly dependent");
        d_[k + 1] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    Integer twice = 2 * lambda_[k][l];
    if (mpz_cmpabs(twice.get_mpz_t(), d_[l + 1].get_mpz_t()) <= 0) return;
    const Integer q = round_div(lambda_[k][l], d_[l + 1]);
    for (std::size_t c = 0; c < b_[k].size(); ++c) b_[k][c] -= q * b_[l][c];
    lambda_[k][l] -= q * d_[l + 1];
    for (std::size_t i = 0; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const Integer lam = lambda_[k][k - 1];
    Integer bb = d_[k - 1] * d_[k + 1] + lam * lam;
    mpz_divexact(bb.get_mpz_t(), bb.get_mpz_t(), d_[k].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lambda_[i][k];
      Integer nk = d_[k + 1] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(nk.get_mpz_t(), nk.get_mpz_t(), d_[k].get_mpz_t());
      Integer nk1 = bb * t + lam * nk;
      mpz_divexact(nk1.get_mpz_t(), nk1.get_mpz_t(), d_[k + 1].get_mpz_t());
      lambda_[i][k] = std::move(nk);
      lambda_[i][k - 1] = std::move(nk1);
    }
    d_[k] = std::move(bb);
  }

  std::vector<IntVector> b_;
  std::size_t n_;
  IntVector d_;
  std::vector<IntVector> lambda_;
  Integer dnum_, dden_;
};

}  // namespace

std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const Rational& delta) {
  if (delta <= Rational(1, 4) || delta > 1) throw Error(ErrorKind::invalid_parameter, "LLL delta must lie in (1/4, 1]");
  for (const auto& row : basis)
    if (row.size() != basis.front().size()) throw Error(ErrorKind::invalid_parameter, "ragged LLL basis");
  return IntegralLll(std::move(basis), delta).run();
}

// ---------------------------------------------------------------------------

namespace {

Real dot_real(const std::vector<Real>& a, const std::vector<Real>& b, mpfr_prec_t prec) {
  Real s(0.0, prec);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

}  // namespace

NearestPlane::NearestPlane(std::vector<IntVector> basis, mpfr_prec_t prec) : basis_(std::move(basis)), prec_(prec) {
  const std::size_t dim = basis_.empty() ? 0 : basis_.front().size();
  for (const auto& row : basis_) {
    if (row.size() != dim) throw Error(ErrorKind::invalid_parameter, "ragged basis");
    std::vector<Real> v;
    for (const auto& e : row) v.emplace_back(e, prec);
    for (std::size_t j = 0; j < star_.size(); ++j) {
      const Real mu = dot_real(v, star_[j], prec) / norms_[j];
      for (std::size_t i = 0; i < dim; ++i) v[i] = v[i] - mu * star_[j][i];
    }
    Real norm = dot_real(v, v, prec);
    if (norm.is_zero()) throw Error(ErrorKind::invalid_parameter, "dependent basis rows");
    star_.push_back(std::move(v));
    norms_.push_back(std::move(norm));
  }
}

IntVector NearestPlane::coefficients(const std::vector<Real>& target) const {
  std::vector<Real> v = target;
  IntVector c(basis_.size());
  for (std::size_t k = basis_.size(); k-- > 0;) {
    c[k] = (dot_real(v, star_[k], prec_) / norms_[k]).round_to_integer();
    if (c[k] == 0) continue;
    const Real ck(c[k], prec_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] - ck * Real(basis_[k][i], prec_);
  }
  return c;
}

IntVector NearestPlane::closest(const std::vector<Real>& target) const {
  const IntVector c = coefficients(target);
  IntVector out(target.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[k] * basis_[k][i];
  return out;
}

}  // namespace autorecon
