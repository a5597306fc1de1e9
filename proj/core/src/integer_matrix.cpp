#include "autorecon/integer_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace autorecon {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer round_div(const Integer& a, const Integer& b) {
  // nearest integer to a/b, ties rounded up
  if (b < 0) return round_div(-a, -b);
  return floor_div(2 * a + b, 2 * b);
}

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(src, c) != 0) (*this)(dst, c) += factor * (*this)(src, c);
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, src) != 0) (*this)(r, dst) += factor * (*this)(r, src);
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::append_row(const IntVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  assert(row.size() == cols_);
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Integer IntMatrix::determinant() const {
  assert(rows_ == cols_);
  const std::size_t n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

IntVector SnfDecomposition::diagonal() const {
  const std::size_t n = std::min(D.rows(), D.cols());
  IntVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = D(i, i);
  return out;
}

SnfDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SnfDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& D = s.D;
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (bi == m || mpz_cmpabs(D(i, j).get_mpz_t(), D(bi, bj).get_mpz_t()) < 0) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) return s;

      D.swap_rows(t, bi);
      s.U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      s.V.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = -floor_div(D(i, t), D(t, t));
        D.add_row_multiple(i, t, q);
        s.U.add_row_multiple(i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = -floor_div(D(t, j), D(t, t));
        D.add_col_multiple(j, t, q);
        s.V.add_col_multiple(j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            D.add_row_multiple(t, i, 1);
            s.U.add_row_multiple(t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (h(i, col) == 0) continue;
        if (best == m || mpz_cmpabs(h(i, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0) best = i;
      }
      if (best == m) break;
      h.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (h(i, col) == 0) continue;
        h.add_row_multiple(i, row, -floor_div(h(i, col), h(row, col)));
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) h.negate_row(row);
    for (std::size_t i = 0; i < row; ++i) {
      h.add_row_multiple(i, row, -floor_div(h(i, col), h(row, col)));
    }
    ++row;
  }
  IntMatrix out(row, n);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

std::optional<IntVector> solve_left(const IntMatrix& a, const IntVector& b) {
  assert(b.size() == a.cols());
  const SnfDecomposition s = smith_normal_form(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t r = s.rank();

  IntVector bv(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) bv[j] += b[k] * s.V(k, j);

  IntVector z(m);
  for (std::size_t j = 0; j < n; ++j) {
    if (j < r) {
      if (!mpz_divisible_p(bv[j].get_mpz_t(), s.D(j, j).get_mpz_t())) return std::nullopt;
      z[j] = bv[j] / s.D(j, j);
    } else if (bv[j] != 0) {
      return std::nullopt;
    }
  }
  IntVector y(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (z[i] == 0) continue;
    for (std::size_t k = 0; k < m; ++k) y[k] += z[i] * s.U(i, k);
  }
  return y;
}

IntMatrix left_kernel(const IntMatrix& a) {
  const SnfDecomposition s = smith_normal_form(a);
  const std::size_t m = a.rows();
  const std::size_t r = s.rank();
  IntMatrix k(m - r, m);
  for (std::size_t i = r; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) k(i - r, j) = s.U(i, j);
  return k;
}

}  // namespace autorecon
