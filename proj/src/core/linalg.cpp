#include "core/linalg.hpp"

#include <cstddef>

namespace tverberg {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

void RatMatrix::set_column(std::size_t j, const RatVector& col) {
  if (j >= cols_ || col.size() != rows_)
    throw DimensionError("set_column: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = col[i];
}

RatVector RatMatrix::column(std::size_t j) const {
  if (j >= cols_) throw DimensionError("column: index out of range");
  RatVector col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, j);
  return col;
}

namespace {

// Clears denominators row by row. Each row is multiplied by the lcm of its
// entry denominators; the product of the multipliers is returned through
// row_scale so determinants can be mapped back. Row scaling leaves the
// solution of an augmented system unchanged.
std::vector<std::vector<mpz_class>> clear_denominators(const RatMatrix& m,
                                                       std::size_t extra_col,
                                                       const RatVector* rhs,
                                                       mpz_class& row_scale) {
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols() + extra_col;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(cols));
  row_scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    if (rhs)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    if (rhs)
      a[i][m.cols()] = (*rhs)[i].num() * (l / (*rhs)[i].den());
    row_scale *= l;
  }
  return a;
}

// Fraction-free forward elimination (Bareiss). Works in place on an
// n x cols integer matrix whose left n x n block is eliminated; trailing
// columns ride along. Returns the permutation sign, or 0 if the left block
// is singular. On success a[k][k] is the k-th leading principal minor of
// the row-permuted matrix; a[n-1][n-1] is its determinant.
int bareiss(std::vector<std::vector<mpz_class>>& a, std::size_t n) {
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    const std::size_t cols = a[k].size();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign;
}

} // namespace

Rat det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);

  mpz_class row_scale;
  auto a = clear_denominators(m, 0, nullptr, row_scale);
  int sign = bareiss(a, n);
  if (sign == 0) return Rat(0);
  mpz_class d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return Rat(d, row_scale);
}

RatVector solve_linear(const RatMatrix& m, const RatVector& rhs) {
  if (m.rows() != m.cols()) throw DimensionError("solve_linear: matrix not square");
  if (rhs.size() != m.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  const std::size_t n = m.rows();
  if (n == 0) return {};

  mpz_class row_scale;
  auto a = clear_denominators(m, 1, &rhs, row_scale);
  int sign = bareiss(a, n);
  if (sign == 0)
    throw SingularSystemError("solve_linear: singular system (det = 0)");

  // Back substitution over exact rationals on the upper-triangular system.
  RatVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat acc(Rat(mpz_class(a[ii][n])));
    for (std::size_t j = ii + 1; j < n; ++j)
      acc -= Rat(mpz_class(a[ii][j])) * x[j];
    x[ii] = acc / Rat(mpz_class(a[ii][ii]));
  }
  return x;
}

std::pair<Rat, Rat> det_affine_in_t(const RatMatrix& m0, const RatMatrix& m1) {
  if (m0.rows() != m1.rows() || m0.cols() != m1.cols())
    throw DimensionError("det_affine_in_t: shape mismatch");
  std::size_t differing = 0;
  for (std::size_t j = 0; j < m0.cols(); ++j) {
    for (std::size_t i = 0; i < m0.rows(); ++i) {
      if (m0.at(i, j) != m1.at(i, j)) {
        ++differing;
        break;
      }
    }
  }
  if (differing > 1)
    throw ContractError("det_affine_in_t: matrices differ in more than one column");
  return {det(m0), det(m1)};
}

Rat eval_affine(const Rat& at0, const Rat& at1, const Rat& t) {
  return (Rat(1) - t) * at0 + t * at1;
}

RatVector mat_vec(const RatMatrix& m, const RatVector& x) {
  if (x.size() != m.cols()) throw DimensionError("mat_vec: length mismatch");
  RatVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

} // namespace tverberg
