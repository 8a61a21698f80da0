#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core/errors.hpp"
#include "core/rat.hpp"

namespace tverberg {

// Singular input where a unique solution was required. Carries the
// (vanishing) determinant so callers can report it.
class SingularSystemError : public Error {
public:
  explicit SingularSystemError(const std::string& what) : Error(what), det(0) {}
  Rat det;
};

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  void set_column(std::size_t j, const RatVector& col);
  RatVector column(std::size_t j) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rat> e_;
};

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
Rat det(const RatMatrix& m);

// Exact solution of m x = rhs. Throws SingularSystemError when det m = 0.
RatVector solve_linear(const RatMatrix& m, const RatVector& rhs);

// For two square matrices identical except in (at most) one column, the
// determinant of the column-interpolated matrix is linear in t. Returns the
// endpoint pair (det at t=0, det at t=1); callers evaluate
// det(t) = (1-t) det(0) + t det(1). Throws ContractError if the inputs
// differ in more than one column.
std::pair<Rat, Rat> det_affine_in_t(const RatMatrix& m0, const RatMatrix& m1);

// (1-t) * at0 + t * at1.
Rat eval_affine(const Rat& at0, const Rat& at1, const Rat& t);

RatVector mat_vec(const RatMatrix& m, const RatVector& x);

} // namespace tverberg
