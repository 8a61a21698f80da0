#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/linalg.hpp"
#include "core/rng.hpp"

using namespace tverberg;

namespace {

// Independent determinant oracle: textbook cofactor expansion along the
// first row. Exponential, fine up to 7x7.
Rat det_by_cofactor(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  Rat acc(0);
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    acc += Rat(sign) * m.at(0, j) * det_by_cofactor(minor);
    sign = -sign;
  }
  return acc;
}

RatMatrix random_matrix(Rng& rng, std::size_t n, long lo, long hi) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(rng.uniform_int(lo, hi));
  return m;
}

} // namespace

TEST_CASE("determinant basics") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(2);
  m.at(1, 0) = Rat(3);
  m.at(1, 1) = Rat(4);
  CHECK(det(m) == Rat(-2));

  CHECK(det(RatMatrix::identity(5)) == Rat(1));

  RatMatrix s(2, 2);
  s.at(0, 0) = Rat(1);
  s.at(0, 1) = Rat(2);
  s.at(1, 0) = Rat(2);
  s.at(1, 1) = Rat(4);
  CHECK(det(s) == Rat(0));

  RatMatrix one(1, 1);
  one.at(0, 0) = Rat(-7, 3);
  CHECK(det(one) == Rat(-7, 3));
}

TEST_CASE("determinant with rational entries") {
  RatMatrix m(3, 3);
  Rat vals[3][3] = {{Rat(1, 2), Rat(1, 3), Rat(2)},
                    {Rat(-1), Rat(3, 4), Rat(0)},
                    {Rat(5), Rat(1, 6), Rat(-2, 7)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  CHECK(det(m) == det_by_cofactor(m));
}

TEST_CASE("elimination matches cofactor expansion on random matrices") {
  Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(rng.uniform_int(0, 5)); // up to 7x7
    RatMatrix m = random_matrix(rng, n, -5, 5);
    CHECK(det(m) == det_by_cofactor(m));
  }
}

TEST_CASE("row swap flips the sign, row scaling multiplies") {
  Rng rng(99);
  RatMatrix m = random_matrix(rng, 4, -9, 9);
  Rat base = det(m);

  RatMatrix swapped = m;
  for (std::size_t j = 0; j < 4; ++j) {
    Rat tmp = swapped.at(0, j);
    swapped.at(0, j) = swapped.at(2, j);
    swapped.at(2, j) = tmp;
  }
  CHECK(det(swapped) == -base);

  RatMatrix scaled = m;
  for (std::size_t j = 0; j < 4; ++j) scaled.at(1, j) *= Rat(3, 7);
  CHECK(det(scaled) == base * Rat(3, 7));
}

TEST_CASE("solve_linear returns the exact solution") {
  Rng rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(rng.uniform_int(0, 4));
    RatMatrix m = random_matrix(rng, n, -6, 6);
    if (det(m).is_zero()) continue;
    RatVector x(n);
    for (auto& v : x) v = Rat(rng.uniform_int(-10, 10), rng.uniform_int(1, 10));
    RatVector rhs = mat_vec(m, x);
    RatVector got = solve_linear(m, rhs);
    CHECK(got == x);
    CHECK(mat_vec(m, got) == rhs);
  }
}

TEST_CASE("solve_linear rejects singular systems") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(2);
  m.at(1, 0) = Rat(2);
  m.at(1, 1) = Rat(4);
  RatVector rhs{Rat(1), Rat(1)};
  CHECK_THROWS_AS(solve_linear(m, rhs), SingularSystemError);
}

TEST_CASE("det_affine_in_t endpoints and interpolation") {
  Rng rng(31);
  RatMatrix m0 = random_matrix(rng, 5, -4, 4);
  RatMatrix m1 = m0;
  for (std::size_t i = 0; i < 5; ++i) m1.at(i, 2) = Rat(rng.uniform_int(-4, 4));

  auto [e0, e1] = det_affine_in_t(m0, m1);
  CHECK(e0 == det(m0));
  CHECK(e1 == det(m1));

  // Direct determinant of the column-interpolated matrix at several t.
  for (Rat t : {Rat(0), Rat(1, 4), Rat(1, 3), Rat(1, 2), Rat(1)}) {
    RatMatrix mt = m0;
    for (std::size_t i = 0; i < 5; ++i)
      mt.at(i, 2) = (Rat(1) - t) * m0.at(i, 2) + t * m1.at(i, 2);
    CHECK(det(mt) == eval_affine(e0, e1, t));
  }
}

TEST_CASE("det_affine_in_t with identical matrices is constant") {
  Rng rng(8);
  RatMatrix m = random_matrix(rng, 4, -3, 3);
  auto [e0, e1] = det_affine_in_t(m, m);
  CHECK(e0 == e1);
  CHECK(eval_affine(e0, e1, Rat(1, 3)) == e0);
}

TEST_CASE("det_affine_in_t rejects two differing columns") {
  RatMatrix m0 = RatMatrix::identity(3);
  RatMatrix m1 = m0;
  m1.at(0, 0) = Rat(2);
  m1.at(0, 1) = Rat(2);
  CHECK_THROWS_AS(det_affine_in_t(m0, m1), ContractError);
}

TEST_CASE("eval_affine midpoint example") {
  CHECK(eval_affine(Rat(2), Rat(-3), Rat(1, 2)) == Rat(-1, 2));
}

TEST_CASE("matrix utilities") {
  RatMatrix m(2, 3);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(2);
  m.at(0, 2) = Rat(3);
  m.at(1, 0) = Rat(4);
  m.at(1, 1) = Rat(5);
  m.at(1, 2) = Rat(6);
  RatVector x{Rat(1), Rat(0), Rat(-1)};
  RatVector y = mat_vec(m, x);
  CHECK(y == RatVector{Rat(-2), Rat(-2)});

  m.set_column(1, RatVector{Rat(7), Rat(8)});
  CHECK(m.column(1) == RatVector{Rat(7), Rat(8)});
}
