#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "rtz/spectral.hpp"
#include "rtz/toeplitz.hpp"

using namespace rtz;

namespace {

ComplexVector random_vector(std::size_t n, std::uint64_t seed) {
  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Complex(rng::normal_draw(seed, 1, i + 1, 0),
                   rng::normal_draw(seed, 1, i + 1, 1));
  }
  return x;
}

ComplexVector dense_matvec(const DenseMatrix& A, const ComplexVector& x) {
  ComplexVector y(A.n, Complex(0.0));
  for (std::size_t i = 0; i < A.n; ++i) {
    for (std::size_t j = 0; j < A.n; ++j) y[i] += A.at(i, j) * x[j];
  }
  return y;
}

double rel_err(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return norm2(d) / std::max(norm2(b), 1e-300);
}

}  // namespace

TEST_CASE("identity and small closed-form systems materialize correctly") {
  ToeplitzSystem id(CoefficientSequence({Complex(1.0)}).extended(3), 4);
  DenseMatrix I = id.dense();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(I.at(i, j) == Complex(i == j ? 1.0 : 0.0));
    }
  }

  ToeplitzSystem circ(
      CoefficientSequence({Complex(2.0), Complex(1.0), Complex(1.0)}), 3);
  DenseMatrix C = circ.dense();
  const double want_c[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(C.at(i, j) == Complex(want_c[i][j]));
    }
  }

  ToeplitzSystem tri(
      CoefficientSequence({Complex(2.0), Complex(1.0), Complex(0.0)}), 3);
  DenseMatrix T = tri.dense();
  const double want_t[3][3] = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(T.at(i, j) == Complex(want_t[i][j]));
    }
  }

  ToeplitzSystem single(CoefficientSequence({Complex(7.0)}), 1);
  CHECK(single.dense().at(0, 0) == Complex(7.0));
}

TEST_CASE("model systems are Hermitian with constant diagonal 2") {
  SymbolModel model;
  model.seed = 20240101;
  model.bandwidth = 64;
  ToeplitzSystem T(model.realize(1), 65);
  DenseMatrix A = T.dense();
  for (std::size_t i = 0; i < 65; ++i) {
    CHECK(A.at(i, i) == Complex(2.0, 0.0));
    for (std::size_t j = 0; j < 65; ++j) {
      CHECK(A.at(i, j) == std::conj(A.at(j, i)));
    }
  }
}

TEST_CASE("matvec: identity and shift actions") {
  ToeplitzSystem id(CoefficientSequence({Complex(1.0)}).extended(2), 3);
  ComplexVector x{Complex(1.0, 2.0), Complex(-3.0), Complex(0.5, 0.5)};
  CHECK(rel_err(id.matvec(x), x) < 1e-14);

  ToeplitzSystem shift(
      CoefficientSequence({Complex(0.0), Complex(1.0)}).extended(2), 3);
  ComplexVector e0{Complex(1.0), Complex(0.0), Complex(0.0)};
  ComplexVector y = shift.matvec(e0);
  CHECK(std::abs(y[0]) < 1e-14);
  CHECK(std::abs(y[1] - Complex(1.0)) < 1e-14);
  CHECK(std::abs(y[2]) < 1e-14);
}

TEST_CASE("fast matvec agrees with the dense product") {
  SymbolModel model;
  model.seed = 31;
  for (std::size_t trial = 1; trial <= 20; ++trial) {
    const std::size_t n = 3 + (trial * 37) % 126;  // spread over [3, 128]
    model.bandwidth = n - 1 ? n - 1 : 1;
    ToeplitzSystem T(model.realize(trial), n);
    ComplexVector x = random_vector(n, 1000 + trial);
    CHECK(rel_err(T.matvec(x), dense_matvec(T.dense(), x)) < 1e-12);
  }
}

TEST_CASE("input validation") {
  CoefficientSequence c({Complex(1.0)});
  CHECK_THROWS_AS(ToeplitzSystem(c, 4), InvalidInputError);  // band too short
  CHECK_THROWS_AS(ToeplitzSystem(c, 0), InvalidInputError);

  ToeplitzSystem T(c.extended(4), 5);
  CHECK_THROWS_AS(T.matvec(ComplexVector(3, Complex(1.0))), InvalidInputError);
  CHECK_THROWS_AS(T.dense(4), ResourceLimitError);
  CHECK_THROWS_AS(T.is_positive_definite(4), ResourceLimitError);
}

TEST_CASE("positive definiteness detection") {
  ToeplitzSystem id(CoefficientSequence({Complex(1.0)}).extended(3), 4);
  auto pd = id.is_positive_definite();
  CHECK(pd.positive_definite);
  CHECK(std::abs(pd.lambda_min - 1.0) < 1e-12);

  // tridiagonal 2/1: lambda_min = 2 + 2cos(3*pi/4) = 2 - sqrt(2)
  ToeplitzSystem tri(
      CoefficientSequence({Complex(2.0), Complex(1.0)}).extended(2), 3);
  auto tri_pd = tri.is_positive_definite();
  CHECK(tri_pd.positive_definite);
  CHECK(std::abs(tri_pd.lambda_min - (2.0 - std::sqrt(2.0))) < 1e-10);

  ToeplitzSystem ind(
      CoefficientSequence({Complex(0.0), Complex(1.0)}).extended(1), 2);
  auto ind_pd = ind.is_positive_definite();
  CHECK(!ind_pd.positive_definite);
  CHECK(std::abs(ind_pd.lambda_min + 1.0) < 1e-12);
}

TEST_CASE("eigenvalues live inside the symbol range") {
  SymbolModel model;
  model.seed = 8;
  model.bandwidth = 63;
  CoefficientSequence c = model.realize(5);
  ToeplitzSystem T(c, 64);

  // grid min/max of f plus a Bernstein-style margin for between-grid extrema
  const std::size_t grid = 8192;
  double lo = 1e300, hi = -1e300, amax = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double v = c.evaluate(-kPi + 2.0 * kPi * i / grid);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    amax = std::max(amax, std::abs(v));
  }
  const double h = 2.0 * kPi / grid;
  const double delta = 0.5 * h * 63 * amax * 1.01 + 1e-10;

  const std::vector<double> eigs = hermitian_eigenvalues(T.dense());
  CHECK(eigs.front() >= lo - delta);
  CHECK(eigs.back() <= hi + delta);
}
