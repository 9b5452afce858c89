#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include "rtz/spectral.hpp"

using namespace rtz;

namespace {

DenseMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  DenseMatrix A(n);
  for (std::size_t i = 0; i < n; ++i) {
    A.at(i, i) = Complex(rng::normal_draw(seed, 4, i * n + i + 1, 0), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v(rng::normal_draw(seed, 4, i * n + j + 1, 0),
                      rng::normal_draw(seed, 4, i * n + j + 1, 1));
      A.at(i, j) = v;
      A.at(j, i) = std::conj(v);
    }
  }
  return A;
}

}  // namespace

TEST_CASE("eigensolver closed forms") {
  DenseMatrix diag(3);
  diag.at(0, 0) = Complex(3.0);
  diag.at(1, 1) = Complex(1.0);
  diag.at(2, 2) = Complex(2.0);
  auto d = hermitian_eigenvalues(diag);
  CHECK(std::abs(d[0] - 1.0) < 1e-13);
  CHECK(std::abs(d[1] - 2.0) < 1e-13);
  CHECK(std::abs(d[2] - 3.0) < 1e-13);

  DenseMatrix two(2);
  two.at(0, 0) = two.at(1, 1) = Complex(2.0);
  two.at(0, 1) = two.at(1, 0) = Complex(1.0);
  auto e = hermitian_eigenvalues(two);
  CHECK(std::abs(e[0] - 1.0) < 1e-12);
  CHECK(std::abs(e[1] - 3.0) < 1e-12);

  // complex pivot path: [[2, i], [-i, 2]] has eigenvalues 1 and 3
  DenseMatrix cx(2);
  cx.at(0, 0) = cx.at(1, 1) = Complex(2.0);
  cx.at(0, 1) = Complex(0.0, 1.0);
  cx.at(1, 0) = Complex(0.0, -1.0);
  auto ce = hermitian_eigenvalues(cx);
  CHECK(std::abs(ce[0] - 1.0) < 1e-12);
  CHECK(std::abs(ce[1] - 3.0) < 1e-12);

  DenseMatrix one(1);
  one.at(0, 0) = Complex(-4.5);
  CHECK(hermitian_eigenvalues(one)[0] == -4.5);
}

TEST_CASE("eigensolver agrees with the circulant diagonalization") {
  ToeplitzSystem T(
      CoefficientSequence({Complex(2.0), Complex(1.0), Complex(1.0)}), 3);
  auto dense_eigs = hermitian_eigenvalues(T.dense());
  CirculantOperator C(ComplexVector{Complex(2.0), Complex(1.0), Complex(1.0)});
  auto circ_eigs = C.eigenvalues_sorted();
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(dense_eigs[i] - circ_eigs[i]) < 1e-10);
  }
}

TEST_CASE("eigensolver random properties: 2x2 closed form and trace") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    DenseMatrix A = random_hermitian(2, s);
    const double a = A.at(0, 0).real(), c = A.at(1, 1).real();
    const double off = std::abs(A.at(0, 1));
    const double mid = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), off);
    auto e = hermitian_eigenvalues(A);
    CHECK(std::abs(e[0] - (mid - rad)) < 1e-12);
    CHECK(std::abs(e[1] - (mid + rad)) < 1e-12);
  }
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const std::size_t n = 5 + s % 4;
    DenseMatrix A = random_hermitian(n, 50 + s);
    auto e = hermitian_eigenvalues(A);
    double esum = 0.0, tsum = 0.0;
    for (double v : e) esum += v;
    for (std::size_t i = 0; i < n; ++i) tsum += A.at(i, i).real();
    CHECK(std::abs(esum - tsum) <= 1e-10 * n * std::max(1.0, A.max_abs()));
  }
}

TEST_CASE("eigensolver rejects non-Hermitian input") {
  DenseMatrix bad(2);
  bad.at(0, 1) = Complex(1.0);  // lower triangle stays 0
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), NotHermitianError);

  DenseMatrix bad2(2);
  bad2.at(0, 0) = bad2.at(1, 1) = Complex(1.0);
  bad2.at(0, 1) = bad2.at(1, 0) = Complex(0.0, 1.0);  // conj mismatch
  CHECK_THROWS_AS(hermitian_eigenvalues(bad2), NotHermitianError);

  DenseMatrix imag_diag(1);
  imag_diag.at(0, 0) = Complex(1.0, 1.0);
  CHECK_THROWS_AS(hermitian_eigenvalues(imag_diag), NotHermitianError);

  CHECK_THROWS_AS(hermitian_eigenvalues(DenseMatrix(0)), InvalidInputError);
}

TEST_CASE("clustering count") {
  CHECK(clustering_count({1.0, 1.0, 1.0}, 1.0, 0.5) == 0);
  CHECK(clustering_count({0.5, 1.0, 1.0, 2.0}, 1.0, 0.1) == 2);
  CHECK(clustering_count({}, 0.0, 1.0) == 0);
  CHECK_THROWS_AS(clustering_count({1.0}, 1.0, 0.0), InvalidInputError);
}

TEST_CASE("preconditioned spectrum: perfect and identity preconditioners") {
  CoefficientSequence c({Complex(2.0), Complex(1.0), Complex(1.0)});
  ToeplitzSystem T(c, 3);
  CirculantOperator S = strang_preconditioner(c, 3);  // S = T exactly
  SpectralReport rep = preconditioned_spectrum(T, S);
  for (double v : rep.eigenvalues) CHECK(std::abs(v - 1.0) < 1e-10);
  CHECK(rep.cluster_outliers == 0);
  CHECK(std::abs(rep.geometric_mean - 1.0) < 1e-10);

  ComplexVector e0(3, Complex(0.0));
  e0[0] = Complex(1.0);
  CirculantOperator I3(e0);
  SpectralReport plain = preconditioned_spectrum(T, I3);
  auto direct = hermitian_eigenvalues(T.dense());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(plain.eigenvalues[i] - direct[i]) < 1e-10);
  }

  CirculantOperator wrong(ComplexVector{Complex(1.0), Complex(0.0)});
  CHECK_THROWS_AS(preconditioned_spectrum(T, wrong), InvalidInputError);
}

TEST_CASE("preconditioned spectrum clusters for the model") {
  SymbolModel model;
  model.zero_phases = true;
  model.bandwidth = 64;
  CoefficientSequence c = model.realize(1);
  ToeplitzSystem T(c, 65);
  CirculantOperator S = strang_preconditioner(c, 65);
  SpectralReport rep = preconditioned_spectrum(T, S, 0.05);
  CHECK(rep.eigenvalues.size() == 65);
  CHECK(rep.eigenvalues.front() > 0.0);
  // most of the spectrum sits within 5% of 1
  CHECK(rep.cluster_outliers < 20);
  CHECK(rep.cluster_outliers ==
        clustering_count(rep.eigenvalues, 1.0, rep.epsilon));
}

TEST_CASE("equidistribution discrepancies") {
  CoefficientSequence constant5 = CoefficientSequence({Complex(5.0)});
  ToeplitzSystem T5(constant5.extended(7), 8);
  CHECK(equidistribution_discrepancy(T5, constant5, TestFunction::monomial(2)) ==
        0.0);
  CHECK(equidistribution_discrepancy(T5, constant5, TestFunction::monomial(0)) ==
        0.0);
  CHECK(equidistribution_discrepancy(T5, constant5,
                                     TestFunction::log_shift(0.1)) == 0.0);

  SymbolModel model;
  model.seed = 20240101;
  model.bandwidth = 32;
  CoefficientSequence c = model.realize(2);
  ToeplitzSystem T(c, 33);
  CHECK(equidistribution_discrepancy(T, c, TestFunction::monomial(0)) == 0.0);

  // f = 2 + 2cos(theta): trace identity fixes the eigenvalue sum at 2N
  CoefficientSequence cosine({Complex(2.0), Complex(1.0)});
  const std::size_t n = 16;
  ToeplitzSystem Tc(cosine.extended(n - 1), n);
  double grid_sum = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    grid_sum += cosine.evaluate(-kPi + 2.0 * kPi * j / (n + 1));
  }
  const double want = std::abs(2.0 * n - grid_sum) / n;
  const double got =
      equidistribution_discrepancy(Tc, cosine, TestFunction::monomial(1));
  CHECK(std::abs(got - want) < 1e-10);
}

TEST_CASE("equidistribution decays along the zero-phase ladder") {
  SymbolModel model;
  model.zero_phases = true;
  auto discrepancy_at = [&](std::size_t n) {
    model.bandwidth = n - 1;
    CoefficientSequence c = model.realize(1);
    ToeplitzSystem T(c, n);
    return equidistribution_discrepancy(T, c, TestFunction::monomial(2));
  };
  CHECK(discrepancy_at(257) < discrepancy_at(33));
}

TEST_CASE("log test function domain enforcement") {
  CoefficientSequence constant5 = CoefficientSequence({Complex(5.0)});
  ToeplitzSystem T5(constant5.extended(7), 8);
  CHECK_THROWS_AS(equidistribution_discrepancy(T5, constant5,
                                               TestFunction::log_shift(0.25)),
                  InvalidInputError);
  CHECK_THROWS_AS(TestFunction::monomial(9), InvalidInputError);
  CHECK(TestFunction::monomial(2).name() == "t^2");
}

TEST_CASE("szego geometric mean vs symbol log mean") {
  // constant symbol: both sides are exactly the constant
  CoefficientSequence constant5 = CoefficientSequence({Complex(5.0)});
  ToeplitzSystem T5(constant5.extended(7), 8);
  CHECK(std::abs(szego_geometric_mean(T5) - 5.0) < 1e-10);
  CHECK(std::abs(symbol_log_mean(constant5) - 5.0) < 1e-12);

  // f = 2 + 2cos(theta): det T_N = N + 1, so gm = (N+1)^{1/N}; lhs of the
  // Szego limit, while the symbol side is exp(0) = 1
  CoefficientSequence cosine({Complex(2.0), Complex(1.0)});
  for (std::size_t n : {16u, 64u}) {
    ToeplitzSystem T(cosine.extended(n - 1), n);
    const double want = std::pow(n + 1.0, 1.0 / n);
    CHECK(std::abs(szego_geometric_mean(T) - want) < 1e-8);
  }
  CHECK(std::abs(symbol_log_mean(cosine) - 1.0) < 0.01);

  ToeplitzSystem indef(
      CoefficientSequence({Complex(0.0), Complex(1.0)}).extended(1), 2);
  CHECK_THROWS_AS(szego_geometric_mean(indef), DomainError);

  CHECK_THROWS_AS(symbol_log_mean(CoefficientSequence({Complex(-1.0)})),
                  DomainError);
  CHECK_THROWS_AS(
      symbol_log_mean(CoefficientSequence({Complex(1.0), Complex(10.0)})),
      DomainError);
}

TEST_CASE("weyl inequalities") {
  DenseMatrix I2(2);
  I2.at(0, 0) = I2.at(1, 1) = Complex(1.0);
  CHECK(check_weyl(I2, I2));

  DenseMatrix Z2(2);
  CHECK(check_weyl(I2, Z2));

  for (std::uint64_t s = 1; s <= 100; ++s) {
    CHECK(check_weyl(random_hermitian(6, 2 * s), random_hermitian(6, 2 * s + 1)));
  }

  CHECK_THROWS_AS(check_weyl(I2, DenseMatrix(3)), InvalidInputError);
}

TEST_CASE("cauchy interlacing") {
  DenseMatrix diag(3);
  diag.at(0, 0) = Complex(1.0);
  diag.at(1, 1) = Complex(2.0);
  diag.at(2, 2) = Complex(3.0);
  CHECK(check_interlacing(diag, 1));

  DenseMatrix two(2);
  two.at(0, 0) = two.at(1, 1) = Complex(2.0);
  two.at(0, 1) = two.at(1, 0) = Complex(1.0);
  CHECK(check_interlacing(two, 1));

  for (std::uint64_t s = 1; s <= 100; ++s) {
    DenseMatrix A = random_hermitian(7, 300 + s);
    CHECK(check_interlacing(A, s % 7));
  }

  CHECK_THROWS_AS(check_interlacing(two, 2), InvalidInputError);
  CHECK_THROWS_AS(check_interlacing(DenseMatrix(1), 0), InvalidInputError);
}

TEST_CASE("spectral report csv shape") {
  CoefficientSequence c({Complex(2.0), Complex(1.0), Complex(1.0)});
  ToeplitzSystem T(c, 3);
  SpectralReport rep = preconditioned_spectrum(T, strang_preconditioner(c, 3));
  rep.discrepancies["t^2"] = 0.125;
  const std::string path = "spectral_test.csv";
  rep.write_csv(path);

  std::ifstream in(path, std::ios::binary);
  std::string line;
  std::getline(in, line);
  CHECK(line == "index,eigenvalue");
  std::size_t rows = 0;
  bool summary_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') {
      summary_seen = true;
      CHECK(line.find("outliers=0") != std::string::npos);
      CHECK(line.find("t^2=0.125") != std::string::npos);
    } else {
      ++rows;
    }
  }
  CHECK(rows == 3);
  CHECK(summary_seen);
  std::remove(path.c_str());
}
