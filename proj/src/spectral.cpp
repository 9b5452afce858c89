#include "rtz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace rtz {

namespace {

// Verify Hermitian symmetry to entrywise relative tolerance and return the
// averaged (exactly Hermitian) working copy.
DenseMatrix hermitian_checked_copy(const DenseMatrix& A) {
  const std::size_t n = A.n;
  if (n == 0) throw InvalidInputError("hermitian_eigenvalues: empty matrix");
  const double scale = std::max(1.0, A.max_abs());
  DenseMatrix H(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(A.at(i, i).imag()) > 1e-12 * scale) {
      throw NotHermitianError("hermitian_eigenvalues: complex diagonal entry");
    }
    H.at(i, i) = Complex(A.at(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(A.at(i, j) - std::conj(A.at(j, i))) > 1e-12 * scale) {
        throw NotHermitianError(
            "hermitian_eigenvalues: matrix is not Hermitian");
      }
      const Complex v = 0.5 * (A.at(i, j) + std::conj(A.at(j, i)));
      H.at(i, j) = v;
      H.at(j, i) = std::conj(v);
    }
  }
  return H;
}

double offdiag_frobenius(const DenseMatrix& A) {
  double s = 0.0;
  for (std::size_t i = 0; i < A.n; ++i) {
    for (std::size_t j = i + 1; j < A.n; ++j) s += std::norm(A.at(i, j));
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const DenseMatrix& A_in) {
  DenseMatrix A = hermitian_checked_copy(A_in);
  const std::size_t n = A.n;
  if (n > kDenseCap) {
    throw ResourceLimitError("hermitian_eigenvalues: dimension exceeds cap");
  }
  const double stop = 1e-12 * std::max(A.frobenius_norm(), 1e-300);

  // Cyclic Jacobi: phase-rotate the pivot to a real symmetric 2x2, then the
  // classical rotation. U = diag(e^{i phi}, 1) * [[c, s], [-s, c]].
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_frobenius(A) < stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = A.at(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;  // e^{i phi}
        const double alpha = A.at(p, p).real();
        const double beta = A.at(q, q).real();
        const double tau = (beta - alpha) / (2.0 * g);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        const Complex upp = c * phase, upq = s * phase;
        // columns: [col_p col_q] <- [col_p col_q] * U
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = A.at(i, p), aiq = A.at(i, q);
          A.at(i, p) = aip * upp - aiq * s;
          A.at(i, q) = aip * upq + aiq * c;
        }
        // rows: [row_p; row_q] <- U^H * [row_p; row_q]
        const Complex cphase = std::conj(phase);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex api = A.at(p, i), aqi = A.at(q, i);
          A.at(p, i) = c * cphase * api - s * aqi;
          A.at(q, i) = s * cphase * api + c * aqi;
        }
        A.at(p, q) = A.at(q, p) = Complex(0.0);
        A.at(p, p) = Complex(A.at(p, p).real(), 0.0);
        A.at(q, q) = Complex(A.at(q, q).real(), 0.0);
      }
    }
  }
  if (offdiag_frobenius(A) >= stop) {
    throw Error("hermitian_eigenvalues: Jacobi iteration failed to converge");
  }

  std::vector<double> eigs(n);
  for (std::size_t i = 0; i < n; ++i) eigs[i] = A.at(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

void SpectralReport::write_csv(const std::string& path) const {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw InvalidInputError("write_csv: cannot open " + path);
  std::fputs("index,eigenvalue\n", f);
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    std::fprintf(f, "%zu,%.17g\n", i + 1, eigenvalues[i]);
  }
  std::fprintf(f, "# outliers=%zu epsilon=%.17g geometric_mean=%.17g",
               cluster_outliers, epsilon, geometric_mean);
  for (const auto& [name, value] : discrepancies) {
    std::fprintf(f, " %s=%.17g", name.c_str(), value);
  }
  std::fputc('\n', f);
  std::fclose(f);
}

SpectralReport preconditioned_spectrum(const ToeplitzSystem& T,
                                       const CirculantOperator& S,
                                       double epsilon) {
  const std::size_t n = T.dim();
  if (S.dim() != n) {
    throw InvalidInputError("preconditioned_spectrum: size mismatch");
  }
  // S^{-1/2} T S^{-1/2}: transform the columns of dense T, then the rows
  // (row_i <- conj(S^{-1/2} conj(row_i)), valid since S^{-1/2} is Hermitian).
  DenseMatrix B = T.dense();
  ComplexVector buf(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) buf[i] = B.at(i, j);
    buf = S.inverse_sqrt_apply(buf);
    for (std::size_t i = 0; i < n; ++i) B.at(i, j) = buf[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) buf[j] = std::conj(B.at(i, j));
    buf = S.inverse_sqrt_apply(buf);
    for (std::size_t j = 0; j < n; ++j) B.at(i, j) = std::conj(buf[j]);
  }
  // exact in infinite precision; scrub the roundoff asymmetry
  for (std::size_t i = 0; i < n; ++i) {
    B.at(i, i) = Complex(B.at(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (B.at(i, j) + std::conj(B.at(j, i)));
      B.at(i, j) = v;
      B.at(j, i) = std::conj(v);
    }
  }

  SpectralReport rep;
  rep.epsilon = epsilon;
  rep.eigenvalues = hermitian_eigenvalues(B);
  rep.cluster_outliers = clustering_count(rep.eigenvalues, 1.0, epsilon);
  bool all_positive = true;
  double log_sum = 0.0;
  for (double v : rep.eigenvalues) {
    if (v <= 0.0) {
      all_positive = false;
      break;
    }
    log_sum += std::log(v);
  }
  rep.geometric_mean = all_positive
                           ? std::exp(log_sum / static_cast<double>(n))
                           : std::nan("");
  return rep;
}

std::size_t clustering_count(const std::vector<double>& eigs, double center,
                             double epsilon) {
  if (!(epsilon > 0.0)) {
    throw InvalidInputError("clustering_count: epsilon must be positive");
  }
  std::size_t count = 0;
  for (double v : eigs) {
    if (std::abs(v - center) > epsilon) ++count;
  }
  return count;
}

TestFunction TestFunction::monomial(unsigned k) {
  if (k > 8) {
    throw InvalidInputError("TestFunction: monomial degree capped at 8");
  }
  TestFunction F;
  F.kind = Kind::kMonomial;
  F.degree = k;
  return F;
}

TestFunction TestFunction::log_shift(double x) {
  if (!std::isfinite(x)) {
    throw InvalidInputError("TestFunction: log shift must be finite");
  }
  TestFunction F;
  F.kind = Kind::kLogShift;
  F.x = x;
  return F;
}

double TestFunction::operator()(double t) const {
  if (kind == Kind::kMonomial) {
    double v = 1.0;
    for (unsigned i = 0; i < degree; ++i) v *= t;
    return v;
  }
  return std::log1p(x * t);
}

std::string TestFunction::name() const {
  char buf[64];
  if (kind == Kind::kMonomial) {
    std::snprintf(buf, sizeof buf, "t^%u", degree);
  } else {
    std::snprintf(buf, sizeof buf, "log(1+%.6gt)", x);
  }
  return buf;
}

double equidistribution_discrepancy(const ToeplitzSystem& T,
                                    const CoefficientSequence& c,
                                    const TestFunction& F) {
  const std::size_t n = T.dim();
  std::vector<double> eigs = hermitian_eigenvalues(T.dense());

  std::vector<double> grid(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const double theta =
        -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n + 1);
    grid[j - 1] = c.evaluate(theta);
  }
  std::sort(grid.begin(), grid.end());

  if (F.kind == TestFunction::Kind::kLogShift) {
    double bound = 0.0;
    for (double v : eigs) bound = std::max(bound, std::abs(v));
    for (double v : grid) bound = std::max(bound, std::abs(v));
    if (std::abs(F.x) * bound >= 1.0) {
      throw InvalidInputError(
          "equidistribution_discrepancy: log test function outside its domain");
    }
  }

  double diff = 0.0;
  for (std::size_t j = 0; j < n; ++j) diff += F(eigs[j]) - F(grid[j]);
  return std::abs(diff) / static_cast<double>(n);
}

double szego_geometric_mean(const ToeplitzSystem& T) {
  const std::vector<double> eigs = hermitian_eigenvalues(T.dense());
  double log_sum = 0.0;
  for (double v : eigs) {
    if (v <= 0.0) {
      throw DomainError("szego_geometric_mean: nonpositive eigenvalue");
    }
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(eigs.size()));
}

double symbol_log_mean(const CoefficientSequence& c) {
  constexpr std::size_t kGrid = 4096;
  double log_sum = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < kGrid; ++i) {
    const double theta =
        -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(kGrid);
    const double v = c.evaluate(theta);
    if (v < -1e-13) {
      throw DomainError("symbol_log_mean: symbol is negative on the grid");
    }
    if (v < 1e-13) continue;  // isolated zero, log-integrable
    log_sum += std::log(v);
    ++used;
  }
  if (used == 0) {
    throw DomainError("symbol_log_mean: symbol vanishes on the whole grid");
  }
  return std::exp(log_sum / static_cast<double>(used));
}

bool check_weyl(const DenseMatrix& A, const DenseMatrix& B) {
  if (A.n != B.n) throw InvalidInputError("check_weyl: dimension mismatch");
  const std::size_t n = A.n;
  DenseMatrix sum(n);
  for (std::size_t i = 0; i < n * n; ++i) sum.a[i] = A.a[i] + B.a[i];
  const std::vector<double> la = hermitian_eigenvalues(A);
  const std::vector<double> lb = hermitian_eigenvalues(B);
  const std::vector<double> ls = hermitian_eigenvalues(sum);
  constexpr double kSlack = 1e-10;
  for (std::size_t k = 0; k < n; ++k) {
    if (ls[k] < la[k] + lb.front() - kSlack) return false;
    if (ls[k] > la[k] + lb.back() + kSlack) return false;
  }
  return true;
}

bool check_interlacing(const DenseMatrix& A, std::size_t delete_index) {
  const std::size_t n = A.n;
  if (n < 2) {
    throw InvalidInputError("check_interlacing: need dimension at least 2");
  }
  if (delete_index >= n) {
    throw InvalidInputError("check_interlacing: delete index out of range");
  }
  DenseMatrix sub(n - 1);
  for (std::size_t i = 0, si = 0; i < n; ++i) {
    if (i == delete_index) continue;
    for (std::size_t j = 0, sj = 0; j < n; ++j) {
      if (j == delete_index) continue;
      sub.at(si, sj) = A.at(i, j);
      ++sj;
    }
    ++si;
  }
  const std::vector<double> parent = hermitian_eigenvalues(A);
  const std::vector<double> child = hermitian_eigenvalues(sub);
  constexpr double kSlack = 1e-10;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (child[j] < parent[j] - kSlack) return false;
    if (child[j] > parent[j + 1] + kSlack) return false;
  }
  return true;
}

}  // namespace rtz
