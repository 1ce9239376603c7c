#include "eptl/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace eptl {

int rank_rat(RatMat m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    for (size_t r = pr + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[pr][c];
      for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[pr][cc];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

int rank_scalar(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[pr], m[piv]);
    for (size_t r = pr + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      Scalar f = m[r][c] / m[pr][c];
      for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[pr][cc];
    }
    ++pr;
    ++rank;
  }
  return rank;
}

RatMat columns_to_rat(const std::vector<MVec>& cols, int dim,
                      const std::array<Rat, kNumVars>& at) {
  RatMat m(size_t(dim), std::vector<Rat>(cols.size(), Rat(0)));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, c] : cols[j]) m[size_t(i)][j] = c.eval(at);
  }
  return m;
}

CxMat columns_to_cx(const std::vector<MVec>& cols, int dim,
                    const std::array<std::complex<double>, kNumVars>& at) {
  CxMat m(size_t(dim), std::vector<std::complex<double>>(cols.size(), 0.0));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [i, c] : cols[j]) m[size_t(i)][j] = c.eval_cx(at);
  }
  return m;
}

namespace {

Eigen::MatrixXcd to_eigen(const CxMat& m) {
  Eigen::MatrixXcd e(m.size(), m.empty() ? 0 : m[0].size());
  for (size_t r = 0; r < m.size(); ++r) {
    for (size_t c = 0; c < m[r].size(); ++c) e(long(r), long(c)) = m[r][c];
  }
  return e;
}

}  // namespace

std::vector<std::complex<double>> eigenvalues(const CxMat& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
  std::vector<std::complex<double>> out;
  for (long i = 0; i < solver.eigenvalues().size(); ++i) {
    out.push_back(solver.eigenvalues()(i));
  }
  return out;
}

bool multiset_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                    double tol) {
  if (a.size() != b.size()) return false;
  double scale = 1.0;
  for (auto v : a) scale = std::max(scale, std::abs(v));
  std::vector<char> used(b.size(), 0);
  for (auto va : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(va - b[j]) <= tol * scale) {
        used[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool diagonalizable(const CxMat& m, double tol) {
  Eigen::MatrixXcd e = to_eigen(m);
  long n = e.rows();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(e, false);
  auto ev = solver.eigenvalues();
  double scale = 1.0;
  for (long i = 0; i < n; ++i) scale = std::max(scale, std::abs(ev(i)));
  std::vector<char> done(size_t(n), 0);
  for (long i = 0; i < n; ++i) {
    if (done[size_t(i)]) continue;
    int alg = 0;
    for (long j = 0; j < n; ++j) {
      if (std::abs(ev(j) - ev(i)) <= tol * scale) {
        ++alg;
        done[size_t(j)] = 1;
      }
    }
    Eigen::MatrixXcd shifted = e - ev(i) * Eigen::MatrixXcd::Identity(n, n);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(shifted);
    cod.setThreshold(tol * std::max(scale, 1.0));
    int geo = int(n - cod.rank());
    if (geo != alg) return false;
  }
  return true;
}

}  // namespace eptl
