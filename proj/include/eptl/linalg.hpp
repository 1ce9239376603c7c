#pragma once

#include <complex>
#include <vector>

#include "eptl/modules.hpp"

namespace eptl {

using RatMat = std::vector<std::vector<Rat>>;
using CxMat = std::vector<std::vector<std::complex<double>>>;

// Gaussian elimination over exact rationals.
int rank_rat(RatMat m);
// Rank over the rational-function field.
int rank_scalar(std::vector<std::vector<Scalar>> m);

// Dense conversions of sparse word matrices (columns).
RatMat columns_to_rat(const std::vector<MVec>& cols, int dim,
                      const std::array<Rat, kNumVars>& at);
CxMat columns_to_cx(const std::vector<MVec>& cols, int dim,
                    const std::array<std::complex<double>, kNumVars>& at);

// Eigenvalues of a dense complex matrix.
std::vector<std::complex<double>> eigenvalues(const CxMat& m);

// Multiset comparison with relative tolerance; on success returns true.
bool multiset_match(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b,
                    double tol);

// True when every eigenvalue's algebraic multiplicity equals the dimension
// of its eigenspace (numeric ranks at tolerance).
bool diagonalizable(const CxMat& m, double tol);

}  // namespace eptl
