#pragma once

#include "eptl/certificate.hpp"
#include "eptl/linalg.hpp"
#include "eptl/modules.hpp"

namespace eptl {

// Braid transfer matrices: F (bar = false) and F-bar (bar = true), built from
// the 2^N braid-tile expansion.  Entries lie in Q(s) times twist monomials.
std::vector<MVec> braid_transfer(const Module& m, const ExactWeights& wt, bool bar);

// Sparse column-matrix helpers.
MVec mat_apply(const std::vector<MVec>& cols, const MVec& v);
std::vector<MVec> mat_mul(const std::vector<MVec>& a, const std::vector<MVec>& b);
bool mat_equal(const std::vector<MVec>& a, const std::vector<MVec>& b);
std::vector<MVec> mat_scale_identity(int dim, const Scalar& c);
std::vector<MVec> mat_add(const std::vector<MVec>& a, const std::vector<MVec>& b);
std::vector<MVec> mat_sub(const std::vector<MVec>& a, const std::vector<MVec>& b);

// Eigenvalue of F on W_{k-l, z} inside X_{k,l}: f_0 = q^{k-l} z + q^{l-k} / z.
Scalar f0_scalar(int k2_minus_l2);
// Monic annihilating factor grouped over a full rotation level:
//   prod_{n=0}^{2m-1} (t - f_{m,n}),  omega_n = z^{(k-l)/m} e^{i pi n / m}.
// Coefficients lie in Q(s, z); index i is the coefficient of t^i.
std::vector<Scalar> grouped_level_poly(int m, int k2_minus_l2);

// Numeric value of f_{m,n} at a specialization.
std::complex<double> f_mn_value(int m, int n, int k2_minus_l2, const Specialization& sp);
std::complex<double> f0_value(int k2_minus_l2, const Specialization& sp);

// Apply a polynomial (coefficients c[i] of t^i) in the matrix F to a vector.
MVec poly_in_matrix_apply(const std::vector<MVec>& F, const std::vector<Scalar>& coeffs,
                          const MVec& v);

// Numeric rotation eigenprojector on a standard module W_{k,z}(N).
struct OmegaProjector {
  CxMat mat;
  std::complex<double> omega;
};
OmegaProjector omega_projector(const Module& m, const Specialization& sp, int n);
CxMat numeric_matrix(const Module& m, const Specialization& sp, const GenWord& word);
CxMat numeric_matrix_from_braid(const Module& m, const Specialization& sp, bool bar);

// Verification suites.
Certificate central_identity_suite(const ModuleTag& tag);
Certificate jw_suite(int n);
// Grouped annihilator: with the full level set (and the f_0 factor) the
// product vanishes on X_{k,l}(N); reported per level.
Certificate grouped_annihilator_certificate(int N, int k2, int l2);

}  // namespace eptl
