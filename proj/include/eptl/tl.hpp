#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eptl/scalar.hpp"

namespace eptl {

// Non-crossing perfect pairing of 2n boundary points of a rectangle.
// Circular reading order: bottom strands 1..n left to right (indices 0..n-1),
// then top strands n..1 (index n+j is top strand n-j).
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  explicit PlanarDiagram(int n, std::vector<int> partner);

  static PlanarDiagram identity(int n);
  static PlanarDiagram e(int n, int j);  // the TL generator e_j, 1 <= j <= n-1

  int strands() const { return n_; }
  int partner(int i) const { return partner_[size_t(i)]; }
  int bottom_index(int strand) const { return strand - 1; }
  int top_index(int strand) const { return 2 * n_ - strand; }

  bool operator==(const PlanarDiagram& o) const { return n_ == o.n_ && partner_ == o.partner_; }
  bool operator<(const PlanarDiagram& o) const;

  std::string str() const;

  // Stack o on top of *this; returns the composite diagram and the number of
  // closed loops formed at the interface.
  std::pair<PlanarDiagram, int> stack(const PlanarDiagram& o) const;

  // Draw o to the right of *this.
  PlanarDiagram tensor(const PlanarDiagram& o) const;

 private:
  int n_ = 0;
  std::vector<int> partner_;
};

// Finite linear combination of planar diagrams with Scalar coefficients.
class TLElement {
 public:
  TLElement() = default;
  explicit TLElement(int n) : n_(n) {}
  static TLElement identity(int n);
  static TLElement generator(int n, int j);
  static TLElement single(const PlanarDiagram& d, const Scalar& c = Scalar(1));

  int strands() const { return n_; }
  const std::map<PlanarDiagram, Scalar>& support() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(const PlanarDiagram& d) const;

  TLElement operator+(const TLElement& o) const;
  TLElement operator-(const TLElement& o) const;
  TLElement scale(const Scalar& c) const;
  bool operator==(const TLElement& o) const;

  // Algebra product: o stacked on top of *this, loops weighted by beta.
  TLElement compose(const TLElement& o) const;
  TLElement tensor(const TLElement& o) const;

  void add_term(const PlanarDiagram& d, const Scalar& c);

  std::string str() const;

 private:
  int n_ = 0;
  std::map<PlanarDiagram, Scalar> coeffs_;
};

// All non-crossing perfect matchings of 2n points (the diagram basis of TL_n).
std::vector<PlanarDiagram> tl_basis(int n);

// Jones-Wenzl projector P_n as an element of TL_n.  Computed by the defining
// recursion P_{m+1} = P_m + [m]/[m+1] P_m e_m P_m up to n = 8 and, above
// that, by the left-factor recursion, which gives the same element at a cost
// linear in the support size.
const TLElement& jones_wenzl(int n);

// Independent constructions used as cross-checks.
TLElement jones_wenzl_rec1(int n);  // (id_1 x P_{n-1}) (id + sum [n-j]/[n] e_1..e_j)
TLElement jones_wenzl_rec2(int n);  // (P_{n-1} x id_1) (id + sum [j]/[n] e_{n-1}..e_j)

}  // namespace eptl
