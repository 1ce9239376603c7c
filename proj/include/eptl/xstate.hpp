#pragma once

#include <string>
#include <vector>

#include "eptl/wpattern.hpp"

namespace eptl {

// Canonical basis state of X_{k,l,x,y,z}(N), stored in bridge form: the
// underlying one-point pattern together with the rotation offset of the
// formation [a-defects | through-left | b-defects | through-right] around the
// collapsed bridge.  Defect numbers are stored doubled (k2 = 2k, l2 = 2l) so
// half-integers stay integral.
struct XState {
  int N = 0;
  int k2 = 0, l2 = 0;
  WPattern pattern;
  int offset = 0;

  int spoke_count() const { return pattern.defect_count(); }
  // Depth p: number of through-arcs.
  int depth() const {
    int nd = spoke_count();
    return nd > k2 + l2 ? (nd - k2 - l2) / 2 : 0;
  }
  // Total defect pair count 2r for depth-0 states (equals spoke count).
  int defect_total() const { return depth() > 0 ? k2 + l2 : spoke_count(); }
  int count_a() const {
    return depth() > 0 ? k2 : (spoke_count() + k2 - l2) / 2;
  }
  int count_b() const { return spoke_count() - count_a() - 2 * depth(); }

  // Formation block layout in linear spoke indices (after the offset).
  // spoke t of the formation is pattern-defect d[(offset + t) mod nd].
  std::vector<int> targets() const;  // per node: -2 = a-defect, -3 = b-defect, else arc partner
  // Through-arc pairing: list of (node_u, node_v).
  std::vector<std::pair<int, int>> through_arcs() const;

  bool operator==(const XState& o) const {
    return N == o.N && k2 == o.k2 && l2 == o.l2 && pattern == o.pattern && offset == o.offset;
  }
  bool operator<(const XState& o) const;

  std::string str() const;
};

// Canonical enumeration of the basis of X_{k,l}(N), ordered by (depth,
// defect count, pattern, offset).  Depth-0 states come first.
std::vector<XState> enumerate_x_basis(int N, int k2, int l2);

// Group sizes by (p, r) for the filtration ledger: entries (p, r2, count).
struct XGroup {
  int p;
  int r2;
  int count;
};
std::vector<XGroup> x_group_sizes(int N, int k2, int l2);

bool x_params_valid(int N, int k2, int l2);

}  // namespace eptl
