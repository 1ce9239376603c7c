#include "eptl/xstate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eptl {

std::vector<int> XState::targets() const {
  std::vector<int> t(pattern.partner.begin(), pattern.partner.end());
  auto d = pattern.defects();
  int nd = int(d.size());
  int na = count_a(), nb = count_b(), p = depth();
  for (int f = 0; f < nd; ++f) {
    int node = d[size_t((offset + f) % nd)];
    if (f < na) {
      t[size_t(node)] = -2;
    } else if (p > 0 && f < na + p) {
      // through-left; partner filled below
    } else if (f < na + p + nb) {
      t[size_t(node)] = -3;
    }
  }
  for (auto [u, v] : through_arcs()) {
    t[size_t(u)] = v;
    t[size_t(v)] = u;
  }
  return t;
}

std::vector<std::pair<int, int>> XState::through_arcs() const {
  std::vector<std::pair<int, int>> out;
  int p = depth();
  if (p == 0) return out;
  auto d = pattern.defects();
  int nd = int(d.size());
  int na = count_a(), nb = count_b();
  for (int i = 0; i < p; ++i) {
    int u = d[size_t((offset + na + i) % nd)];
    int v = d[size_t((offset + na + p + nb + (p - 1 - i)) % nd)];
    out.emplace_back(u, v);
  }
  return out;
}

bool XState::operator<(const XState& o) const {
  int pa = depth(), pb = o.depth();
  if (pa != pb) return pa < pb;
  int ra = spoke_count(), rb = o.spoke_count();
  if (ra != rb) return ra < rb;
  if (!(pattern == o.pattern)) return pattern < o.pattern;
  return offset < o.offset;
}

std::string XState::str() const {
  std::ostringstream os;
  auto t = targets();
  os << "(";
  bool first = true;
  for (int i = 0; i < N; ++i) {
    if (t[size_t(i)] == -2) {
      if (!first) os << " ";
      os << "a" << (i + 1);
      first = false;
    } else if (t[size_t(i)] == -3) {
      if (!first) os << " ";
      os << "b" << (i + 1);
      first = false;
    } else if (t[size_t(i)] > i) {
      if (!first) os << " ";
      os << "(" << (i + 1) << "," << (t[size_t(i)] + 1) << ")";
      first = false;
    }
  }
  os << "; p=" << depth() << " o=" << offset;
  if (spoke_count() == 0) os << " f=" << (pattern.face + 1);
  os << ")";
  return os.str();
}

bool x_params_valid(int N, int k2, int l2) {
  if (N < 2 || N % 2 != 0) return false;
  if (k2 < 0 || l2 < 0) return false;
  if (k2 + l2 > N) return false;
  if ((k2 + l2) % 2 != 0) return false;  // total defect number must be even
  return true;
}

std::vector<XState> enumerate_x_basis(int N, int k2, int l2) {
  if (!x_params_valid(N, k2, l2)) {
    throw std::invalid_argument("enumerate_x_basis: invalid parameters");
  }
  std::vector<XState> out;
  int dk = std::abs(k2 - l2);
  // Depth 0, grouped by total defect count 2r (spokes = r2 = 2r).
  for (int r2 = dk; r2 <= k2 + l2; r2 += 2) {
    auto pats = r2 == 0 ? enumerate_w_basis(N, 0) : enumerate_patterns(N, r2);
    int offsets = (r2 == dk) ? 1 : r2;
    for (const auto& pat : pats) {
      for (int o = 0; o < offsets; ++o) {
        XState s;
        s.N = N;
        s.k2 = k2;
        s.l2 = l2;
        s.pattern = pat;
        s.offset = o;
        out.push_back(std::move(s));
      }
    }
  }
  // Depth p >= 1: spokes = k2 + l2 + 2p.
  for (int p = 1; 2 * p + k2 + l2 <= N; ++p) {
    int nd = k2 + l2 + 2 * p;
    auto pats = enumerate_patterns(N, nd);
    for (const auto& pat : pats) {
      for (int o = 0; o < nd; ++o) {
        XState s;
        s.N = N;
        s.k2 = k2;
        s.l2 = l2;
        s.pattern = pat;
        s.offset = o;
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<XGroup> x_group_sizes(int N, int k2, int l2) {
  std::vector<XGroup> out;
  int dk = std::abs(k2 - l2);
  for (int r2 = dk; r2 <= k2 + l2; r2 += 2) {
    int pats =
        int((r2 == 0 ? enumerate_w_basis(N, 0) : enumerate_patterns(N, r2)).size());
    int offsets = (r2 == dk) ? 1 : r2;
    out.push_back({0, r2, pats * offsets});
  }
  for (int p = 1; 2 * p + k2 + l2 <= N; ++p) {
    int nd = k2 + l2 + 2 * p;
    int pats = int(enumerate_patterns(N, nd).size());
    out.push_back({p, nd, pats * nd});
  }
  return out;
}

}  // namespace eptl
