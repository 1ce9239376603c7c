#include "eptl/wpattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eptl {

std::vector<int> WPattern::defects() const {
  std::vector<int> d;
  for (int i = 0; i < N; ++i) {
    if (partner[size_t(i)] < 0) d.push_back(i);
  }
  return d;
}

int WPattern::defect_count() const {
  int c = 0;
  for (int i = 0; i < N; ++i) c += partner[size_t(i)] < 0;
  return c;
}

std::vector<int> WPattern::enclosing_arcs() const {
  // An arc {u,v} (u < v) separates the hub from c iff every defect node lies
  // strictly inside (u, v).  For defect-free patterns it separates the face
  // iff it belongs to the face's nesting chain.
  auto d = defects();
  std::vector<int> out;
  if (!d.empty()) {
    int lo = d.front(), hi = d.back();
    for (int u = 0; u < N; ++u) {
      int v = partner[size_t(u)];
      if (v <= u) continue;
      if (u < lo && hi < v) out.push_back(u);
    }
    std::sort(out.begin(), out.end());  // widest (outermost) first
    return out;
  }
  return face_chain(face);
}

std::vector<int> WPattern::face_chain(int face_arc) const {
  std::vector<int> chain;
  int cur = face_arc;
  while (cur != -1) {
    chain.push_back(cur);
    int v = partner[size_t(cur)];
    int best = -1;
    for (int u = 0; u < N; ++u) {
      int w = partner[size_t(u)];
      if (w <= u) continue;
      if (u < cur && v < w && u > best) best = u;
    }
    cur = best;
  }
  std::reverse(chain.begin(), chain.end());  // outermost first
  return chain;
}

bool WPattern::operator<(const WPattern& o) const {
  if (N != o.N) return N < o.N;
  if (partner != o.partner) return partner < o.partner;
  return face < o.face;
}

std::string WPattern::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i = 0; i < N; ++i) {
    int p = partner[size_t(i)];
    if (p < 0) {
      if (!first) os << " ";
      os << "d" << (i + 1);
      first = false;
    } else if (p > i) {
      if (!first) os << " ";
      os << "(" << (i + 1) << "," << (p + 1) << ")";
      first = false;
    }
  }
  if (defect_count() == 0) os << "; f=" << (face + 1);
  os << ")";
  return os.str();
}

namespace {

// All non-crossing matchings of the ordered node list `items`, appended onto
// each base partner assignment in `results`.
void match_linear(const std::vector<int>& items, std::vector<int>& partner,
                  std::vector<std::vector<int>>& out, size_t lo, size_t hi) {
  if (items.empty() || lo >= items.size() || lo > hi) {
    out.push_back(partner);
    return;
  }
  for (size_t j = lo + 1; j <= hi; j += 2) {
    partner[size_t(items[lo])] = items[j];
    partner[size_t(items[j])] = items[lo];
    std::vector<std::vector<int>> lefts;
    if (j == lo + 1) {
      lefts.push_back(partner);
    } else {
      match_linear(items, partner, lefts, lo + 1, j - 1);
    }
    for (auto& lp : lefts) {
      std::vector<int> work = lp;
      if (j + 1 > hi) {
        out.push_back(work);
      } else {
        match_linear(items, work, out, j + 1, hi);
      }
    }
  }
}

}  // namespace

std::vector<WPattern> enumerate_patterns(int N, int nd) {
  std::vector<WPattern> out;
  if ((N - nd) % 2 != 0 || nd < 0 || nd > N) return out;

  auto emit = [&](const std::vector<int>& positions) {
    // Every gap between cyclically consecutive defects must have even size.
    for (int t = 0; t < nd; ++t) {
      int cur = positions[size_t(t)];
      int nxt = positions[size_t((t + 1) % nd)];
      int gap = (nxt - cur - 1 + N) % N;
      if (gap % 2 != 0) return;
    }
    std::vector<std::vector<int>> results;
    {
      std::vector<int> base(size_t(N), -1);
      results.push_back(std::move(base));
    }
    auto run_gap = [&](const std::vector<int>& items) {
      if (items.empty()) return;
      std::vector<std::vector<int>> next;
      for (auto& b : results) {
        std::vector<int> work = b;
        match_linear(items, work, next, 0, items.size() - 1);
      }
      results = std::move(next);
    };
    if (nd == 0) {
      std::vector<int> items(static_cast<size_t>(N));
      for (int i = 0; i < N; ++i) items[size_t(i)] = i;
      run_gap(items);
    } else {
      for (int t = 0; t < nd; ++t) {
        int cur = positions[size_t(t)];
        int nxt = positions[size_t((t + 1) % nd)];
        std::vector<int> items;
        for (int u = (cur + 1) % N; u != nxt; u = (u + 1) % N) items.push_back(u);
        run_gap(items);
      }
    }
    for (auto& p : results) {
      WPattern w;
      w.N = N;
      w.partner = std::move(p);
      w.face = -1;
      out.push_back(std::move(w));
    }
  };

  if (nd == 0) {
    emit({});
  } else {
    std::vector<int> idx(static_cast<size_t>(nd));
    for (int i = 0; i < nd; ++i) idx[size_t(i)] = i;
    while (true) {
      emit(idx);
      int i = nd - 1;
      while (i >= 0 && idx[size_t(i)] == N - nd + i) --i;
      if (i < 0) break;
      ++idx[size_t(i)];
      for (int j = i + 1; j < nd; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WPattern> enumerate_vacuum(int N) { return enumerate_patterns(N, 0); }

std::vector<WPattern> enumerate_w_basis(int N, int k2) {
  if (k2 > 0) return enumerate_patterns(N, k2);
  std::vector<WPattern> out;
  for (const auto& m : enumerate_patterns(N, 0)) {
    WPattern w = m;
    w.face = -1;
    out.push_back(w);
    for (int u = 0; u < N; ++u) {
      if (m.partner[size_t(u)] > u) {
        w.face = u;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eptl
