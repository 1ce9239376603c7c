#include "eptl/engine.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eptl {

int Config::new_port(int kind, int idx) {
  ports.push_back({kind, idx});
  match.push_back(-1);
  return int(ports.size()) - 1;
}

void Config::connect(int p, int q) {
  if (match[size_t(p)] != -1 || match[size_t(q)] != -1) {
    throw std::logic_error("Config::connect: port already matched");
  }
  match[size_t(p)] = q;
  match[size_t(q)] = p;
}

int Config::make_crossing(int slit) {
  Crossing c;
  c.slit = slit;
  crossings.push_back(c);
  int id = int(crossings.size()) - 1;
  crossings[size_t(id)].wport = new_port(kCrossW, id);
  crossings[size_t(id)].eport = new_port(kCrossE, id);
  return id;
}

// ---------------------------------------------------------------------------
// Canonical data
// ---------------------------------------------------------------------------

namespace {

struct Route {
  std::vector<int> spokes;  // linear indices, nearest-c first
  int sign = +1;            // +1 east route
  char side = 'E';          // 'E', 'W', or 'C' (block straddles the cut)
};

// Route a slit for a block of `count` spokes starting at linear index
// `start` among nd spokes.  count == 0 means the puncture sits in the slot
// just west of linear index `start`.
Route route_slit(int start, int count, int nd) {
  Route r;
  if (count > 0 && start + count > nd) {
    r.side = 'C';
    return r;
  }
  int dist_e = start;
  int dist_w = nd - start - count;
  if (dist_e <= dist_w) {
    r.side = 'E';
    r.sign = +1;
    for (int t = 0; t < start; ++t) r.spokes.push_back(t);
  } else {
    r.side = 'W';
    r.sign = -1;
    for (int t = nd - 1; t >= start + count; --t) r.spokes.push_back(t);
  }
  return r;
}

}  // namespace

CanonData canonical_data_x(const XState& s) {
  CanonData cd;
  cd.enclosing = s.pattern.enclosing_arcs();
  auto d = s.pattern.defects();
  int nd = int(d.size());
  if (nd == 0) {
    cd.slit_order = {0, 1};
    return cd;
  }
  int p = s.depth(), na = s.count_a(), nb = s.count_b();
  int o = s.offset % nd;
  if (p == 0) {
    // Zero-depth states carry no slit-spoke crossings; only the order at c.
    int f0 = (0 - o % nd + nd) % nd;
    bool a_owns_east = na > 0 && f0 < na;
    if (nb == 0) {
      cd.slit_order = {0, 1};
    } else if (na == 0) {
      cd.slit_order = {1, 0};
    } else {
      cd.slit_order = a_owns_east ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
    }
    return cd;
  }
  Route ra = route_slit(o, na, nd);
  Route rb = route_slit((o + na + p) % nd, nb, nd);
  cd.signA = ra.sign;
  cd.signB = rb.sign;
  for (int t : ra.spokes) cd.spokesA.push_back(d[size_t(t)]);
  for (int t : rb.spokes) cd.spokesB.push_back(d[size_t(t)]);
  // Attachment order at c.
  auto order_of = [&](char sa, char sb) -> std::vector<int> {
    if (sa == 'C') sa = (sb == 'E') ? 'W' : 'E';
    if (sb == 'C') sb = (sa == 'E') ? 'W' : 'E';
    if (sa == 'W' && sb == 'E') return {0, 1};
    if (sa == 'E' && sb == 'W') return {1, 0};
    if (sa == 'E' && sb == 'E') {
      // The slit with fewer crossings hugs the east side.
      return cd.spokesA.size() < cd.spokesB.size() ? std::vector<int>{1, 0}
                                                   : std::vector<int>{0, 1};
    }
    // Both west: the slit with fewer crossings hugs the west side.
    return cd.spokesA.size() < cd.spokesB.size() ? std::vector<int>{0, 1}
                                                 : std::vector<int>{1, 0};
  };
  cd.slit_order = order_of(ra.side, rb.side);
  // Routed spoke sets must not overlap.
  for (int u : cd.spokesA) {
    for (int v : cd.spokesB) {
      if (u == v) throw std::logic_error("canonical_data_x: slit routes overlap");
    }
  }
  return cd;
}

CanonData canonical_data_w(const WPattern& w) {
  CanonData cd;
  cd.enclosing = w.enclosing_arcs();
  cd.slit_order = {0};
  return cd;  // canonical one-point states have no defect-slit crossings
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

namespace {

// Common construction: nodes, slit crossings, arcs, defects, through-arcs.
Config build_config(int N, int npunct, const std::vector<int>& targets,
                    const std::vector<std::pair<int, int>>& through,
                    const CanonData& cd) {
  Config cfg;
  cfg.N = N;
  cfg.npunct = npunct;
  cfg.slit_order = cd.slit_order;
  cfg.slit_list.assign(size_t(std::max(npunct, 1)), {});
  if (npunct == 0) cfg.slit_list.clear();
  cfg.node_port.resize(size_t(N));
  for (int i = 0; i < N; ++i) cfg.node_port[size_t(i)] = cfg.new_port(Config::kNode, i);

  // Crossings: per slit, enclosing arcs first (outermost first), then spokes.
  // Maps for curve construction.
  std::vector<std::map<int, int>> arc_cross(static_cast<size_t>(npunct));    // arc u -> crossing id
  std::vector<std::map<int, int>> spoke_cross(static_cast<size_t>(npunct));  // node -> crossing id
  for (int s = 0; s < npunct; ++s) {
    for (int u : cd.enclosing) {
      int id = cfg.make_crossing(s);
      cfg.slit_list[size_t(s)].push_back(id);
      arc_cross[size_t(s)][u] = id;
    }
    const auto& spokes = (s == 0) ? cd.spokesA : cd.spokesB;
    for (int w : spokes) {
      int id = cfg.make_crossing(s);
      cfg.slit_list[size_t(s)].push_back(id);
      spoke_cross[size_t(s)][w] = id;
    }
  }

  std::set<std::pair<int, int>> through_set;
  for (auto [u, v] : through) {
    through_set.insert({std::min(u, v), std::max(u, v)});
  }
  std::set<int> enclosing_set(cd.enclosing.begin(), cd.enclosing.end());

  // Helper: attach a spoke half from its node down to the hub; returns the
  // hub-side port.
  auto spoke_hub_port = [&](int node) -> int {
    for (int s = 0; s < npunct; ++s) {
      auto it = spoke_cross[size_t(s)].find(node);
      if (it == spoke_cross[size_t(s)].end()) continue;
      int sign = (s == 0) ? cd.signA : cd.signB;
      const auto& cr = cfg.crossings[size_t(it->second)];
      // Oriented hub -> node, an east-routed slit is crossed west-to-east.
      int node_side = sign > 0 ? cr.eport : cr.wport;
      int hub_side = sign > 0 ? cr.wport : cr.eport;
      cfg.connect(cfg.node_port[size_t(node)], node_side);
      return hub_side;
    }
    return cfg.node_port[size_t(node)];
  };

  for (int u = 0; u < N; ++u) {
    int t = targets[size_t(u)];
    if (t == -2 || t == -3) {
      int punct = (t == -2) ? 0 : 1;
      int tip = cfg.new_port(Config::kTip, punct);
      int hub = spoke_hub_port(u);
      cfg.connect(tip, hub);
    } else if (t > u) {
      auto key = std::make_pair(u, t);
      if (through_set.count(key)) {
        int hu = spoke_hub_port(u);
        int hv = spoke_hub_port(t);
        cfg.connect(hu, hv);
      } else if (enclosing_set.count(u)) {
        // Crossed once by every slit, easternmost slit first from the u end.
        int prev = cfg.node_port[size_t(u)];
        for (int i = npunct - 1; i >= 0; --i) {
          int s = cd.slit_order[size_t(i)];
          const auto& cr = cfg.crossings[size_t(arc_cross[size_t(s)].at(u))];
          cfg.connect(prev, cr.eport);
          prev = cr.wport;
        }
        cfg.connect(prev, cfg.node_port[size_t(t)]);
      } else {
        cfg.connect(cfg.node_port[size_t(u)], cfg.node_port[size_t(t)]);
      }
    }
  }
  for (size_t p = 0; p < cfg.ports.size(); ++p) {
    if (cfg.match[p] == -1) throw std::logic_error("build_config: unmatched port");
  }
  return cfg;
}

}  // namespace

Config config_from_x(const XState& s) {
  CanonData cd = canonical_data_x(s);
  return build_config(s.N, 2, s.targets(), s.through_arcs(), cd);
}

Config config_from_w(const WPattern& w) {
  CanonData cd = canonical_data_w(w);
  std::vector<int> targets(w.partner.begin(), w.partner.end());
  for (auto& t : targets) {
    if (t < 0) t = -2;
  }
  return build_config(w.N, 1, targets, {}, cd);
}

Config config_from_v(const WPattern& v) {
  CanonData cd;
  std::vector<int> targets(v.partner.begin(), v.partner.end());
  return build_config(v.N, 0, targets, {}, cd);
}

// ---------------------------------------------------------------------------
// Rows
// ---------------------------------------------------------------------------

RowGluing row_identity(int N) {
  RowGluing r;
  r.N = N;
  for (int i = 0; i < N; ++i) r.pieces.push_back({i, N + i, {}});
  return r;
}

RowGluing row_e(int N, int j) {
  if (j < 1 || j > N) throw std::invalid_argument("row_e: index");
  RowGluing r;
  r.N = N;
  int a = j - 1, b = j % N;
  if (j == N) {
    // Outer arc is nearer the new boundary point c; list it first.
    r.pieces.push_back({2 * N - 1, N, {+1}});  // new N-1 -> new 0
    r.pieces.push_back({N - 1, 0, {+1}});      // old N-1 -> old 0
  } else {
    r.pieces.push_back({a, b, {}});
    r.pieces.push_back({N + a, N + b, {}});
  }
  for (int i = 0; i < N; ++i) {
    if (i == a || i == b) continue;
    r.pieces.push_back({i, N + i, {}});
  }
  return r;
}

RowGluing row_omega(int N, int power) {
  RowGluing r;
  r.N = N;
  if (power == 1) {
    r.pieces.push_back({0, N + (N - 1), {-1}});  // old 0 -> new N-1, east to west
    for (int jj = 1; jj < N; ++jj) r.pieces.push_back({jj, N + jj - 1, {}});
  } else if (power == -1) {
    r.pieces.push_back({N - 1, N + 0, {+1}});  // old N-1 -> new 0, west to east
    for (int jj = 0; jj < N - 1; ++jj) r.pieces.push_back({jj, N + jj + 1, {}});
  } else {
    throw std::invalid_argument("row_omega: power must be +-1");
  }
  return r;
}

RowGluing row_tiles(int N, const std::vector<int>& tiles, int half_twist) {
  if (int(tiles.size()) != N) throw std::invalid_argument("row_tiles: size");
  RowGluing r;
  r.N = N;
  for (int j = 0; j < N; ++j) {
    r.weight_pow_s += half_twist * (tiles[size_t(j)] == 0 ? +1 : -1);
  }
  // Local ports: 0..N-1 inner node j (old), N..2N-1 outer node j (new),
  // 2N..3N-1 junction J_j between faces j and j+1 (J_{N-1} is the seam).
  // tile 0 at face j: (S_j, J_j), (J_{j-1}, N_j).
  // tile 1 at face j: (S_j, J_{j-1}), (J_j, N_j).
  auto Jl = [&](int j) { return 2 * N + (j - 1 + N) % N; };
  auto Jr = [&](int j) { return 2 * N + j; };
  std::vector<std::array<int, 2>> adj(size_t(3 * N), {-1, -1});
  auto link = [&](int u, int v) {
    auto add = [&](int p, int q) {
      if (adj[size_t(p)][0] == -1) {
        adj[size_t(p)][0] = q;
      } else if (adj[size_t(p)][1] == -1) {
        adj[size_t(p)][1] = q;
      } else {
        throw std::logic_error("row_tiles: junction over-used");
      }
    };
    add(u, v);
    add(v, u);
  };
  for (int j = 0; j < N; ++j) {
    if (tiles[size_t(j)] == 0) {
      link(j, Jr(j));
      link(Jl(j), N + j);
    } else {
      link(j, Jl(j));
      link(Jr(j), N + j);
    }
  }
  std::vector<char> used(size_t(3 * N), 0);
  for (int start = 0; start < 2 * N; ++start) {
    if (used[size_t(start)]) continue;
    used[size_t(start)] = 1;
    RowPiece piece;
    piece.u = start;
    int prev = start;
    int cur = adj[size_t(start)][0];
    while (cur >= 2 * N) {
      used[size_t(cur)] = 1;
      int jidx = cur - 2 * N;
      if (jidx == N - 1) {
        // Crossing the seam: +1 if traveling from face N-1 into face 0.
        // prev belongs to face N-1 side iff prev is S_{N-1}, N_{N-1}, or a
        // junction reached from the west.
        int from_face;
        if (prev < N) {
          from_face = prev;
        } else if (prev < 2 * N) {
          from_face = prev - N;
        } else {
          from_face = -1;  // junction-to-junction is impossible here
        }
        piece.corridor.push_back(from_face == N - 1 ? +1 : -1);
      }
      int nxt = adj[size_t(cur)][0] == prev ? adj[size_t(cur)][1] : adj[size_t(cur)][0];
      prev = cur;
      cur = nxt;
    }
    used[size_t(cur)] = 1;
    piece.v = cur;
    r.pieces.push_back(std::move(piece));
  }
  for (int j = 0; j < N; ++j) {
    if (!used[size_t(2 * N + j)]) throw std::logic_error("row_tiles: closed loop in a row");
  }
  return r;
}

RowGluing row_tl(const PlanarDiagram& d) {
  RowGluing r;
  int n = d.strands();
  r.N = n;
  for (int i = 0; i < 2 * n; ++i) {
    int j = d.partner(i);
    if (j < i) continue;
    // top strand t (index 2n-t) attaches the old boundary; bottom strand b
    // (index b-1) the new one.
    auto endpoint = [&](int idx) {
      if (idx >= n) return (2 * n - idx) - 1;  // old node, 0-based
      return n + idx;                          // new node
    };
    r.pieces.push_back({endpoint(i), endpoint(j), {}});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Gluing
// ---------------------------------------------------------------------------

void apply_row(Config& cfg, const RowGluing& row, DiagWeight& weight) {
  if (row.N != cfg.N) throw std::invalid_argument("apply_row: size mismatch");
  const int N = cfg.N;
  weight.pow_s += row.weight_pow_s;

  Config nc;
  nc.N = N;
  nc.npunct = cfg.npunct;
  nc.slit_order = cfg.slit_order;
  nc.slit_list.assign(cfg.slit_list.size(), {});

  // Port translation: old ports are copied verbatim (node ports become
  // internal junctions), then new node ports and corridor crossings appear.
  nc.ports = cfg.ports;
  nc.match.assign(nc.ports.size(), -1);
  nc.crossings = cfg.crossings;

  // adjacency lists: old pieces + row pieces.
  std::vector<std::vector<int>> adj(nc.ports.size());
  for (size_t p = 0; p < cfg.match.size(); ++p) {
    int q = cfg.match[p];
    if (q >= 0 && int(p) < q) {
      adj[p].push_back(q);
      adj[size_t(q)].push_back(int(p));
    }
  }

  nc.node_port.assign(size_t(N), -1);
  auto grow = [&](int kind, int idx) {
    nc.ports.push_back({kind, idx});
    nc.match.push_back(-1);
    adj.push_back({});
    return int(nc.ports.size()) - 1;
  };
  for (int i = 0; i < N; ++i) nc.node_port[size_t(i)] = grow(Config::kNode, i);

  std::vector<std::vector<int>> corridor_prefix(cfg.slit_list.size());
  auto endpoint_port = [&](int e) {
    if (e < N) return cfg.node_port[size_t(e)];
    return nc.node_port[size_t(e - N)];
  };
  for (const auto& piece : row.pieces) {
    int prev = endpoint_port(piece.u);
    for (int dir : piece.corridor) {
      std::vector<int> order = cfg.slit_order;
      if (dir < 0) std::reverse(order.begin(), order.end());
      for (int s : order) {
        nc.crossings.push_back({s, -1, -1, false});
        int id = int(nc.crossings.size()) - 1;
        nc.crossings[size_t(id)].wport = grow(Config::kCrossW, id);
        nc.crossings[size_t(id)].eport = grow(Config::kCrossE, id);
        corridor_prefix[size_t(s)].push_back(id);
        const auto& cr = nc.crossings[size_t(id)];
        if (dir > 0) {  // west to east: enter west port
          adj[size_t(prev)].push_back(cr.wport);
          adj[size_t(cr.wport)].push_back(prev);
          prev = cr.eport;
        } else {
          adj[size_t(prev)].push_back(cr.eport);
          adj[size_t(cr.eport)].push_back(prev);
          prev = cr.wport;
        }
      }
    }
    int last = endpoint_port(piece.v);
    adj[size_t(prev)].push_back(last);
    adj[size_t(last)].push_back(prev);
  }
  for (size_t s = 0; s < cfg.slit_list.size(); ++s) {
    nc.slit_list[s] = corridor_prefix[s];
    for (int id : cfg.slit_list[s]) nc.slit_list[s].push_back(id);
  }

  // Splice away the old node ports (each has degree 2 now).
  std::vector<char> internal(nc.ports.size(), 0);
  for (int i = 0; i < N; ++i) internal[size_t(cfg.node_port[size_t(i)])] = 1;
  std::vector<char> visited(nc.ports.size(), 0);
  for (size_t p = 0; p < nc.ports.size(); ++p) {
    if (internal[p] || visited[p] || adj[p].empty()) continue;
    if (adj[p].size() != 1) throw std::logic_error("apply_row: endpoint degree");
    visited[p] = 1;
    int prev = int(p), cur = adj[p][0];
    while (internal[size_t(cur)]) {
      visited[size_t(cur)] = 1;
      int nxt = adj[size_t(cur)][0] == prev ? adj[size_t(cur)][1] : adj[size_t(cur)][0];
      prev = cur;
      cur = nxt;
    }
    if (visited[size_t(cur)]) throw std::logic_error("apply_row: double-visited endpoint");
    visited[size_t(cur)] = 1;
    nc.match[p] = cur;
    nc.match[size_t(cur)] = int(p);
  }
  // Remaining unvisited internal cycles are crossing-free loops: weight beta.
  for (size_t p = 0; p < nc.ports.size(); ++p) {
    if (!internal[p] || visited[p]) continue;
    ++weight.n_beta;
    int prev = int(p), cur = adj[p][0];
    visited[p] = 1;
    while (cur != int(p)) {
      visited[size_t(cur)] = 1;
      int nxt = adj[size_t(cur)][0] == prev ? adj[size_t(cur)][1] : adj[size_t(cur)][0];
      prev = cur;
      cur = nxt;
    }
  }
  cfg = std::move(nc);
}

// ---------------------------------------------------------------------------
// Trace and reduce
// ---------------------------------------------------------------------------

namespace {

struct Curve {
  bool closed = false;
  int end_port_u = -1, end_port_v = -1;       // for open curves
  std::vector<std::pair<int, int>> seq;       // (crossing id, direction +-1), in travel order u->v
};

struct Traced {
  std::vector<Curve> curves;
  std::vector<int> cross_curve;  // crossing id -> curve index
};

Traced trace(const Config& cfg) {
  Traced tr;
  tr.cross_curve.assign(cfg.crossings.size(), -1);
  std::vector<char> visited(cfg.ports.size(), 0);
  auto is_endpoint = [&](int p) {
    return cfg.ports[size_t(p)].kind == Config::kNode || cfg.ports[size_t(p)].kind == Config::kTip;
  };
  auto twin = [&](int p) {
    const auto& port = cfg.ports[size_t(p)];
    const auto& cr = cfg.crossings[size_t(port.idx)];
    return port.kind == Config::kCrossW ? cr.eport : cr.wport;
  };
  for (size_t start = 0; start < cfg.ports.size(); ++start) {
    if (visited[start] || !is_endpoint(int(start))) continue;
    if (cfg.match[start] < 0) continue;  // orphaned (spliced-out) port
    Curve c;
    c.end_port_u = int(start);
    visited[start] = 1;
    int cur = cfg.match[start];
    while (!is_endpoint(cur)) {
      visited[size_t(cur)] = 1;
      const auto& port = cfg.ports[size_t(cur)];
      int dir = port.kind == Config::kCrossW ? +1 : -1;  // entered west => crossing west->east
      c.seq.push_back({port.idx, dir});
      tr.cross_curve[size_t(port.idx)] = int(tr.curves.size());
      int t = twin(cur);
      visited[size_t(t)] = 1;
      cur = cfg.match[size_t(t)];
    }
    visited[size_t(cur)] = 1;
    c.end_port_v = cur;
    tr.curves.push_back(std::move(c));
  }
  // Closed curves through crossings.
  for (size_t start = 0; start < cfg.ports.size(); ++start) {
    if (visited[start] || cfg.match[start] < 0) continue;
    if (is_endpoint(int(start))) throw std::logic_error("trace: stray endpoint");
    Curve c;
    c.closed = true;
    int cur = int(start);
    do {
      visited[size_t(cur)] = 1;
      const auto& port = cfg.ports[size_t(cur)];
      int dir = port.kind == Config::kCrossW ? +1 : -1;
      c.seq.push_back({port.idx, dir});
      tr.cross_curve[size_t(port.idx)] = int(tr.curves.size());
      int t = twin(cur);
      visited[size_t(t)] = 1;
      cur = cfg.match[size_t(t)];
    } while (cur != int(start));
    tr.curves.push_back(std::move(c));
  }
  return tr;
}

}  // namespace

ReducedCurves reduce_config(Config& cfg, DiagWeight& weight) {
  Traced tr = trace(cfg);

  // Position of each crossing within its curve's sequence.
  auto rebuild_pos = [&](std::map<int, int>& pos) {
    pos.clear();
    for (size_t ci = 0; ci < tr.curves.size(); ++ci) {
      const auto& c = tr.curves[ci];
      for (size_t i = 0; i < c.seq.size(); ++i) pos[c.seq[i].first] = int(i);
    }
  };
  std::map<int, int> pos;
  rebuild_pos(pos);

  // Bigon cancellation to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& list : cfg.slit_list) {
      for (size_t i = 0; i + 1 < list.size(); ++i) {
        int c1 = list[i], c2 = list[i + 1];
        int cu1 = tr.cross_curve[size_t(c1)], cu2 = tr.cross_curve[size_t(c2)];
        if (cu1 != cu2 || cu1 < 0) continue;
        auto& curve = tr.curves[size_t(cu1)];
        int p1 = pos.at(c1), p2 = pos.at(c2);
        int n = int(curve.seq.size());
        bool adjacent;
        if (curve.closed) {
          adjacent = (std::abs(p1 - p2) == 1) || (n > 1 && std::abs(p1 - p2) == n - 1);
        } else {
          adjacent = std::abs(p1 - p2) == 1;
        }
        if (!adjacent) continue;
        if (curve.seq[size_t(p1)].second == curve.seq[size_t(p2)].second) continue;
        // Remove both crossings.
        int hi = std::max(p1, p2), lo = std::min(p1, p2);
        if (curve.closed && hi - lo != 1) {
          // wrap-around pair: erase last then first
          curve.seq.erase(curve.seq.begin() + hi);
          curve.seq.erase(curve.seq.begin());
        } else {
          curve.seq.erase(curve.seq.begin() + hi);
          curve.seq.erase(curve.seq.begin() + lo);
        }
        list.erase(list.begin() + long(i) + 1);
        list.erase(list.begin() + long(i));
        rebuild_pos(pos);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }

  // Classify closed curves.
  auto slit_of = [&](int cross_id) { return cfg.crossings[size_t(cross_id)].slit; };
  for (auto& c : tr.curves) {
    if (!c.closed) continue;
    int netA = 0, netB = 0, grossA = 0, grossB = 0;
    for (auto [id, dir] : c.seq) {
      if (slit_of(id) == 0) {
        netA += dir;
        ++grossA;
      } else {
        netB += dir;
        ++grossB;
      }
    }
    if (grossA != std::abs(netA) || grossB != std::abs(netB)) {
      throw std::logic_error("reduce: irreducible closed curve");
    }
    if (netA == 0 && netB == 0) {
      ++weight.n_beta;
    } else if (std::abs(netA) == 1 && netB == 0) {
      ++weight.n_alpha_a;
    } else if (netA == 0 && std::abs(netB) == 1) {
      ++weight.n_alpha_b;
    } else if (std::abs(netA) == 1 && netA == netB) {
      ++weight.n_alpha_ab;
    } else {
      throw std::logic_error("reduce: unexpected loop winding");
    }
  }

  // Open curves.
  ReducedCurves rc;
  rc.targets.assign(size_t(cfg.N), -1);
  bool delta = cfg.npunct == 2 && cfg.slit_order.size() == 2 && cfg.slit_order[0] == 1;
  for (auto& c : tr.curves) {
    if (c.closed) continue;
    const auto& pu = cfg.ports[size_t(c.end_port_u)];
    const auto& pv = cfg.ports[size_t(c.end_port_v)];
    int netA = 0, netB = 0;
    for (auto [id, dir] : c.seq) {
      (slit_of(id) == 0 ? netA : netB) += dir;
    }
    if (pu.kind == Config::kTip && pv.kind == Config::kTip) {
      if (pu.idx == pv.idx) {
        weight.zero = true;
        continue;
      }
      // Orient a -> b.
      int nA = netA, nB = netB;
      if (pu.idx == 1) {
        nA = -netA;
        nB = -netB;
      }
      int n_a = -nA;
      int n_b = nB;
      weight.pow_x += n_a;
      weight.pow_y += n_b;
      weight.mul_mu(delta ? 1 : 0);
    } else if (pu.kind == Config::kTip || pv.kind == Config::kTip) {
      int tipside = pu.kind == Config::kTip ? pu.idx : pv.idx;
      int node = pu.kind == Config::kNode ? pu.idx : pv.idx;
      // Orient tip -> node.
      if (pu.kind != Config::kTip) {
        netA = -netA;
        netB = -netB;
      }
      rc.targets[size_t(node)] = tipside == 0 ? -2 : -3;
      rc.defect_net[node] = {netA, netB};
    } else {
      int u = pu.idx, v = pv.idx;
      rc.targets[size_t(u)] = v;
      rc.targets[size_t(v)] = u;
      int grossA = 0, grossB = 0;
      for (auto [id, dir] : c.seq) {
        (void)dir;
        ++(slit_of(id) == 0 ? grossA : grossB);
      }
      rc.arc_parity[std::min(u, v)] = {grossA % 2, grossB % 2};
    }
  }
  return rc;
}

// ---------------------------------------------------------------------------
// Identification
// ---------------------------------------------------------------------------

namespace {

// Twist factors for unwinding a defect relative to the canonical position.
// Each unit of crossing surplus Delta costs base^{-Delta}; the bases follow
// the eight-case table of the two-point action.
void apply_defect_twists(const ReducedCurves& rc, const CanonData& cd,
                         const std::vector<int>& targets, DiagWeight& weight) {
  std::set<int> spokesA(cd.spokesA.begin(), cd.spokesA.end());
  std::set<int> spokesB(cd.spokesB.begin(), cd.spokesB.end());
  for (const auto& [node, nets] : rc.defect_net) {
    int canonA = spokesA.count(node) ? cd.signA : 0;
    int canonB = spokesB.count(node) ? cd.signB : 0;
    int dA = nets.first - canonA;
    int dB = nets.second - canonB;
    if (targets[size_t(node)] == -2) {
      // a-defect: slit A costs x, slit B costs x^-1 z.
      weight.pow_x -= dA;
      weight.pow_x += dB;
      weight.pow_z -= dB;
    } else {
      // b-defect: slit B costs y, slit A costs y^-1 z^-1.
      weight.pow_y -= dB;
      weight.pow_y += dA;
      weight.pow_z += dA;
    }
  }
}

}  // namespace

XState identify_x(const ReducedCurves& rc, int N, int k2, int l2,
                  const std::vector<int>& slit_order, DiagWeight& weight) {
  (void)slit_order;
  // Split arcs into ordinary and through (separating a from b).
  WPattern pat;
  pat.N = N;
  pat.partner.assign(size_t(N), -1);
  std::vector<std::pair<int, int>> through;
  for (const auto& [u, par] : rc.arc_parity) {
    int v = rc.targets[size_t(u)];
    if ((par.first ^ par.second) & 1) {
      through.emplace_back(u, v);
    } else {
      pat.partner[size_t(u)] = v;
      pat.partner[size_t(v)] = u;
    }
  }
  // Defect-free, through-free states carry a face index.
  int nd = 0;
  for (int i = 0; i < N; ++i) nd += pat.partner[size_t(i)] < 0 ? 1 : 0;
  if (nd == 0) {
    int face = -1;
    for (const auto& [u, par] : rc.arc_parity) {
      if (par.first) {
        if (par.second != par.first) throw std::logic_error("identify_x: face parity mismatch");
        face = std::max(face, u);
      }
    }
    pat.face = face;
    // Validate the chain.
    auto chain = pat.face_chain(face);
    std::set<int> chain_set(chain.begin(), chain.end());
    for (const auto& [u, par] : rc.arc_parity) {
      if ((par.first != 0) != (chain_set.count(u) != 0)) {
        throw std::logic_error("identify_x: face chain mismatch");
      }
    }
    XState s;
    s.N = N;
    s.k2 = k2;
    s.l2 = l2;
    s.pattern = pat;
    s.offset = 0;
    // No defects: no twist factors.
    apply_defect_twists(rc, canonical_data_x(s), rc.targets, weight);
    return s;
  }

  int offsets = nd;
  {
    // Minimal-defect depth-0 states have a unique offset.
    int p_guess = nd > k2 + l2 ? (nd - k2 - l2) / 2 : 0;
    if (p_guess == 0 && nd == std::abs(k2 - l2)) offsets = 1;
  }
  std::vector<XState> matches;
  std::vector<CanonData> match_cd;
  for (int o = 0; o < offsets; ++o) {
    XState cand;
    cand.N = N;
    cand.k2 = k2;
    cand.l2 = l2;
    cand.pattern = pat;
    cand.offset = o;
    if (cand.targets() != rc.targets) continue;
    CanonData cd = canonical_data_x(cand);
    // Compare arc parities.
    std::set<int> encl(cd.enclosing.begin(), cd.enclosing.end());
    std::set<int> spokesA(cd.spokesA.begin(), cd.spokesA.end());
    std::set<int> spokesB(cd.spokesB.begin(), cd.spokesB.end());
    bool ok = true;
    for (const auto& [u, par] : rc.arc_parity) {
      int v = rc.targets[size_t(u)];
      int expA, expB;
      if (pat.partner[size_t(u)] >= 0) {
        expA = encl.count(u) ? 1 : 0;
        expB = expA;
      } else {
        expA = (int(spokesA.count(u)) + int(spokesA.count(v))) % 2;
        expB = (int(spokesB.count(u)) + int(spokesB.count(v))) % 2;
      }
      if (par.first % 2 != expA || par.second % 2 != expB) {
        ok = false;
        break;
      }
    }
    if (ok) {
      matches.push_back(cand);
      match_cd.push_back(cd);
    }
  }
  if (matches.size() != 1) {
    std::ostringstream os;
    os << "identify_x: " << matches.size() << " canonical matches (N=" << N << ")";
    throw std::logic_error(os.str());
  }
  apply_defect_twists(rc, match_cd[0], rc.targets, weight);
  return matches[0];
}

WPattern identify_w(const ReducedCurves& rc, int N, DiagWeight& weight) {
  WPattern pat;
  pat.N = N;
  pat.partner.assign(size_t(N), -1);
  for (const auto& [u, par] : rc.arc_parity) {
    (void)par;
    int v = rc.targets[size_t(u)];
    pat.partner[size_t(u)] = v;
    pat.partner[size_t(v)] = u;
  }
  int nd = 0;
  for (int i = 0; i < N; ++i) nd += pat.partner[size_t(i)] < 0 ? 1 : 0;
  if (nd == 0) {
    int face = -1;
    for (const auto& [u, par] : rc.arc_parity) {
      if (par.first) face = std::max(face, u);
    }
    pat.face = face;
    auto chain = pat.face_chain(face);
    std::set<int> chain_set(chain.begin(), chain.end());
    for (const auto& [u, par] : rc.arc_parity) {
      if ((par.first != 0) != (chain_set.count(u) != 0)) {
        throw std::logic_error("identify_w: face chain mismatch");
      }
    }
    return pat;
  }
  // Canonical one-point states have no defect crossings; enclosing arcs carry
  // parity one.
  auto encl = pat.enclosing_arcs();
  std::set<int> encl_set(encl.begin(), encl.end());
  for (const auto& [u, par] : rc.arc_parity) {
    if ((par.first != 0) != (encl_set.count(u) != 0)) {
      throw std::logic_error("identify_w: arc parity mismatch");
    }
  }
  for (const auto& [node, nets] : rc.defect_net) {
    (void)node;
    weight.pow_z -= nets.first;  // base z per surplus crossing
  }
  return pat;
}

WPattern identify_v(const ReducedCurves& rc, int N) {
  WPattern pat;
  pat.N = N;
  pat.partner.assign(size_t(N), -1);
  for (const auto& [u, par] : rc.arc_parity) {
    if (par.first || par.second) throw std::logic_error("identify_v: crossing in vacuum");
    int v = rc.targets[size_t(u)];
    pat.partner[size_t(u)] = v;
    pat.partner[size_t(v)] = u;
  }
  return pat;
}

}  // namespace eptl
