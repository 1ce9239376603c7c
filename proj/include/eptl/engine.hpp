#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eptl/tl.hpp"
#include "eptl/xstate.hpp"

namespace eptl {

// Multiplicative bookkeeping produced by a diagrammatic reduction.  The
// module layer turns this into an exact or numeric scalar.
struct DiagWeight {
  bool zero = false;
  int pow_s = 0;  // braid-tile half-twists (q^{1/2} = s)
  int pow_x = 0, pow_y = 0, pow_z = 0;
  int n_beta = 0;
  int n_alpha_a = 0, n_alpha_b = 0, n_alpha_ab = 0;

  void mul_mu(int delta) {  // mu = y z / x
    pow_x -= delta;
    pow_y += delta;
    pow_z += delta;
  }
};

// ---------------------------------------------------------------------------
// Cut-disc configuration: the disc is cut along the dashed segments from each
// marked point to the boundary point c (between nodes N-1 and 0).  Curves are
// stored as a perfect matching on ports; slit crossings are ports that curves
// pass through.
// ---------------------------------------------------------------------------

struct Config {
  static constexpr int kNode = 0, kTip = 1, kCrossW = 2, kCrossE = 3;

  struct Port {
    int kind;
    int idx;  // node index / puncture id / crossing id
  };
  struct Crossing {
    int slit;  // puncture id
    int wport = -1, eport = -1;
    bool dead = false;
  };

  int N = 0;
  int npunct = 0;
  std::vector<int> slit_order;  // puncture ids, west to east at c
  std::vector<Port> ports;
  std::vector<int> match;       // port -> port
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> slit_list;  // per puncture: crossing ids, [0] nearest c
  std::vector<int> node_port;               // node -> port id

  int new_port(int kind, int idx);
  void connect(int p, int q);
  int make_crossing(int slit);  // returns crossing id; caller inserts into slit_list
};

// Canonical crossing data of a basis state, shared by the builder and the
// identification step.
struct CanonData {
  std::vector<int> enclosing;  // arcs (smaller endpoint), outermost first; crossed by every slit
  std::vector<int> spokesA, spokesB;  // node indices crossed by each slit, nearest-c first
  int signA = +1, signB = +1;         // +1 = east route
  std::vector<int> slit_order;        // puncture ids west to east
};

CanonData canonical_data_x(const XState& s);
CanonData canonical_data_w(const WPattern& w);

Config config_from_x(const XState& s);
Config config_from_w(const WPattern& w);
Config config_from_v(const WPattern& v);

// ---------------------------------------------------------------------------
// Annulus rows (generators, braid/transfer tile rows, TL diagrams).
// ---------------------------------------------------------------------------

struct RowPiece {
  // Endpoints: 0..N-1 = old (inner) nodes, N..2N-1 = new (outer) nodes.
  int u, v;
  // Corridor passes read from u to v: +1 = west-to-east.
  std::vector<int> corridor;
};

struct RowGluing {
  int N = 0;
  // Pieces crossing the corridor must be listed outermost (nearest new-c)
  // first.
  std::vector<RowPiece> pieces;
  int weight_pow_s = 0;  // braid tile net half-twists
};

RowGluing row_identity(int N);
RowGluing row_e(int N, int j);          // 1-based, j in 1..N
RowGluing row_omega(int N, int power);  // power = +1 or -1
// Tile row: tiles[j] (0-based face j, between inner nodes j and j+1 ... each
// face owns inner/outer node j) with 0 = the NE/SW quarter-arc pair and
// 1 = the NW/SE pair.  half_twist: 0 for transfer tiles (unit weights),
// +1 to weight choice 0 by s and choice 1 by 1/s, -1 for the opposite.
RowGluing row_tiles(int N, const std::vector<int>& tiles, int half_twist);
RowGluing row_tl(const PlanarDiagram& d);

void apply_row(Config& cfg, const RowGluing& row, DiagWeight& weight);

// ---------------------------------------------------------------------------
// Trace + reduction.
// ---------------------------------------------------------------------------

struct ReducedCurves {
  // Per node: -2 a-defect, -3 b-defect, >= 0 arc partner.
  std::vector<int> targets;
  // Defect nets oriented tip -> node: node -> (netA, netB).
  std::map<int, std::pair<int, int>> defect_net;
  // Arc crossing parities: smaller endpoint -> (parityA, parityB).
  std::map<int, std::pair<int, int>> arc_parity;
};

// Reduce the configuration: bigon cancellation, loop removal (weights),
// defect joins (weights or zero).  Returns the surviving open curves.
ReducedCurves reduce_config(Config& cfg, DiagWeight& weight);

// Identify a reduced curve system as a canonical basis state, multiplying the
// twist factors into `weight`.  Module kind is inferred from npunct.
XState identify_x(const ReducedCurves& rc, int N, int k2, int l2,
                  const std::vector<int>& slit_order, DiagWeight& weight);
WPattern identify_w(const ReducedCurves& rc, int N, DiagWeight& weight);
WPattern identify_v(const ReducedCurves& rc, int N);

}  // namespace eptl
