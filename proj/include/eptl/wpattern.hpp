#pragma once

#include <string>
#include <vector>

namespace eptl {

// One-marked-point link pattern on N nodes (0-based), drawn on the disc with
// the boundary point c between node N-1 and node 0.
//
//  - partner[i] = j for an arc {i,j}, or -1 when node i carries a defect.
//  - Arcs are non-crossing chords, confined to the gaps between consecutive
//    defects.
//  - For defect-free patterns, `face` records which face of the arc
//    arrangement holds the marked point: -1 for the face adjacent to c, else
//    the smaller endpoint of the innermost enclosing arc.
struct WPattern {
  int N = 0;
  std::vector<int> partner;
  int face = -1;

  std::vector<int> defects() const;  // ascending node indices
  int defect_count() const;

  // Arcs that separate every defect node (or, for defect-free patterns, the
  // given face) from the boundary point c; outermost first.  These are the
  // arcs crossed by the dashed segments in the canonical drawing.
  std::vector<int> enclosing_arcs() const;  // smaller endpoint of each arc

  // Nesting chain of a face identified by its innermost enclosing arc (-1 for
  // the root face); outermost first.
  std::vector<int> face_chain(int face_arc) const;

  bool operator==(const WPattern& o) const {
    return N == o.N && partner == o.partner && face == o.face;
  }
  bool operator<(const WPattern& o) const;

  std::string str() const;
};

// Canonical enumerations (deterministic order: lex on partner array, then
// face index).
std::vector<WPattern> enumerate_patterns(int N, int defect_pairs_twice);  // 2k defects
std::vector<WPattern> enumerate_vacuum(int N);        // perfect matchings, no face
std::vector<WPattern> enumerate_w_basis(int N, int k2);  // with faces when k2 == 0

}  // namespace eptl
