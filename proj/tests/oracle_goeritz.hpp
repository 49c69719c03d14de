#pragma once
// Goeritz-matrix reference oracle.
//
// For each fixture link we fix a concrete checkerboard diagram by hand and
// freeze its white-region data: the number of white regions and, for every
// crossing, the (unordered) pair of white regions at its corners together
// with the crossing's incidence number eta = +/-1.  The Goeritz matrix is
// assembled generically from that data:
//
//     G'_ij = - sum of eta over crossings joining white regions i and j,
//     G'_ii chosen so that every row sums to zero,
//     G     = G' with row/column 0 deleted.
//
// G is the Gordon-Litherland form of the shaded (black) spanning surface in
// the basis of boundary cycles of the remaining white regions; |det G| is the
// link determinant.  All region data below was derived by hand from the
// standard reduced diagrams and is independent of the library under test.

#include <cstddef>
#include <vector>

#include "oracle_common.hpp"

namespace oracle {

struct WhiteCrossing {
  int a, b;  // white regions at the crossing (0-based)
  int eta;   // incidence number of the crossing, +1 or -1
};

struct GoeritzDiagram {
  int white_regions = 0;
  std::vector<WhiteCrossing> crossings;
};

inline Mat goeritz_matrix(const GoeritzDiagram& d) {
  const int w = d.white_regions;
  Mat full(w, std::vector<long long>(w, 0));
  for (const auto& c : d.crossings) {
    full[c.a][c.b] -= c.eta;
    full[c.b][c.a] -= c.eta;
  }
  for (int i = 0; i < w; ++i) {
    long long off = 0;
    for (int j = 0; j < w; ++j)
      if (j != i) off += full[i][j];
    full[i][i] = -off;
  }
  Mat g(w - 1, std::vector<long long>(w - 1));
  for (int i = 1; i < w; ++i)
    for (int j = 1; j < w; ++j) g[i - 1][j - 1] = full[i][j];
  return g;
}

/* ---- frozen diagrams ---------------------------------------------------- */

/* Round-circle unknot diagram: no crossings; the single white region is the
 * unbounded one.  Goeritz matrix is empty, determinant 1. */
inline GoeritzDiagram unknot_diagram() { return {1, {}}; }

/* Standard reduced alternating diagram of the (2,n) torus link: a vertical
 * chain of n crossings between two strands.  The shaded surface is the chain
 * of bigons (the n-half-twisted band); the two white regions are the left (0)
 * and right (1) sides, and every crossing joins them.  eta = +1 for the
 * positive (right-handed) chain, -1 for its mirror. */
inline GoeritzDiagram twist_chain_diagram(int n, int eta) {
  GoeritzDiagram d;
  d.white_regions = 2;
  for (int i = 0; i < n; ++i) d.crossings.push_back({0, 1, eta});
  return d;
}

inline GoeritzDiagram hopf_plus_diagram() { return twist_chain_diagram(2, +1); }
inline GoeritzDiagram trefoil_left_diagram() { return twist_chain_diagram(3, -1); }
inline GoeritzDiagram trefoil_right_diagram() { return twist_chain_diagram(3, +1); }
inline GoeritzDiagram torus24_plus_diagram() { return twist_chain_diagram(4, +1); }
inline GoeritzDiagram torus25_plus_diagram() { return twist_chain_diagram(5, +1); }

/* The figure-eight fixture surface is orientable (a plumbing of a +1- and a
 * -1-full-twisted band), so its Gordon-Litherland form is the symmetrized
 * Seifert matrix; see oracle_seifert.hpp.  No white-region data is needed:
 * for an orientable spanning surface the two computations agree. */

}  // namespace oracle
