#pragma once

#include <string>
#include <vector>

#include "vexmult/weyl.hpp"

namespace vexmult {

// A grid box.  Rows and columns are indexed by {1..n} in type A and by
// {-n..-1, 1..n} (barred followed by unbarred) in signed types, ordered
// -n < ... < -1 < 1 < ... < n.  Zero never occurs.
struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

// successor in the barred order (skips 0)
inline int grid_succ(int i) { return i == -1 ? 1 : i + 1; }

// slot index 1..2n (signed) or 1..n (type A) for ordering and rendering
inline int grid_slot(int i, int n, bool signed_grid) {
  if (!signed_grid) return i;
  return i < 0 ? i + n + 1 : i + n;
}

struct RotheDiagram {
  LieType type = LieType::A;
  SignedPerm owner;
  std::vector<Box> boxes;  // sorted by (slot(row), slot(col))

  bool contains(const Box& b) const;
};

// Boxes (i,j) with i < w(j) and j < w^{-1}(i), over the type's grid
// (n x n for type A, the extended 2n x 2n grid for signed types).
RotheDiagram rothe_diagram(LieType t, const SignedPerm& w);

struct EssentialSet {
  std::vector<Box> boxes;     // SW->NE when that order exists, else column-major
  bool sw_ne_ordered = true;  // false flags a non-vexillary signed input
  std::vector<Box> excluded;  // corners removed by the barred-column edge rule
};

// South-east corners of the Rothe diagram.  For signed types the diagram is
// first restricted to the barred columns, and corners in column -1 with a
// negative row index are dropped.
EssentialSet essential_set(LieType t, const SignedPerm& w);

// Fixed-width rendering: dots '*', diagram boxes '#', essential boxes 'E',
// everything else '.'.  Deterministic and byte-stable.
std::string render_ascii(LieType t, const SignedPerm& w, bool overlay_essential = false);

std::string boxes_json(const std::vector<Box>& boxes);  // {"boxes":[[r,c],...]}

}  // namespace vexmult
