#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vexmult/shape.hpp"
#include "vexmult/weyl.hpp"

namespace vexmult {

// The cells of an outer shape.  Type A rows are left-justified (row i has
// columns 1..mu_i); shifted rows start on the main diagonal (columns
// i..i+mu_i-1).
struct ShapeRegion {
  LieType type = LieType::A;
  Shape mu;

  bool shifted() const { return is_signed_type(type); }
  int rows() const { return mu.rows(); }
  bool is_cell(int r, int c) const {
    if (r < 1 || r > rows() || c < 1) return false;
    int len = mu.part(r);
    if (!shifted()) return c <= len;
    return c >= r && c < r + len;
  }
};

// One excited configuration: a set of boxes inside the region, kept sorted.
using DiagramState = std::vector<std::pair<int, int>>;

// lambda placed at its home cells (top-left / diagonal-justified)
DiagramState initial_state(const Shape& lambda, const ShapeRegion& region);

// All states reachable in one elementary move.  Moves:
//  - box (i,j) slides to (i+1,j+1) when (i,j+1), (i+1,j), (i+1,j+1) are
//    free region cells; in shifted regions a diagonal box (j=i) only needs
//    (i,i+1) and (i+1,i+1) (type C rule);
//  - types B and D replace the diagonal rule: (i,i) jumps to (i+2,i+2) when
//    (i,i+1), (i+1,i+1), (i+1,i+2), (i+2,i+2) are free region cells.
std::vector<DiagramState> elementary_moves(LieType t, const DiagramState& s,
                                           const ShapeRegion& region);

std::size_t default_state_cap();  // 10^7, overridable via VEXMULT_STATE_CAP

// Closure of the initial state under elementary moves, as a sorted list.
// Throws a resource error (reporting states seen so far) past the cap.
std::vector<DiagramState> enumerate_excited(LieType t, const Shape& lambda, const Shape& mu,
                                            std::size_t cap = default_state_cap(),
                                            bool parallel = false);

unsigned long long count_excited(LieType t, const Shape& lambda, const Shape& mu,
                                 std::size_t cap = default_state_cap());

// excited boxes '#', empty cells '.', non-cells ' '
std::string render_state(const ShapeRegion& region, const DiagramState& s);

std::string state_json(const DiagramState& s);  // {"boxes":[[r,c],...]}

}  // namespace vexmult
