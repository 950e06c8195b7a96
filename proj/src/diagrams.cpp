#include "vexmult/diagrams.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vexmult {

namespace {

std::vector<int> grid_indices(LieType t, int n) {
  std::vector<int> idx;
  if (is_signed_type(t))
    for (int i = -n; i <= -1; ++i) idx.push_back(i);
  for (int i = 1; i <= n; ++i) idx.push_back(i);
  return idx;
}

bool slot_less(LieType t, int n, int a, int b) {
  bool sg = is_signed_type(t);
  return grid_slot(a, n, sg) < grid_slot(b, n, sg);
}

}  // namespace

bool RotheDiagram::contains(const Box& b) const {
  return std::find(boxes.begin(), boxes.end(), b) != boxes.end();
}

RotheDiagram rothe_diagram(LieType t, const SignedPerm& w) {
  require_valid(t, w);
  int n = w.size();
  SignedPerm wi = w.inverse();
  std::vector<int> idx = grid_indices(t, n);
  RotheDiagram d;
  d.type = t;
  d.owner = w;
  for (int i : idx)
    for (int j : idx)
      if (slot_less(t, n, i, w(j)) && slot_less(t, n, j, wi(i))) d.boxes.push_back(Box{i, j});
  bool sg = is_signed_type(t);
  std::sort(d.boxes.begin(), d.boxes.end(), [&](const Box& x, const Box& y) {
    return std::pair(grid_slot(x.row, n, sg), grid_slot(x.col, n, sg)) <
           std::pair(grid_slot(y.row, n, sg), grid_slot(y.col, n, sg));
  });
  return d;
}

EssentialSet essential_set(LieType t, const SignedPerm& w) {
  RotheDiagram d = rothe_diagram(t, w);
  int n = w.size();
  bool sg = is_signed_type(t);

  // signed types: restrict to barred columns before looking for corners
  std::set<std::pair<int, int>> cells;
  for (const Box& b : d.boxes) {
    if (sg && b.col > 0) continue;
    cells.insert({b.row, b.col});
  }

  EssentialSet es;
  for (auto [r, c] : cells) {
    int rs = grid_succ(r);
    int cs = grid_succ(c);
    bool below = rs <= n && cells.count({rs, c}) > 0;
    bool right = (sg ? cs <= -1 : cs <= n) && cells.count({r, cs}) > 0;
    if (below || right) continue;
    if (sg && c == -1 && r < -1) {
      es.excluded.push_back(Box{r, c});
      continue;
    }
    es.boxes.push_back(Box{r, c});
  }

  auto col_slot = [&](const Box& b) { return grid_slot(b.col, n, sg); };
  auto row_slot = [&](const Box& b) { return grid_slot(b.row, n, sg); };
  std::sort(es.boxes.begin(), es.boxes.end(), [&](const Box& x, const Box& y) {
    if (col_slot(x) != col_slot(y)) return col_slot(x) < col_slot(y);
    return row_slot(x) > row_slot(y);
  });
  // SW->NE: columns weakly increase, rows weakly decrease
  es.sw_ne_ordered = true;
  for (size_t i = 0; i + 1 < es.boxes.size(); ++i)
    if (row_slot(es.boxes[i]) < row_slot(es.boxes[i + 1])) es.sw_ne_ordered = false;
  return es;
}

std::string render_ascii(LieType t, const SignedPerm& w, bool overlay_essential) {
  RotheDiagram d = rothe_diagram(t, w);
  int n = w.size();
  std::set<std::pair<int, int>> cells;
  for (const Box& b : d.boxes) cells.insert({b.row, b.col});
  std::set<std::pair<int, int>> ess;
  if (overlay_essential)
    for (const Box& b : essential_set(t, w).boxes) ess.insert({b.row, b.col});

  std::vector<int> idx = grid_indices(t, n);
  std::ostringstream out;
  for (int i : idx) {
    for (int j : idx) {
      char c = '.';
      if (ess.count({i, j}))
        c = 'E';
      else if (cells.count({i, j}))
        c = '#';
      else if (w(j) == i)
        c = '*';
      out << c;
    }
    out << '\n';
  }
  return out.str();
}

std::string boxes_json(const std::vector<Box>& boxes) {
  std::ostringstream out;
  out << "{\"boxes\":[";
  for (size_t i = 0; i < boxes.size(); ++i) {
    if (i) out << ',';
    out << '[' << boxes[i].row << ',' << boxes[i].col << ']';
  }
  out << "]}";
  return out.str();
}

}  // namespace vexmult
