#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vexmult/vexillary.hpp"
#include "vexmult/weyl.hpp"

namespace vexmult {

// Schubert-cell matrix representatives.  Grid rows/columns are "slots":
// 1..n in type A, 1..2n in types C/D (barred indices first), 1..2n+1 in
// type B (index 0 in the middle).  Each column holds one pivot; the other
// entries are free coordinates, coordinates dependent on the bilinear form
// (bullets), or structural zeros.
enum class CellKind : unsigned char { Zero, Pivot, Free };

struct MCell {
  CellKind kind = CellKind::Zero;
  signed char sign = 0;  // pivot sign
  bool bullet = false;   // dependent coordinate
  short label = 0;       // 0 = unlabeled
};

struct CellMatrix {
  LieType type = LieType::A;
  int n = 0;
  int rows = 0, cols = 0;

  std::vector<MCell> a;
  // dependent/free partners coming from one bilinear-form constraint:
  // {star_r, star_c, bullet_r, bullet_c}
  std::vector<std::array<int, 4>> pairs;

  // direct-sum matrices only:
  std::vector<int> col_bounds;  // block boundaries (column positions)
  struct ColInfo {
    bool fcol = false;  // reference-flag column (pivot -1) vs cell column
    int idx = 0;        // row slot of the -1, or the original column slot
  };
  std::vector<ColInfo> colinfo;

  MCell& at(int r, int c) { return a[static_cast<size_t>(r - 1) * cols + (c - 1)]; }
  const MCell& at(int r, int c) const {
    return a[static_cast<size_t>(r - 1) * cols + (c - 1)];
  }
};

int slot_count(LieType t, int n);
int to_slot(LieType t, int n, int idx);

// Matrix representative of the opposite Schubert cell of v, with dependent
// entries marked per the type's bilinear form.
CellMatrix cell_matrix(LieType t, const SignedPerm& v);

// Type A weak triple extended through the isotropic/coisotropic completion.
// Defined for B/C/D; the repeated middle entry is omitted when p_s=q_s take
// the type's minimal value.
struct ExtendedTriple {
  WeakTriple base;
  std::vector<int> ktilde, ptilde, qtilde;  // slot-scale data, k' extension
};
ExtendedTriple extend_triple(LieType t, const WeakTriple& wt, int n);

// Label sweep over nested NW submatrices (the grid-mapped (q_i, p_i) corners,
// extended corners in signed types), then the dependent-entry exchange that
// moves bullets ahead of higher-labeled stars.  The exchange can be skipped
// to inspect the default dependent-entry placement.
CellMatrix label_entries(CellMatrix m, const WeakTriple& wt, bool exchange = true);

struct LabelCountResult {
  long long labeled_free = 0;     // labeled stars (all labeled entries in type A)
  long long expected_mu = 0;      // |mu|
  long long labeled_all = 0;      // stars + bullets
  long long expected_mu_ext = 0;  // |mu~| (equals |mu| in type A)
  bool ok = false;
};
LabelCountResult label_count_check(LieType t, const SignedPerm& w, const SignedPerm& v);
LabelCountResult label_count_check(const WeakTriple& wt, const SignedPerm& v);

// Top block of the direct-sum embedding of the cell of v, in the basis
// adapted to the diagonal subspace: cell columns interleaved with reference
// columns carrying -1 pivots, split into blocks at r_i = p_i + N - q_i.
// Requires v minimal in its coset for the p-block parabolic.
CellMatrix direct_sum_matrix(LieType t, const SignedPerm& w, const SignedPerm& v);
CellMatrix direct_sum_matrix(const WeakTriple& wt, const SignedPerm& v);

struct RankCheckResult {
  bool structural_ok = false;
  bool random_ok = false;
  int trials = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::string failure;
  bool ok() const { return structural_ok && random_ok; }
};
// For each block prefix: the structural pivot count, and randomized
// finite-field instantiations of the free entries, must give rank at least
// (#rows - mu_{k'_i}).
RankCheckResult rank_claim_check(LieType t, const SignedPerm& w, const SignedPerm& v,
                                 int trials, std::uint64_t prime, std::uint64_t seed = 1);
RankCheckResult rank_claim_check(const WeakTriple& wt, const SignedPerm& v, int trials,
                                 std::uint64_t prime, std::uint64_t seed = 1);

struct SurvivorResult {
  std::vector<Box> survivors;  // (row slot, column position) in the top block
  long long star_survivors = 0;
  long long expected_mu = 0;
  long long total_survivors = 0;
  long long expected_mu_ext = 0;
  bool matches_labels = false;
  bool ok = false;
};
// Classifies each free entry of the direct-sum block as eliminable by row
// operations or surviving in echelon form (a block boundary separates the
// entry and its column-pivot's reference flag from both pivots of its row),
// and checks the survivors are exactly the labeled entries, |mu| of them
// among the stars.
SurvivorResult echelon_survivor_check(LieType t, const SignedPerm& w, const SignedPerm& v);
SurvivorResult echelon_survivor_check(const WeakTriple& wt, const SignedPerm& v);

std::string render(const CellMatrix& m);
// {"rows":..,"cols":..,"blocks":[..],"cells":[{"row":..,"col":..,"kind":"pivot",
//  "sign":..,"label":..,"bullet":..},...]}; zeros are omitted
std::string matrix_json(const CellMatrix& m);

// rank of a matrix over F_p (Gaussian elimination); destroys its argument
int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

}  // namespace vexmult
